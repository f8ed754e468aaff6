//! Order decision rules of the shipped presets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::closure::{closure_decide_leq, preset_relations, Budget, ClosureVerdict};
use super::{Blueprint, FormalSum, Preset, PresetKind, Scalar, Sign, Tropical};
use crate::error::{Error, Result};

/// Three-valued answer of an order query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Holds,
    Fails,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Holds
        } else {
            Decision::Fails
        }
    }

    /// Conjunction: any failure wins, then any unknown.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::Fails, _) | (_, Decision::Fails) => Decision::Fails,
            (Decision::Unknown, _) | (_, Decision::Unknown) => Decision::Unknown,
            _ => Decision::Holds,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Holds => "holds",
            Decision::Fails => "fails",
            Decision::Unknown => "unknown",
        })
    }
}

impl Blueprint {
    /// Decides `lhs ≤ rhs` in the preset's order.
    ///
    /// Exact on `x ≤ x`, on every relation for `f1pm` and `boolean`, and on
    /// relations whose left side has at most one term for the field and
    /// max-plus presets. Other shapes return
    /// [`Error::UnsupportedRelation`].
    pub fn instance_leq(&self, lhs: &FormalSum, rhs: &FormalSum) -> Result<bool> {
        self.check_sum(lhs)?;
        self.check_sum(rhs)?;
        if lhs == rhs {
            return Ok(true);
        }
        match self.preset {
            Preset::F1pm => Ok(match rhs.checked_sub(lhs) {
                // rhs = lhs + k(1 + ε)
                Some(rest) => {
                    rest.count(&Scalar::Sign(Sign::One)) == rest.count(&Scalar::Sign(Sign::Eps))
                }
                None => false,
            }),
            Preset::Boolean => {
                let (cx, cy) = (lhs.len(), rhs.len());
                Ok((cx >= 1 && cy >= cx) || (cx == 0 && cy >= 2))
            }
            Preset::Gf { .. } | Preset::Rational => {
                if lhs.len() > 1 {
                    return Err(self.unsupported(lhs, rhs));
                }
                let field = self.field().expect("field preset");
                let l = self.hull_scalar(lhs)?;
                let r = self.hull_scalar(rhs)?;
                Ok(field.sub(&l, &r) == field.zero())
            }
            Preset::Maxplus => {
                if lhs.len() > 1 {
                    return Err(self.unsupported(lhs, rhs));
                }
                Ok(maxplus_single_leq(lhs.as_monomial(), rhs))
            }
        }
    }

    fn unsupported(&self, lhs: &FormalSum, rhs: &FormalSum) -> Error {
        Error::UnsupportedRelation(self.preset.name(), format!("{lhs} <= {rhs}"))
    }

    /// Decides `0 ≤ x`, the shape every Plücker relation takes. Total for
    /// every preset.
    pub fn zero_leq(&self, x: &FormalSum) -> bool {
        match self.kind() {
            PresetKind::Sign => {
                x.count(&Scalar::Sign(Sign::One)) == x.count(&Scalar::Sign(Sign::Eps))
            }
            PresetKind::Field => {
                let field = self.field().expect("field preset");
                self.hull_scalar(x).map(|v| field.is_zero(&v)).unwrap_or(false)
            }
            PresetKind::Idempotent => max_attained_twice(x),
        }
    }

    /// `instance_leq`, falling back to the closure engine (with the preset's
    /// own generators and the default budget) where the preset rule does not
    /// apply.
    pub fn decide(&self, lhs: &FormalSum, rhs: &FormalSum) -> Result<Decision> {
        match self.instance_leq(lhs, rhs) {
            Ok(b) => Ok(Decision::from_bool(b)),
            Err(Error::UnsupportedRelation(..)) => {
                let mut pool: Vec<Scalar> =
                    lhs.terms().iter().chain(rhs.terms()).cloned().collect();
                pool.sort();
                pool.dedup();
                let budget = Budget::default();
                let gens = preset_relations(self, &pool, 3);
                Ok(match closure_decide_leq(self, &gens, lhs, rhs, budget) {
                    ClosureVerdict::Holds => Decision::Holds,
                    ClosureVerdict::Unknown => Decision::Unknown,
                })
            }
            Err(e) => Err(e),
        }
    }
}

/// True iff the sum is empty or its largest term occurs at least twice.
fn max_attained_twice(x: &FormalSum) -> bool {
    // terms are sorted, so the maximum sits at the end
    match x.terms() {
        [] => true,
        [.., a, b] => a == b,
        [_] => false,
    }
}

/// `b ≤ Σ aᵢ` in `S^mon` for max-plus: the maximum `M` of the right side
/// satisfies `b ≤ M`, and either `b = M` or `M` is attained twice.
fn maxplus_single_leq(lhs: Option<&Scalar>, rhs: &FormalSum) -> bool {
    let b = match lhs {
        Some(Scalar::Tropical(t)) => t.clone(),
        _ => Tropical::NegInf,
    };
    let m = match rhs.terms().last() {
        Some(Scalar::Tropical(t)) => t.clone(),
        _ => Tropical::NegInf,
    };
    b <= m && (b == m || max_attained_twice(rhs))
}
