//! Ordered blueprints: the shipped presets, formal sums in the ambient
//! semiring, their order decision rules and a bounded closure engine for
//! generated preorders.
//!
//! Every preset is an F1±-algebra, i.e. it carries a distinguished `ε`
//! with `ε² = 1` and `0 ≤ 1 + ε`.

mod closure;
mod order;
mod scalar;
mod sum;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use closure::{closure_decide_leq, preset_relations, Budget, ClosureVerdict, RelationSet};
pub use order::Decision;
pub use scalar::{Scalar, Sign, Tropical};
pub use sum::FormalSum;

use crate::error::{Error, Result};
use crate::oracles::arith::{Field, FieldElem, Semifield, SemifieldElem};

/// Preset descriptor, serialized as `{"preset":"gf","p":3}` and friends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "lowercase")]
pub enum Preset {
    /// `F1± = ({0, 1, ε}, N ⊕ N·ε, ⟨0 ≤ 1 + ε⟩)`.
    F1pm,
    /// Monomial blueprint of the prime field `GF(p)`.
    Gf { p: u32 },
    /// Monomial blueprint of `Q`.
    Rational,
    /// Monomial blueprint of the two-element idempotent semifield.
    Boolean,
    /// Monomial blueprint of the max-plus semifield over `Q`.
    Maxplus,
}

impl Preset {
    pub fn name(&self) -> String {
        match self {
            Preset::F1pm => "f1pm".into(),
            Preset::Gf { p } => format!("gf{p}"),
            Preset::Rational => "rational".into(),
            Preset::Boolean => "boolean".into(),
            Preset::Maxplus => "maxplus".into(),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// Accepts `f1pm`, `gf3`, `gf:3`, `rational`, `boolean`, `maxplus`, or
    /// the JSON descriptor.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        match s.to_ascii_lowercase().as_str() {
            "f1pm" | "f1" => Ok(Preset::F1pm),
            "rational" | "q" => Ok(Preset::Rational),
            "boolean" | "bool" => Ok(Preset::Boolean),
            "maxplus" | "max-plus" | "tropical" => Ok(Preset::Maxplus),
            other => {
                let digits = other
                    .strip_prefix("gf:")
                    .or_else(|| other.strip_prefix("gf"))
                    .ok_or_else(|| Error::UnknownPreset(s.to_string()))?;
                let p = digits
                    .parse()
                    .map_err(|_| Error::UnknownPreset(s.to_string()))?;
                Ok(Preset::Gf { p })
            }
        }
    }
}

/// Coarse classification of a preset's additive structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetKind {
    Sign,
    Field,
    Idempotent,
}

/// A concrete ordered blueprint with its arithmetic and order procedure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Blueprint {
    preset: Preset,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds a preset instance.
pub fn make_preset(preset: Preset) -> Result<Blueprint> {
    Blueprint::new(preset)
}

impl Blueprint {
    pub fn new(preset: Preset) -> Result<Self> {
        if let Preset::Gf { p } = preset {
            if !is_prime(p) || p > 13 {
                return Err(Error::NonPrime(p));
            }
        }
        Ok(Blueprint { preset })
    }

    pub fn f1pm() -> Self {
        Blueprint { preset: Preset::F1pm }
    }

    pub fn gf(p: u32) -> Result<Self> {
        Self::new(Preset::Gf { p })
    }

    pub fn rational() -> Self {
        Blueprint { preset: Preset::Rational }
    }

    pub fn boolean() -> Self {
        Blueprint { preset: Preset::Boolean }
    }

    pub fn maxplus() -> Self {
        Blueprint { preset: Preset::Maxplus }
    }

    pub fn preset(&self) -> Preset {
        self.preset
    }

    pub fn kind(&self) -> PresetKind {
        match self.preset {
            Preset::F1pm => PresetKind::Sign,
            Preset::Gf { .. } | Preset::Rational => PresetKind::Field,
            Preset::Boolean | Preset::Maxplus => PresetKind::Idempotent,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.preset {
            Preset::F1pm => Scalar::Sign(Sign::Zero),
            Preset::Gf { .. } => Scalar::Residue(0),
            Preset::Rational => Scalar::Rational(BigRational::zero()),
            Preset::Boolean => Scalar::Bool(false),
            Preset::Maxplus => Scalar::Tropical(Tropical::NegInf),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.preset {
            Preset::F1pm => Scalar::Sign(Sign::One),
            Preset::Gf { .. } => Scalar::Residue(1),
            Preset::Rational => Scalar::Rational(BigRational::one()),
            Preset::Boolean => Scalar::Bool(true),
            Preset::Maxplus => Scalar::Tropical(Tropical::Finite(BigRational::zero())),
        }
    }

    /// The distinguished `ε`: `-1` in field presets, `1` in idempotent ones.
    pub fn eps(&self) -> Scalar {
        match self.preset {
            Preset::F1pm => Scalar::Sign(Sign::Eps),
            Preset::Gf { p } => Scalar::Residue(p - 1),
            Preset::Rational => Scalar::Rational(-BigRational::one()),
            Preset::Boolean | Preset::Maxplus => self.one(),
        }
    }

    /// Membership of `a` in this preset's underlying monoid.
    pub fn contains(&self, a: &Scalar) -> bool {
        matches!(
            (self.preset, a),
            (Preset::F1pm, Scalar::Sign(_))
                | (Preset::Rational, Scalar::Rational(_))
                | (Preset::Boolean, Scalar::Bool(_))
                | (Preset::Maxplus, Scalar::Tropical(_))
        ) || matches!((self.preset, a), (Preset::Gf { p }, Scalar::Residue(v)) if *v < p)
    }

    pub(crate) fn check(&self, a: &Scalar) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::InstanceMismatch(a.to_string(), self.preset.name()))
        }
    }

    /// Monoid product. Both operands must belong to this instance.
    pub fn scalar_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.product(a, b))
    }

    /// Product of two members; callers guarantee membership.
    pub(crate) fn product(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Sign(x), Scalar::Sign(y)) => Scalar::Sign(match (x, y) {
                (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
                (Sign::One, s) | (s, Sign::One) => *s,
                (Sign::Eps, Sign::Eps) => Sign::One,
            }),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let Preset::Gf { p } = self.preset else {
                    unreachable!("residue outside a GF preset")
                };
                Scalar::Residue(((*x as u64 * *y as u64) % p as u64) as u32)
            }
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x && *y),
            (Scalar::Tropical(x), Scalar::Tropical(y)) => Scalar::Tropical(match (x, y) {
                (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x + y),
                _ => Tropical::NegInf,
            }),
            _ => unreachable!("mixed carriers {} and {}", a.kind_name(), b.kind_name()),
        }
    }

    /// `ε^parity · a`, with the exponent reduced mod 2.
    pub(crate) fn eps_pow_times(&self, parity: u32, a: &Scalar) -> Scalar {
        if parity.is_multiple_of(2) {
            a.clone()
        } else {
            self.product(&self.eps(), a)
        }
    }

    pub fn inverse(&self, a: &Scalar) -> Option<Scalar> {
        if !self.contains(a) || a.is_zero() {
            return None;
        }
        Some(match a {
            Scalar::Sign(s) => Scalar::Sign(*s),
            Scalar::Residue(_) => {
                let field = self.field().expect("GF preset has a field");
                match field.inv(&self.to_field_elem(a)) {
                    Some(FieldElem::Mod(v)) => Scalar::Residue(v),
                    _ => return None,
                }
            }
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Bool(_) => Scalar::Bool(true),
            Scalar::Tropical(Tropical::Finite(q)) => Scalar::Tropical(Tropical::Finite(-q)),
            Scalar::Tropical(Tropical::NegInf) => return None,
        })
    }

    /// `a ∈ B^×`.
    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inverse(a).is_some()
    }

    /// The whole underlying monoid in ascending order, for finite presets.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.preset {
            Preset::F1pm => Some(vec![
                Scalar::Sign(Sign::Zero),
                Scalar::Sign(Sign::One),
                Scalar::Sign(Sign::Eps),
            ]),
            Preset::Gf { p } => Some((0..p).map(Scalar::Residue).collect()),
            Preset::Boolean => Some(vec![Scalar::Bool(false), Scalar::Bool(true)]),
            Preset::Rational | Preset::Maxplus => None,
        }
    }

    pub fn units(&self) -> Option<Vec<Scalar>> {
        self.elements()
            .map(|els| els.into_iter().filter(|a| self.is_unit(a)).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    /// Parses the string form of a scalar (`"0"`, `"1"`, `"eps"`, residues,
    /// rationals `a/b`, max-plus `q:a/b` and `q:-inf`).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("`{s}` is not a {} scalar", self.preset.name()));
        if s == "eps" {
            return Ok(self.eps());
        }
        let v = match self.preset {
            Preset::F1pm => match s {
                "0" => Scalar::Sign(Sign::Zero),
                "1" => Scalar::Sign(Sign::One),
                _ => return Err(bad()),
            },
            Preset::Gf { p } => {
                let v: i64 = s.parse().map_err(|_| bad())?;
                Scalar::Residue(v.rem_euclid(p as i64) as u32)
            }
            Preset::Rational => Scalar::Rational(parse_rational(s).ok_or_else(bad)?),
            Preset::Boolean => match s {
                "0" => Scalar::Bool(false),
                "1" => Scalar::Bool(true),
                _ => return Err(bad()),
            },
            Preset::Maxplus => match s {
                "0" | "q:-inf" => Scalar::Tropical(Tropical::NegInf),
                "1" => self.one(),
                _ => {
                    let body = s.strip_prefix("q:").ok_or_else(bad)?;
                    Scalar::Tropical(Tropical::Finite(parse_rational(body).ok_or_else(bad)?))
                }
            },
        };
        Ok(v)
    }

    pub fn format_scalar(&self, a: &Scalar) -> String {
        a.to_string()
    }

    /// The field this monomial blueprint was built from.
    pub fn field(&self) -> Option<Field> {
        match self.preset {
            Preset::Gf { p } => Some(Field::Zmod(p)),
            Preset::Rational => Some(Field::Rationals),
            _ => None,
        }
    }

    /// The idempotent semifield this monomial blueprint was built from.
    pub fn semifield(&self) -> Option<Semifield> {
        match self.preset {
            Preset::Boolean => Some(Semifield::Boolean),
            Preset::Maxplus => Some(Semifield::MaxPlus),
            _ => None,
        }
    }

    pub(crate) fn to_field_elem(&self, a: &Scalar) -> FieldElem {
        match a {
            Scalar::Residue(v) => FieldElem::Mod(*v),
            Scalar::Rational(q) => FieldElem::Q(q.clone()),
            _ => unreachable!("not a field scalar"),
        }
    }

    /// Embeds a field value back into the underlying monoid of `K^mon`.
    pub fn from_field_elem(&self, a: &FieldElem) -> Result<Scalar> {
        let s = match a {
            FieldElem::Mod(v) => Scalar::Residue(*v),
            FieldElem::Q(q) => Scalar::Rational(q.clone()),
        };
        self.check(&s)?;
        Ok(s)
    }

    pub(crate) fn to_semifield_elem(&self, a: &Scalar) -> SemifieldElem {
        match a {
            Scalar::Bool(b) => SemifieldElem::Bool(*b),
            Scalar::Tropical(Tropical::NegInf) => SemifieldElem::MaxPlus(None),
            Scalar::Tropical(Tropical::Finite(q)) => SemifieldElem::MaxPlus(Some(q.clone())),
            _ => unreachable!("not a semifield scalar"),
        }
    }

    pub fn from_semifield_elem(&self, a: &SemifieldElem) -> Result<Scalar> {
        let s = match a {
            SemifieldElem::Bool(b) => Scalar::Bool(*b),
            SemifieldElem::MaxPlus(None) => Scalar::Tropical(Tropical::NegInf),
            SemifieldElem::MaxPlus(Some(q)) => Scalar::Tropical(Tropical::Finite(q.clone())),
        };
        self.check(&s)?;
        Ok(s)
    }

    /// Evaluates a formal sum in the field underlying `K^mon`. This is the
    /// identification of the algebraic hull's ambient semiring with `K`.
    pub fn hull_scalar(&self, x: &FormalSum) -> Result<FieldElem> {
        let field = self.field().ok_or_else(|| Error::WrongPresetKind {
            expected: "field",
            got: self.preset.name(),
        })?;
        self.check_sum(x)?;
        Ok(x
            .terms()
            .iter()
            .fold(field.zero(), |acc, t| field.add(&acc, &self.to_field_elem(t))))
    }

    /// Evaluates a formal sum in the idempotent semifield underlying
    /// `S^mon`, i.e. `[Σ nᵢ·sᵢ] ↦ Σ nᵢ sᵢ`.
    pub fn idem_collapse(&self, x: &FormalSum) -> Result<SemifieldElem> {
        let sf = self.semifield().ok_or_else(|| Error::WrongPresetKind {
            expected: "idempotent semifield",
            got: self.preset.name(),
        })?;
        self.check_sum(x)?;
        Ok(x
            .terms()
            .iter()
            .fold(sf.zero(), |acc, t| sf.add(&acc, &self.to_semifield_elem(t))))
    }
}

impl fmt::Display for Blueprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.preset.name())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// A representative of every shipped preset (`GF(p)` for p = 2, 3, 5).
pub fn standard_presets() -> Vec<Blueprint> {
    vec![
        Blueprint::f1pm(),
        Blueprint::gf(2).expect("prime"),
        Blueprint::gf(3).expect("prime"),
        Blueprint::gf(5).expect("prime"),
        Blueprint::rational(),
        Blueprint::boolean(),
        Blueprint::maxplus(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    #[test]
    fn eps_squares_to_one_everywhere() {
        for inst in standard_presets() {
            let e = inst.eps();
            assert_eq!(inst.scalar_mul(&e, &e).unwrap(), inst.one(), "{inst}");
        }
    }

    #[test]
    fn zero_absorbs() {
        for inst in standard_presets() {
            let samples = inst.elements().unwrap_or_else(|| vec![inst.one(), inst.eps()]);
            for x in samples {
                assert_eq!(inst.scalar_mul(&inst.zero(), &x).unwrap(), inst.zero());
            }
        }
    }

    #[test]
    fn gf3_two_times_two() {
        let inst = Blueprint::gf(3).unwrap();
        let two = Scalar::Residue(2);
        assert_eq!(inst.scalar_mul(&two, &two).unwrap(), Scalar::Residue(1));
    }

    #[test]
    fn mixed_instance_is_rejected() {
        let inst = Blueprint::gf(3).unwrap();
        assert!(matches!(
            inst.scalar_mul(&Scalar::Sign(Sign::Eps), &Scalar::Residue(1)),
            Err(Error::InstanceMismatch(..))
        ));
        assert!(inst.scalar_mul(&Scalar::Residue(3), &Scalar::Residue(1)).is_err());
    }

    #[test]
    fn presets_wire_correctly() {
        let f = Blueprint::f1pm();
        assert_eq!(f.elements().unwrap().len(), 3);
        assert_eq!(
            f.units().unwrap(),
            vec![Scalar::Sign(Sign::One), Scalar::Sign(Sign::Eps)]
        );
        let g2 = Blueprint::gf(2).unwrap();
        assert_eq!(g2.eps(), g2.one());
        let b = Blueprint::boolean();
        assert_eq!(b.elements().unwrap().len(), 2);
        assert_eq!(b.eps(), b.one());
        assert_eq!(Blueprint::maxplus().eps(), Blueprint::maxplus().one());
        assert!(matches!(Blueprint::gf(4), Err(Error::NonPrime(4))));
        assert!(matches!(Blueprint::gf(17), Err(Error::NonPrime(17))));
        assert!("gf9".parse::<Preset>().is_ok());
        assert!(Blueprint::new("gf9".parse().unwrap()).is_err());
        assert!(matches!("nonsense".parse::<Preset>(), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn units() {
        let f = Blueprint::f1pm();
        assert!(f.is_unit(&f.eps()));
        for inst in standard_presets() {
            assert!(!inst.is_unit(&inst.zero()));
        }
        let g5 = Blueprint::gf(5).unwrap();
        for a in 1..5 {
            let x = Scalar::Residue(a);
            let found = (1..5).any(|b| g5.scalar_mul(&x, &Scalar::Residue(b)).unwrap() == g5.one());
            assert!(found && g5.is_unit(&x));
        }
    }

    #[test]
    fn preset_json_descriptors() {
        let cases = [
            (r#"{"preset":"f1pm"}"#, Preset::F1pm),
            (r#"{"preset":"gf","p":3}"#, Preset::Gf { p: 3 }),
            (r#"{"preset":"boolean"}"#, Preset::Boolean),
            (r#"{"preset":"maxplus"}"#, Preset::Maxplus),
            (r#"{"preset":"rational"}"#, Preset::Rational),
        ];
        for (text, preset) in cases {
            assert_eq!(text.parse::<Preset>().unwrap(), preset);
            assert_eq!(serde_json::to_string(&preset).unwrap(), text);
        }
    }

    #[test]
    fn scalar_strings() {
        let mp = Blueprint::maxplus();
        let x = mp.parse_scalar("q:-3/4").unwrap();
        assert_eq!(x.to_string(), "q:-3/4");
        assert_eq!(mp.parse_scalar("q:-inf").unwrap(), mp.zero());
        assert_eq!(mp.parse_scalar("q:0").unwrap(), mp.one());
        let g = Blueprint::gf(3).unwrap();
        assert_eq!(g.parse_scalar("eps").unwrap(), Scalar::Residue(2));
        assert_eq!(Blueprint::rational().parse_scalar("6/4").unwrap().to_string(), "3/2");
        assert!(Blueprint::f1pm().parse_scalar("2").is_err());
    }

    #[test]
    fn hull_and_idem_evaluate() {
        let g3 = Blueprint::gf(3).unwrap();
        let two_eps = g3.sum([g3.eps(), g3.eps()]).unwrap();
        assert_eq!(g3.hull_scalar(&two_eps).unwrap(), FieldElem::Mod(1));
        assert_eq!(g3.hull_scalar(&FormalSum::zero()).unwrap(), FieldElem::Mod(0));
        let mp = Blueprint::maxplus();
        let t = |v: i64| Scalar::Tropical(Tropical::Finite(q(v)));
        let s = mp.sum([t(5), t(3), t(5)]).unwrap();
        assert_eq!(mp.idem_collapse(&s).unwrap(), SemifieldElem::MaxPlus(Some(q(5))));
        assert!(matches!(
            g3.idem_collapse(&two_eps),
            Err(Error::WrongPresetKind { .. })
        ));
        assert!(mp.hull_scalar(&s).is_err());
    }
}
