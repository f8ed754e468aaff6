//! Plain ring and semifield arithmetic used as ground truth.
//!
//! Nothing here knows about blueprints or formal sums: values are ordinary
//! elements of `Z/p`, `Q`, the Boolean semifield or the max-plus semifield.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring (always a field here) with exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Zmod(u32),
    Rationals,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldElem {
    Mod(u32),
    Q(BigRational),
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Mod(v) => write!(f, "{v}"),
            FieldElem::Q(q) => write!(f, "{q}"),
        }
    }
}

impl Field {
    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Zmod(_) => FieldElem::Mod(0),
            Field::Rationals => FieldElem::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Zmod(p) => FieldElem::Mod(1 % p),
            Field::Rationals => FieldElem::Q(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match self {
            Field::Zmod(p) => FieldElem::Mod(v.rem_euclid(*p as i64) as u32),
            Field::Rationals => FieldElem::Q(BigRational::from_integer(v.into())),
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Mod(v) => *v == 0,
            FieldElem::Q(q) => q.is_zero(),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Zmod(p), FieldElem::Mod(x), FieldElem::Mod(y)) => {
                FieldElem::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (Field::Rationals, FieldElem::Q(x), FieldElem::Q(y)) => FieldElem::Q(x + y),
            _ => panic!("field element of the wrong kind"),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (Field::Zmod(p), FieldElem::Mod(x)) => FieldElem::Mod((p - x % p) % p),
            (Field::Rationals, FieldElem::Q(x)) => FieldElem::Q(-x),
            _ => panic!("field element of the wrong kind"),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Zmod(p), FieldElem::Mod(x), FieldElem::Mod(y)) => {
                FieldElem::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Rationals, FieldElem::Q(x), FieldElem::Q(y)) => FieldElem::Q(x * y),
            _ => panic!("field element of the wrong kind"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Zmod(p), FieldElem::Mod(x)) => {
                // Fermat: x^(p-2)
                let (p, mut base, mut exp, mut acc) = (*p as u64, *x as u64, *p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(FieldElem::Mod(acc as u32))
            }
            (Field::Rationals, FieldElem::Q(x)) => Some(FieldElem::Q(x.recip())),
            _ => panic!("field element of the wrong kind"),
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a FieldElem>>(&self, it: I) -> FieldElem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn determinant(&self, rows: &[Vec<FieldElem>]) -> FieldElem {
        let n = rows.len();
        let mut m: Vec<Vec<FieldElem>> = rows.to_vec();
        let mut det = self.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !self.is_zero(&m[r][col])) else {
                return self.zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = self.neg(&det);
            }
            let pv = m[col][col].clone();
            det = self.mul(&det, &pv);
            let inv = self.inv(&pv).expect("nonzero pivot");
            for r in (col + 1)..n {
                if self.is_zero(&m[r][col]) {
                    continue;
                }
                let factor = self.mul(&m[r][col], &inv);
                let (top, bottom) = m.split_at_mut(r);
                for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *dst = self.sub(dst, &self.mul(&factor, src));
                }
            }
        }
        det
    }
}

/// An idempotent semifield.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semifield {
    Boolean,
    MaxPlus,
}

/// Semifield value; `MaxPlus(None)` is the bottom element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemifieldElem {
    Bool(bool),
    MaxPlus(Option<BigRational>),
}

impl fmt::Display for SemifieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemifieldElem::Bool(b) => write!(f, "{}", u8::from(*b)),
            SemifieldElem::MaxPlus(None) => write!(f, "-inf"),
            SemifieldElem::MaxPlus(Some(q)) => write!(f, "{q}"),
        }
    }
}

impl Semifield {
    pub fn zero(&self) -> SemifieldElem {
        match self {
            Semifield::Boolean => SemifieldElem::Bool(false),
            Semifield::MaxPlus => SemifieldElem::MaxPlus(None),
        }
    }

    pub fn one(&self) -> SemifieldElem {
        match self {
            Semifield::Boolean => SemifieldElem::Bool(true),
            Semifield::MaxPlus => SemifieldElem::MaxPlus(Some(BigRational::zero())),
        }
    }

    pub fn is_zero(&self, a: &SemifieldElem) -> bool {
        *a == self.zero()
    }

    pub fn add(&self, a: &SemifieldElem, b: &SemifieldElem) -> SemifieldElem {
        match (a, b) {
            (SemifieldElem::Bool(x), SemifieldElem::Bool(y)) => SemifieldElem::Bool(*x || *y),
            (SemifieldElem::MaxPlus(x), SemifieldElem::MaxPlus(y)) => {
                SemifieldElem::MaxPlus(match (x, y) {
                    (None, v) | (v, None) => v.clone(),
                    (Some(x), Some(y)) => Some(if x >= y { x.clone() } else { y.clone() }),
                })
            }
            _ => panic!("semifield element of the wrong kind"),
        }
    }

    pub fn mul(&self, a: &SemifieldElem, b: &SemifieldElem) -> SemifieldElem {
        match (a, b) {
            (SemifieldElem::Bool(x), SemifieldElem::Bool(y)) => SemifieldElem::Bool(*x && *y),
            (SemifieldElem::MaxPlus(x), SemifieldElem::MaxPlus(y)) => {
                SemifieldElem::MaxPlus(match (x, y) {
                    (Some(x), Some(y)) => Some(x + y),
                    _ => None,
                })
            }
            _ => panic!("semifield element of the wrong kind"),
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a SemifieldElem>>(&self, it: I) -> SemifieldElem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}
