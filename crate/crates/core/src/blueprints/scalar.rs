use std::fmt;

use num_rational::BigRational;

/// Carrier of the sign blueprint `{0, 1, ε}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Zero,
    One,
    Eps,
}

/// Max-plus value: `NegInf` is the absorbing zero, `Finite(0)` is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tropical {
    NegInf,
    Finite(BigRational),
}

/// An element of the underlying monoid of one of the shipped presets.
///
/// The variant identifies the carrier; residues do not record their modulus,
/// so membership in a particular `GF(p)` is checked by the owning
/// [`Blueprint`](super::Blueprint).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Sign(Sign),
    Residue(u32),
    Rational(BigRational),
    Bool(bool),
    Tropical(Tropical),
}

impl Scalar {
    /// True for the absorbing element of whichever carrier this value lives in.
    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match self {
            Scalar::Sign(s) => *s == Sign::Zero,
            Scalar::Residue(v) => *v == 0,
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Bool(b) => !*b,
            Scalar::Tropical(t) => *t == Tropical::NegInf,
        }
    }

    pub(crate) fn kind_name(&self) -> &'static str {
        match self {
            Scalar::Sign(_) => "sign",
            Scalar::Residue(_) => "residue",
            Scalar::Rational(_) => "rational",
            Scalar::Bool(_) => "boolean",
            Scalar::Tropical(_) => "max-plus",
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Sign(Sign::Zero) => write!(f, "0"),
            Scalar::Sign(Sign::One) => write!(f, "1"),
            Scalar::Sign(Sign::Eps) => write!(f, "eps"),
            Scalar::Residue(v) => write!(f, "{v}"),
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Bool(b) => write!(f, "{}", u8::from(*b)),
            Scalar::Tropical(Tropical::NegInf) => write!(f, "q:-inf"),
            Scalar::Tropical(Tropical::Finite(q)) => write!(f, "q:{q}"),
        }
    }
}
