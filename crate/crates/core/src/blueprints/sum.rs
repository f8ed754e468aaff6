use std::fmt;

use super::{Blueprint, Scalar};
use crate::error::Result;

/// Element of the ambient semiring `B⁺`: a finite multiset of nonzero
/// monoid elements, kept sorted so that equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FormalSum {
    terms: Vec<Scalar>,
}

impl FormalSum {
    /// The empty sum, i.e. `0 ∈ B⁺`.
    pub fn zero() -> Self {
        FormalSum { terms: Vec::new() }
    }

    /// Normalizes an arbitrary term list: drops zeros and sorts.
    pub(crate) fn from_terms_unchecked(mut terms: Vec<Scalar>) -> Self {
        terms.retain(|t| !t.is_zero());
        terms.sort();
        FormalSum { terms }
    }

    pub fn terms(&self) -> &[Scalar] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term of a one-term sum.
    pub fn as_monomial(&self) -> Option<&Scalar> {
        match self.terms.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Multiset union.
    pub(crate) fn merged(&self, other: &FormalSum) -> FormalSum {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            if self.terms[i] <= other.terms[j] {
                terms.push(self.terms[i].clone());
                i += 1;
            } else {
                terms.push(other.terms[j].clone());
                j += 1;
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        FormalSum { terms }
    }

    /// `self − other` as multisets, if `other ⊆ self`.
    pub fn checked_sub(&self, other: &FormalSum) -> Option<FormalSum> {
        let mut rest = Vec::with_capacity(self.len());
        let mut j = 0;
        for t in &self.terms {
            if j < other.terms.len() && *t == other.terms[j] {
                j += 1;
            } else if j < other.terms.len() && other.terms[j] < *t {
                return None;
            } else {
                rest.push(t.clone());
            }
        }
        (j == other.terms.len()).then_some(FormalSum { terms: rest })
    }

    pub fn count(&self, a: &Scalar) -> usize {
        self.terms.iter().filter(|t| *t == a).count()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Blueprint {
    /// Builds a formal sum from monoid elements, dropping zeros.
    pub fn sum<I: IntoIterator<Item = Scalar>>(&self, terms: I) -> Result<FormalSum> {
        let terms: Vec<Scalar> = terms.into_iter().collect();
        for t in &terms {
            self.check(t)?;
        }
        Ok(FormalSum::from_terms_unchecked(terms))
    }

    pub fn monomial(&self, a: Scalar) -> Result<FormalSum> {
        self.sum([a])
    }

    pub(crate) fn check_sum(&self, x: &FormalSum) -> Result<()> {
        x.terms().iter().try_for_each(|t| self.check(t))
    }

    /// Addition in `B⁺` (multiset union).
    pub fn sum_add(&self, x: &FormalSum, y: &FormalSum) -> Result<FormalSum> {
        self.check_sum(x)?;
        self.check_sum(y)?;
        Ok(x.merged(y))
    }

    /// Multiplication in `B⁺`: distribute and drop zero products.
    pub fn sum_mul(&self, x: &FormalSum, y: &FormalSum) -> Result<FormalSum> {
        self.check_sum(x)?;
        self.check_sum(y)?;
        Ok(self.sum_product(x, y))
    }

    pub(crate) fn sum_product(&self, x: &FormalSum, y: &FormalSum) -> FormalSum {
        let mut terms = Vec::with_capacity(x.len() * y.len());
        for a in x.terms() {
            for b in y.terms() {
                terms.push(self.product(a, b));
            }
        }
        FormalSum::from_terms_unchecked(terms)
    }

    /// `a · x` for a monoid element `a`.
    pub fn sum_scale(&self, a: &Scalar, x: &FormalSum) -> Result<FormalSum> {
        self.check(a)?;
        self.check_sum(x)?;
        Ok(self.scaled(a, x))
    }

    pub(crate) fn scaled(&self, a: &Scalar, x: &FormalSum) -> FormalSum {
        FormalSum::from_terms_unchecked(x.terms().iter().map(|t| self.product(a, t)).collect())
    }

    /// `ε^parity · x`.
    pub(crate) fn eps_scaled(&self, parity: u32, x: &FormalSum) -> FormalSum {
        if parity.is_multiple_of(2) {
            x.clone()
        } else {
            self.scaled(&self.eps(), x)
        }
    }

    /// `k · 1` as a formal sum.
    pub fn natural(&self, k: usize) -> FormalSum {
        FormalSum::from_terms_unchecked(vec![self.one(); k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blueprints::Sign;

    #[test]
    fn addition_is_multiset_union() {
        let f = Blueprint::f1pm();
        let one = f.one();
        let x = f.monomial(one.clone()).unwrap();
        let y = f.sum([one.clone(), one.clone()]).unwrap();
        let z = f.sum_add(&x, &y).unwrap();
        assert_eq!(z.terms(), &[one.clone(), one.clone(), one]);
    }

    #[test]
    fn one_plus_eps_squared() {
        let f = Blueprint::f1pm();
        let x = f.sum([f.one(), f.eps()]).unwrap();
        let sq = f.sum_mul(&x, &x).unwrap();
        let expected = f.sum([f.one(), f.one(), f.eps(), f.eps()]).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn zero_sum_absorbs_products() {
        let f = Blueprint::f1pm();
        let x = f.sum([f.one(), f.eps(), f.eps()]).unwrap();
        assert!(f.sum_mul(&x, &FormalSum::zero()).unwrap().is_zero());
    }

    #[test]
    fn zeros_are_dropped() {
        let f = Blueprint::f1pm();
        let x = f.sum([Scalar::Sign(Sign::Zero), f.one()]).unwrap();
        assert_eq!(x.len(), 1);
        let g2 = Blueprint::gf(2).unwrap();
        let y = g2.sum([Scalar::Residue(1), Scalar::Residue(1)]).unwrap();
        let z = g2.sum([Scalar::Residue(0)]).unwrap();
        assert!(g2.sum_mul(&y, &z).unwrap().is_zero());
    }

    #[test]
    fn multiset_difference() {
        let f = Blueprint::f1pm();
        let big = f.sum([f.one(), f.one(), f.eps()]).unwrap();
        let small = f.sum([f.one(), f.eps()]).unwrap();
        assert_eq!(big.checked_sub(&small).unwrap(), f.monomial(f.one()).unwrap());
        assert!(small.checked_sub(&big).is_none());
        let eps2 = f.sum([f.eps(), f.eps()]).unwrap();
        assert!(big.checked_sub(&eps2).is_none());
    }

    #[test]
    fn rejects_foreign_terms() {
        let f = Blueprint::f1pm();
        let g = Blueprint::gf(3).unwrap();
        let x = g.monomial(Scalar::Residue(2)).unwrap();
        assert!(f.sum_add(&x, &FormalSum::zero()).is_err());
        assert!(f.sum([Scalar::Residue(1)]).is_err());
    }
}
