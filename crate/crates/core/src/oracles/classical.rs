//! The usual exterior algebra `Λ Kⁿ` over a field, with integer signs.

use std::collections::BTreeMap;

use super::arith::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::subsets::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalExteriorElement {
    field: Field,
    n: usize,
    terms: BTreeMap<IndexSet, FieldElem>,
}

impl ClassicalExteriorElement {
    pub fn zero(field: Field, n: usize) -> Self {
        ClassicalExteriorElement { field, n, terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, n: usize, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(field, n);
        out.insert(IndexSet::from_indices(indices, n)?, field.one());
        Ok(out)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Adds `v · e_I`.
    pub fn insert(&mut self, set: IndexSet, v: FieldElem) {
        let cur = self.terms.remove(&set).unwrap_or_else(|| self.field.zero());
        let new = self.field.add(&cur, &v);
        if !self.field.is_zero(&new) {
            self.terms.insert(set, new);
        }
    }

    pub fn coeff(&self, set: IndexSet) -> FieldElem {
        self.terms.get(&set).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, a: &FieldElem) -> Self {
        let mut out = Self::zero(self.field, self.n);
        for (k, v) in &self.terms {
            out.insert(*k, self.field.mul(a, v));
        }
        out
    }
}

/// Sign of the permutation sorting `seq` (distinct entries), by bubble sort.
fn sort_sign(seq: &mut [usize]) -> i64 {
    let mut sign = 1;
    for end in (1..seq.len()).rev() {
        for i in 0..end {
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// Standard alternating product.
pub fn classical_wedge(x: &ClassicalExteriorElement, y: &ClassicalExteriorElement) -> Result<ClassicalExteriorElement> {
    if x.n != y.n || x.field != y.field {
        return Err(Error::DimensionMismatch(x.n, y.n));
    }
    let f = x.field;
    let mut out = ClassicalExteriorElement::zero(f, x.n);
    for (i, a) in &x.terms {
        for (j, b) in &y.terms {
            let mut seq: Vec<usize> = i.indices();
            seq.extend(j.indices());
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != seq.len() {
                continue;
            }
            let sign = sort_sign(&mut seq);
            let set = IndexSet::from_indices(&seq, x.n)?;
            out.insert(set, f.mul(&f.from_i64(sign), &f.mul(a, b)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric_and_alternating() {
        let f = Field::Zmod(5);
        let e1 = ClassicalExteriorElement::basis(f, 3, &[1]).unwrap();
        let e2 = ClassicalExteriorElement::basis(f, 3, &[2]).unwrap();
        let a = classical_wedge(&e1, &e2).unwrap();
        let b = classical_wedge(&e2, &e1).unwrap();
        assert_eq!(a, b.scale(&f.from_i64(-1)));
        let v = e1.add(&e2.scale(&f.from_i64(3))).unwrap();
        assert!(classical_wedge(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn gf3_example() {
        let f = Field::Zmod(3);
        let e1 = ClassicalExteriorElement::basis(f, 2, &[1]).unwrap();
        let e2 = ClassicalExteriorElement::basis(f, 2, &[2]).unwrap();
        let x = e1.add(&e2).unwrap();
        let y = e1.add(&e2.scale(&f.from_i64(-1))).unwrap();
        let w = classical_wedge(&x, &y).unwrap();
        // (e1 + e2)(e1 - e2) = -e12 + e21 = -2 e12 = e12 mod 3
        assert_eq!(w.coeff(IndexSet::from_indices(&[1, 2], 2).unwrap()), FieldElem::Mod(1));
        assert_eq!(w.terms().len(), 1);
    }
}
