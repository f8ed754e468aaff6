//! The tropical Grassmann algebra: the symmetric algebra of `Sⁿ` modulo
//! `e_i² = 0`, over an idempotent semifield.

use std::collections::BTreeMap;

use super::arith::{Semifield, SemifieldElem};
use crate::error::{Error, Result};
use crate::subsets::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalExteriorElement {
    semifield: Semifield,
    n: usize,
    terms: BTreeMap<IndexSet, SemifieldElem>,
}

impl TropicalExteriorElement {
    pub fn zero(semifield: Semifield, n: usize) -> Self {
        TropicalExteriorElement { semifield, n, terms: BTreeMap::new() }
    }

    pub fn basis(semifield: Semifield, n: usize, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(semifield, n);
        out.insert(IndexSet::from_indices(indices, n)?, semifield.one());
        Ok(out)
    }

    pub fn semifield(&self) -> Semifield {
        self.semifield
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Adds `v · e_I` (semifield addition into the existing coefficient).
    pub fn insert(&mut self, set: IndexSet, v: SemifieldElem) {
        let cur = self.terms.remove(&set).unwrap_or_else(|| self.semifield.zero());
        let new = self.semifield.add(&cur, &v);
        if !self.semifield.is_zero(&new) {
            self.terms.insert(set, new);
        }
    }

    pub fn coeff(&self, set: IndexSet) -> SemifieldElem {
        self.terms.get(&set).cloned().unwrap_or_else(|| self.semifield.zero())
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, SemifieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.semifield != other.semifield {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, a: &SemifieldElem) -> Self {
        let mut out = Self::zero(self.semifield, self.n);
        for (k, v) in &self.terms {
            out.insert(*k, self.semifield.mul(a, v));
        }
        out
    }
}

/// Symmetric product with `e_i ∧ e_i = 0`.
pub fn tropical_wedge(x: &TropicalExteriorElement, y: &TropicalExteriorElement) -> Result<TropicalExteriorElement> {
    if x.n != y.n || x.semifield != y.semifield {
        return Err(Error::DimensionMismatch(x.n, y.n));
    }
    let s = x.semifield;
    let mut out = TropicalExteriorElement::zero(s, x.n);
    for (i, a) in &x.terms {
        for (j, b) in &y.terms {
            if i.indices().iter().any(|k| j.contains(*k)) {
                continue;
            }
            out.insert(i.union(*j), s.mul(a, b));
        }
    }
    Ok(out)
}
