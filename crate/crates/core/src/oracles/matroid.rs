//! Matroid and Plücker oracles: the basis-exchange axiom, the tropical
//! Plücker condition and subspace enumeration over prime fields.

use std::collections::BTreeSet;

use super::arith::{Field, FieldElem, Semifield};
use super::tropical::TropicalExteriorElement;
use crate::blueprints::{Blueprint, Scalar};
use crate::error::{Error, Result};
use crate::matroids::{canonical_class, GpFunction};
use crate::subsets::{k_subsets, IndexSet};

/// Basis exchange: for all `A, B` and `a ∈ A ∖ B` there is `b ∈ B ∖ A` with
/// `(A ∖ {a}) ∪ {b}` in the family. An empty family is not a matroid.
pub fn basis_exchange_check(family: &[IndexSet]) -> bool {
    if family.is_empty() {
        return false;
    }
    let set: BTreeSet<IndexSet> = family.iter().copied().collect();
    let d = family[0].len();
    if family.iter().any(|s| s.len() != d) {
        return false;
    }
    set.iter().all(|a| {
        set.iter().all(|b| {
            a.difference(*b)
                .iter()
                .all(|x| b.difference(*a).iter().any(|y| set.contains(&a.remove(x).insert(y))))
        })
    })
}

/// For all `A ∈ ([n] choose d+1)`, `X ∈ ([n] choose d−1)` and `p ∈ A ∖ X`,
/// dropping the `p`-term from `Σ_{i ∈ A∖X} v_{A−i} v_{X+i}` leaves the sum
/// unchanged.
pub fn tropical_plucker_check(v: &TropicalExteriorElement, n: usize, d: usize) -> bool {
    if v.is_zero() || v.terms().keys().any(|k| k.len() != d) {
        return false;
    }
    if d == 0 || d >= n {
        return true;
    }
    let s: Semifield = v.semifield();
    for a in k_subsets(n, d + 1) {
        for x in k_subsets(n, d - 1) {
            let idx: Vec<usize> = a.difference(x).iter().collect();
            let terms: Vec<_> = idx.iter().map(|&i| s.mul(&v.coeff(a.remove(i)), &v.coeff(x.insert(i)))).collect();
            let total = s.sum(terms.iter());
            for p in 0..terms.len() {
                let dropped = s.sum(terms.iter().enumerate().filter(|(q, _)| *q != p).map(|(_, t)| t));
                if dropped != total {
                    return false;
                }
            }
        }
    }
    true
}

fn rref_matrices(p: u32, n: usize, d: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for pivots in k_subsets(n, d) {
        let piv: Vec<usize> = pivots.iter().map(|c| c - 1).collect();
        // free entries: row r, column c > piv[r], c not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let count = (p as u64).pow(free.len() as u32);
        for code in 0..count {
            let mut m = vec![vec![0u32; n]; d];
            for (r, &c) in piv.iter().enumerate() {
                m[r][c] = 1;
            }
            let mut rest = code;
            for &(r, c) in &free {
                m[r][c] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            out.push(m);
        }
    }
    out
}

/// Canonical Plücker coordinates of every `d`-dimensional subspace of
/// `GF(p)ⁿ`, one per reduced row-echelon matrix.
pub fn subspace_plucker_enumerate(p: u32, n: usize, d: usize, cap: u128) -> Result<Vec<GpFunction>> {
    let inst = Blueprint::gf(p)?;
    if d > n {
        return Err(Error::SizeViolation(format!("rank {d} exceeds ground set size {n}")));
    }
    let size = (p as u128).checked_pow((d * n) as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let field = Field::Zmod(p);
    let subsets = k_subsets(n, d);
    let mut out = BTreeSet::new();
    for m in rref_matrices(p, n, d) {
        let values: Vec<Scalar> = subsets
            .iter()
            .map(|s| {
                let sub: Vec<Vec<FieldElem>> = m
                    .iter()
                    .map(|row| s.iter().map(|c| FieldElem::Mod(row[c - 1])).collect())
                    .collect();
                match field.determinant(&sub) {
                    FieldElem::Mod(v) => Scalar::Residue(v),
                    FieldElem::Q(_) => unreachable!("prime field"),
                }
            })
            .collect();
        out.insert(canonical_class(&inst, &GpFunction::new(n, d, values)?)?);
    }
    Ok(out.into_iter().collect())
}
