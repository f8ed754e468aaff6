//! The exterior algebra `Λ Bⁿ` over an F1±-algebra `B`.
//!
//! Elements are kept in normal form with respect to `e_i ⊗ e_i ≡ 0` and
//! `e_i ⊗ e_j ≡ ε e_j ⊗ e_i`: every term is indexed by a strictly increasing
//! index set and the sign of the sorting permutation is absorbed into the
//! coefficient as a power of `ε`. The monomials `e_I` form a basis of the
//! ambient semiring, so equality of elements is equality of coefficient maps.

use std::collections::BTreeMap;

use crate::blueprints::{Blueprint, Decision, FormalSum, Scalar};
use crate::error::{Error, Result};
use crate::oracles::classical::ClassicalExteriorElement;
use crate::oracles::tropical::TropicalExteriorElement;
use crate::subsets::{IndexSet, MAX_N};

/// A single normalized term `c · e_I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeMonomial {
    pub coeff: Scalar,
    pub indices: IndexSet,
}

/// Parity and sorted form of an index sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedPermutation {
    /// The sequence has a repeated index, so its wedge vanishes.
    Repeated,
    /// `odd` is the parity of the inversion count.
    Sorted { indices: IndexSet, odd: bool },
}

/// Sorts an index sequence, tracking the inversion parity.
pub fn sort_with_parity(seq: &[usize], n: usize) -> Result<SignedPermutation> {
    if let Some(&bad) = seq.iter().find(|&&i| i == 0 || i > n || i > MAX_N) {
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    let mut seen = 0u64;
    let mut inversions = 0usize;
    for &i in seq {
        let bit = 1u64 << (i - 1);
        if seen & bit != 0 {
            return Ok(SignedPermutation::Repeated);
        }
        // earlier entries larger than i
        inversions += (seen >> i).count_ones() as usize;
        seen |= bit;
    }
    Ok(SignedPermutation::Sorted { indices: IndexSet::from_bits(seen), odd: inversions % 2 == 1 })
}

/// Normal form of `coeff · e_{s₁} ∧ … ∧ e_{s_k}`; `None` when it vanishes.
pub fn normalize_wedge(inst: &Blueprint, n: usize, seq: &[usize], coeff: &Scalar) -> Result<Option<WedgeMonomial>> {
    inst.check(coeff)?;
    match sort_with_parity(seq, n)? {
        SignedPermutation::Repeated => Ok(None),
        SignedPermutation::Sorted { indices, odd } => {
            if coeff.is_zero() {
                return Ok(None);
            }
            Ok(Some(WedgeMonomial { coeff: inst.eps_pow_times(u32::from(odd), coeff), indices }))
        }
    }
}

/// An element of `(Λ Bⁿ)⁺`: a finite map `I ↦ b_I` with nonzero formal-sum
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExteriorElement {
    n: usize,
    terms: BTreeMap<IndexSet, FormalSum>,
}

/// Position of an element of grade `d` relative to `H_{d,n}` and `K_{d,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkClass {
    /// Some coefficient has more than one term or the element is not
    /// homogeneous of grade `d`.
    OutsideH,
    /// In `H_{d,n}` and some coefficient is a unit.
    InHNotK,
    /// In `K_{d,n}`: every coefficient is a non-unit monoid element.
    InK,
}

impl ExteriorElement {
    pub fn zero(n: usize) -> Self {
        ExteriorElement { n, terms: BTreeMap::new() }
    }

    /// `1 ∈ Λ⁰ Bⁿ ≅ B`.
    pub fn unit(inst: &Blueprint, n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(IndexSet::EMPTY, inst.natural(1));
        ExteriorElement { n, terms }
    }

    /// `e_I` for a strictly increasing (or any repeat-free) index list.
    pub fn basis(inst: &Blueprint, n: usize, indices: &[usize]) -> Result<Self> {
        let set = IndexSet::from_indices(indices, n)?;
        Ok(Self::from_terms_unchecked(n, [(set, inst.natural(1))]))
    }

    /// `Σ c_I e_I` over normalized index sets; equal keys are added.
    pub fn from_terms<I: IntoIterator<Item = (IndexSet, FormalSum)>>(inst: &Blueprint, n: usize, terms: I) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::IndexOutOfRange { index: n, n: MAX_N });
        }
        let terms: Vec<_> = terms.into_iter().collect();
        for (set, c) in &terms {
            if set.max_index() > n {
                return Err(Error::IndexOutOfRange { index: set.max_index(), n });
            }
            inst.check_sum(c)?;
        }
        Ok(Self::from_terms_unchecked(n, terms))
    }

    pub(crate) fn from_terms_unchecked<I: IntoIterator<Item = (IndexSet, FormalSum)>>(n: usize, terms: I) -> Self {
        let mut map: BTreeMap<IndexSet, FormalSum> = BTreeMap::new();
        for (set, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&set) {
                Some(e) => *e = e.merged(&c),
                None => {
                    map.insert(set, c);
                }
            }
        }
        ExteriorElement { n, terms: map }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, FormalSum> {
        &self.terms
    }

    pub fn coeff(&self, set: IndexSet) -> FormalSum {
        self.terms.get(&set).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(d)` when every key has size `d` (the zero element has no grade).
    pub fn pure_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|k| k.len());
        let d = grades.next()?;
        grades.all(|g| g == d).then_some(d)
    }

    /// Restriction to the keys of size `d`.
    pub fn grade(&self, d: usize) -> ExteriorElement {
        ExteriorElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    fn check(&self, inst: &Blueprint, other: &ExteriorElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        for c in self.terms.values().chain(other.terms.values()) {
            inst.check_sum(c)?;
        }
        Ok(())
    }

    pub fn add(&self, inst: &Blueprint, other: &ExteriorElement) -> Result<ExteriorElement> {
        self.check(inst, other)?;
        Ok(Self::from_terms_unchecked(
            self.n,
            self.terms.iter().chain(&other.terms).map(|(k, v)| (*k, v.clone())),
        ))
    }

    /// `a · x` for a monoid element `a`.
    pub fn scale(&self, inst: &Blueprint, a: &Scalar) -> Result<ExteriorElement> {
        inst.check(a)?;
        self.check(inst, self)?;
        Ok(Self::from_terms_unchecked(
            self.n,
            self.terms.iter().map(|(k, v)| (*k, inst.scaled(a, v))),
        ))
    }

    /// Classifies a grade-`d` element against `H_{d,n}` and `K_{d,n}`.
    pub fn classify(&self, inst: &Blueprint, d: usize) -> HkClass {
        if self.terms.keys().any(|k| k.len() != d) || self.terms.values().any(|c| c.len() > 1) {
            return HkClass::OutsideH;
        }
        if self
            .terms
            .values()
            .any(|c| c.as_monomial().is_some_and(|a| inst.is_unit(a)))
        {
            HkClass::InHNotK
        } else {
            HkClass::InK
        }
    }
}

/// `x ∧ y`: bilinear expansion with every concatenated index sequence
/// normalized and like terms collected.
pub fn wedge(inst: &Blueprint, x: &ExteriorElement, y: &ExteriorElement) -> Result<ExteriorElement> {
    x.check(inst, y)?;
    let mut out: Vec<(IndexSet, FormalSum)> = Vec::new();
    for (i, a) in &x.terms {
        for (j, b) in &y.terms {
            if !i.is_disjoint(*j) {
                continue;
            }
            // sorting I ++ J takes one transposition per pair i > j
            let parity = i.crossings(*j);
            let c = inst.eps_scaled(parity, &inst.sum_product(a, b));
            out.push((i.union(*j), c));
        }
    }
    Ok(ExteriorElement::from_terms_unchecked(x.n, out))
}

/// Wedge of an arbitrary number of factors; the empty product is `1`.
pub fn wedge_all(inst: &Blueprint, n: usize, factors: &[ExteriorElement]) -> Result<ExteriorElement> {
    factors
        .iter()
        .try_fold(ExteriorElement::unit(inst, n), |acc, f| wedge(inst, &acc, f))
}

/// `γ_{d,n}((b_I)) = Σ b_I e_I`; every key must be a `d`-subset of `[n]`.
pub fn gamma(inst: &Blueprint, n: usize, d: usize, coeffs: &BTreeMap<IndexSet, FormalSum>) -> Result<ExteriorElement> {
    for k in coeffs.keys() {
        if k.len() != d || k.max_index() > n {
            return Err(Error::MalformedIndexSet(format!("{{{k}}} is not a {d}-subset of [{n}]")));
        }
    }
    ExteriorElement::from_terms(inst, n, coeffs.iter().map(|(k, v)| (*k, v.clone())))
}

/// Basis-componentwise order: `x ≤ y` iff `x_I ≤ y_I` for every `I`.
pub fn exterior_leq(inst: &Blueprint, x: &ExteriorElement, y: &ExteriorElement) -> Result<Decision> {
    x.check(inst, y)?;
    let keys: std::collections::BTreeSet<IndexSet> = x.terms.keys().chain(y.terms.keys()).copied().collect();
    let mut out = Decision::Holds;
    for k in keys {
        out = out.and(inst.decide(&x.coeff(k), &y.coeff(k))?);
        if out == Decision::Fails {
            break;
        }
    }
    Ok(out)
}

/// Image in the classical exterior algebra `Λ Kⁿ` of the field underlying a
/// `K^mon` preset: `[e_I] ↦ e_I`, coefficients evaluated in `K`.
pub fn hull_realize(inst: &Blueprint, x: &ExteriorElement) -> Result<ClassicalExteriorElement> {
    let field = inst.field().ok_or_else(|| Error::WrongPresetKind {
        expected: "field",
        got: inst.to_string(),
    })?;
    let mut out = ClassicalExteriorElement::zero(field, x.n);
    for (k, c) in &x.terms {
        out.insert(*k, inst.hull_scalar(c)?);
    }
    Ok(out)
}

/// Image in the tropical Grassmann algebra of the semifield underlying an
/// `S^mon` preset: `[e_I] ↦ e_I`, coefficients collapsed in `S`.
pub fn idem_realize(inst: &Blueprint, x: &ExteriorElement) -> Result<TropicalExteriorElement> {
    let sf = inst.semifield().ok_or_else(|| Error::WrongPresetKind {
        expected: "idempotent semifield",
        got: inst.to_string(),
    })?;
    let mut out = TropicalExteriorElement::zero(sf, x.n);
    for (k, c) in &x.terms {
        out.insert(*k, inst.idem_collapse(c)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::arith::FieldElem;
    use num_rational::BigRational;

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix, 8).unwrap()
    }

    #[test]
    fn transposition_picks_up_eps() {
        let f = Blueprint::f1pm();
        let m = normalize_wedge(&f, 3, &[2, 1], &f.one()).unwrap().unwrap();
        assert_eq!(m.coeff, f.eps());
        assert_eq!(m.indices, set(&[1, 2]));
        assert_eq!(normalize_wedge(&f, 3, &[1, 1], &f.eps()).unwrap(), None);
        let m = normalize_wedge(&f, 3, &[3, 1, 2], &f.one()).unwrap().unwrap();
        assert_eq!(m.coeff, f.one());
        assert!(normalize_wedge(&f, 3, &[4, 1], &f.one()).is_err());
        assert!(normalize_wedge(&f, 3, &[1, 1, 4], &f.one()).is_err());
    }

    #[test]
    fn wedge_examples() {
        let f = Blueprint::f1pm();
        let e = |i: usize| ExteriorElement::basis(&f, 4, &[i]).unwrap();
        let e12 = wedge(&f, &e(1), &e(2)).unwrap();
        assert_eq!(e12, ExteriorElement::basis(&f, 4, &[1, 2]).unwrap());

        let x = e(1).add(&f, &e(2)).unwrap();
        let y = e(1).add(&f, &e(2).scale(&f, &f.eps()).unwrap()).unwrap();
        let p = wedge(&f, &x, &y).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coeff(set(&[1, 2])), f.sum([f.eps(), f.eps()]).unwrap());

        let e12 = ExteriorElement::basis(&f, 4, &[1, 2]).unwrap();
        assert_eq!(wedge(&f, &e12, &e(3)).unwrap(), wedge(&f, &e(3), &e12).unwrap());
    }

    #[test]
    fn grading() {
        let f = Blueprint::f1pm();
        let e12 = ExteriorElement::basis(&f, 4, &[1, 2]).unwrap();
        let e3 = ExteriorElement::basis(&f, 4, &[3]).unwrap();
        let s = e12.add(&f, &e3).unwrap();
        assert_eq!(s.grade(1), e3);
        assert_eq!(e12.grade(2), e12);
        assert!(s.pure_grade().is_none());
        let e1 = ExteriorElement::basis(&f, 4, &[1]).unwrap();
        let e23 = ExteriorElement::basis(&f, 4, &[2, 3]).unwrap();
        let w = wedge(&f, &e1, &e23).unwrap();
        assert_eq!(w.grade(3), w);
    }

    #[test]
    fn gamma_and_classification() {
        let f = Blueprint::f1pm();
        let all: BTreeMap<IndexSet, FormalSum> = crate::subsets::k_subsets(4, 2)
            .into_iter()
            .map(|k| (k, f.natural(1)))
            .collect();
        let v = gamma(&f, 4, 2, &all).unwrap();
        assert_eq!(v.classify(&f, 2), HkClass::InHNotK);
        let empty = gamma(&f, 4, 2, &BTreeMap::new()).unwrap();
        assert!(empty.is_zero());
        assert_eq!(empty.classify(&f, 2), HkClass::InK);
        let mut two = all.clone();
        two.insert(set(&[1, 2]), f.natural(2));
        assert_eq!(gamma(&f, 4, 2, &two).unwrap().classify(&f, 2), HkClass::OutsideH);
        let mut bad = BTreeMap::new();
        bad.insert(set(&[1]), f.natural(1));
        assert!(gamma(&f, 4, 2, &bad).is_err());
    }

    #[test]
    fn order_examples() {
        let f = Blueprint::f1pm();
        let zero = ExteriorElement::zero(4);
        let one_eps = ExteriorElement::from_terms(&f, 4, [(set(&[1, 2]), f.sum([f.one(), f.eps()]).unwrap())]).unwrap();
        assert_eq!(exterior_leq(&f, &one_eps, &one_eps).unwrap(), Decision::Holds);
        assert_eq!(exterior_leq(&f, &zero, &one_eps).unwrap(), Decision::Holds);
        let e1 = ExteriorElement::basis(&f, 4, &[1]).unwrap();
        assert_eq!(exterior_leq(&f, &zero, &e1).unwrap(), Decision::Fails);
    }

    #[test]
    fn realizations() {
        let g3 = Blueprint::gf(3).unwrap();
        let x = ExteriorElement::from_terms(&g3, 4, [(set(&[1, 2]), g3.sum([g3.eps(), g3.eps()]).unwrap())]).unwrap();
        let h = hull_realize(&g3, &x).unwrap();
        assert_eq!(h.coeff(set(&[1, 2])), FieldElem::Mod(1));
        assert!(hull_realize(&g3, &ExteriorElement::zero(4)).unwrap().is_zero());
        assert!(idem_realize(&g3, &x).is_err());

        let mp = Blueprint::maxplus();
        let t = |v: i64| mp.parse_scalar(&format!("q:{v}")).unwrap();
        let y = ExteriorElement::from_terms(&mp, 4, [(set(&[1, 2]), mp.sum([t(5), t(3)]).unwrap())]).unwrap();
        let i = idem_realize(&mp, &y).unwrap();
        assert_eq!(
            i.coeff(set(&[1, 2])),
            crate::oracles::arith::SemifieldElem::MaxPlus(Some(BigRational::from_integer(5.into())))
        );
        let b = Blueprint::boolean();
        let z = ExteriorElement::from_terms(&b, 4, [(set(&[1]), b.natural(2))]).unwrap();
        assert_eq!(
            idem_realize(&b, &z).unwrap().coeff(set(&[1])),
            crate::oracles::arith::SemifieldElem::Bool(true)
        );
    }
}
