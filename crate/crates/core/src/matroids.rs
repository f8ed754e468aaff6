//! Grassmann–Plücker functions, Plücker vectors and matroids over the
//! shipped blueprints.
//!
//! For `X ∈ ([n] choose d−1)` and `Y = {i₁ < … < i_{d+1}}` the Plücker
//! relation reads `0 ≤ Σ_{i_k ∉ X} ε^k Δ(X ∪ {i_k}) Δ(Y ∖ {i_k})`, where `k`
//! is the 1-based position of `i_k` in `Y`. Here `Δ(X ∪ {i_k})` stands for
//! the coefficient of `e_X ∧ e_{i_k}`, so moving `i_k` into sorted position
//! contributes a further `ε^{#{x ∈ X : x > i_k}}`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::blueprints::{closure_decide_leq, Blueprint, Budget, ClosureVerdict, FormalSum, RelationSet, Scalar};
use crate::error::{Error, Result};
use crate::exterior::{ExteriorElement, HkClass};
use crate::subsets::{binomial, k_subsets, IndexSet};

/// Exponent of `ε` on the `i`-term of the `(X, Y)` relation, `i` sitting at
/// 0-based position `pos` of `Y`.
fn relation_parity(x: IndexSet, pos: usize, i: usize) -> u32 {
    pos as u32 + 1 + x.crossings(IndexSet::singleton(i))
}

/// Lexicographic rank of a `d`-subset among all `d`-subsets of `[n]`.
pub fn subset_rank(set: IndexSet, n: usize) -> usize {
    let d = set.len();
    let mut rank = 0u128;
    let mut prev = 0;
    for (r, c) in set.iter().enumerate() {
        for j in (prev + 1)..c {
            rank += binomial(n - j, d - r - 1);
        }
        prev = c;
    }
    rank as usize
}

/// A function `([n] choose d) → B^•`, stored in lexicographic order of the
/// subsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GpFunction {
    n: usize,
    d: usize,
    values: Vec<Scalar>,
}

impl GpFunction {
    /// `values[r]` is the value on the `r`-th `d`-subset in lexicographic
    /// order.
    pub fn new(n: usize, d: usize, values: Vec<Scalar>) -> Result<Self> {
        if d > n {
            return Err(Error::SizeViolation(format!("rank {d} exceeds ground set size {n}")));
        }
        let expected = binomial(n, d) as usize;
        if values.len() != expected {
            return Err(Error::SizeViolation(format!(
                "{} values given, {expected} subsets of size {d} in [{n}]",
                values.len()
            )));
        }
        Ok(GpFunction { n, d, values })
    }

    pub fn from_fn(n: usize, d: usize, f: impl Fn(IndexSet) -> Scalar) -> Self {
        GpFunction { n, d, values: k_subsets(n, d).into_iter().map(f).collect() }
    }

    /// Builds from an explicit map; every `d`-subset must be present.
    pub fn from_map(inst: &Blueprint, n: usize, d: usize, map: &BTreeMap<IndexSet, Scalar>) -> Result<Self> {
        let subsets = k_subsets(n, d);
        if map.len() != subsets.len() {
            return Err(Error::SizeViolation(format!(
                "{} values given, {} subsets of size {d} in [{n}]",
                map.len(),
                subsets.len()
            )));
        }
        let mut values = Vec::with_capacity(subsets.len());
        for s in subsets {
            let v = map
                .get(&s)
                .ok_or_else(|| Error::MalformedIndexSet(format!("missing value for {{{s}}}")))?;
            inst.check(v)?;
            values.push(v.clone());
        }
        Ok(GpFunction { n, d, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn subsets(&self) -> Vec<IndexSet> {
        k_subsets(self.n, self.d)
    }

    pub fn value(&self, set: IndexSet) -> Option<&Scalar> {
        if set.len() != self.d || set.max_index() > self.n {
            return None;
        }
        self.values.get(subset_rank(set, self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndexSet, &Scalar)> {
        k_subsets(self.n, self.d).into_iter().zip(self.values.iter())
    }

    /// `a · Δ`.
    pub fn scale(&self, inst: &Blueprint, a: &Scalar) -> Result<Self> {
        inst.check(a)?;
        let values = self
            .values
            .iter()
            .map(|v| inst.scalar_mul(a, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(GpFunction { n: self.n, d: self.d, values })
    }

    fn check(&self, inst: &Blueprint) -> Result<()> {
        self.values.iter().try_for_each(|v| inst.check(v))
    }
}

/// One term of a precomputed Plücker relation: `ε^k Δ(left) Δ(right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RelationTerm {
    k: u32,
    left: usize,
    right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Relation {
    x: IndexSet,
    y: IndexSet,
    terms: Vec<RelationTerm>,
}

/// All Plücker relations of rank `d` on `[n]`, with subsets pre-ranked.
#[derive(Debug, Clone)]
pub struct PluckerRelations {
    n: usize,
    d: usize,
    relations: Vec<Relation>,
}

impl PluckerRelations {
    pub fn new(n: usize, d: usize) -> Self {
        let mut relations = Vec::new();
        if d >= 1 && d < n {
            for x in k_subsets(n, d - 1) {
                for y in k_subsets(n, d + 1) {
                    let terms = y
                        .iter()
                        .enumerate()
                        .filter(|(_, i)| !x.contains(*i))
                        .map(|(pos, i)| RelationTerm {
                            k: relation_parity(x, pos, i),
                            left: subset_rank(x.insert(i), n),
                            right: subset_rank(y.remove(i), n),
                        })
                        .collect();
                    relations.push(Relation { x, y, terms });
                }
            }
        }
        PluckerRelations { n, d, relations }
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    fn sum(&self, inst: &Blueprint, values: &[Scalar], rel: &Relation) -> FormalSum {
        let terms = rel
            .terms
            .iter()
            .map(|t| inst.eps_pow_times(t.k, &inst.product(&values[t.left], &values[t.right])))
            .collect();
        FormalSum::from_terms_unchecked(terms)
    }
}

/// `φ_{X,Y}(e_I ⊗ e_J)`: `ε^k` (times the sorting sign of `e_X ∧ e_{i_k}`)
/// if `I = X ∪ {i_k}` and `J = Y ∖ {i_k}` for some `i_k ∉ X`, else `0`.
pub fn phi_xy(inst: &Blueprint, x: IndexSet, y: IndexSet, i: IndexSet, j: IndexSet) -> Result<Scalar> {
    let d = i.len();
    if d == 0 || x.len() + 1 != d || y.len() != d + 1 || j.len() != d {
        return Err(Error::SizeViolation(format!(
            "phi needs |X| = d-1, |Y| = d+1, |I| = |J| = d; got {}, {}, {}, {}",
            x.len(),
            y.len(),
            i.len(),
            j.len()
        )));
    }
    for (pos, ik) in y.iter().enumerate() {
        if !x.contains(ik) && i == x.insert(ik) && j == y.remove(ik) {
            return Ok(inst.eps_pow_times(relation_parity(x, pos, ik), &inst.one()));
        }
    }
    Ok(inst.zero())
}

/// `Σ_{i_k ∉ X} ε^k Δ(X ∪ {i_k}) Δ(Y ∖ {i_k})`, zero products dropped.
pub fn plucker_sum(inst: &Blueprint, delta: &GpFunction, x: IndexSet, y: IndexSet) -> Result<FormalSum> {
    let d = delta.d;
    if d == 0 || x.len() + 1 != d || y.len() != d + 1 || x.max_index() > delta.n || y.max_index() > delta.n {
        return Err(Error::SizeViolation(format!(
            "relation needs |X| = {} and |Y| = {} inside [{}]",
            d as i64 - 1,
            d + 1,
            delta.n
        )));
    }
    delta.check(inst)?;
    let mut terms = Vec::new();
    for (pos, ik) in y.iter().enumerate() {
        if x.contains(ik) {
            continue;
        }
        let a = delta.value(x.insert(ik)).expect("d-subset");
        let b = delta.value(y.remove(ik)).expect("d-subset");
        terms.push(inst.eps_pow_times(relation_parity(x, pos, ik), &inst.product(a, b)));
    }
    Ok(FormalSum::from_terms_unchecked(terms))
}

/// How relation sums `0 ≤ s` are decided.
#[derive(Debug, Clone, Default)]
pub enum OrderOracle {
    /// The preset's exact rule for the `0 ≤ Σ` fragment.
    #[default]
    Preset,
    /// Bounded search in the preorder generated by the given relations.
    Closure { relations: RelationSet, budget: Budget },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

/// A relation `(X, Y)` together with its sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: IndexSet,
    pub y: IndexSet,
    pub sum: FormalSum,
}

/// Outcome of a Plücker check.
///
/// `verdict` is `True` iff the candidate lies in `H_{d,n}`, has a unit
/// value, no relation failed and no relation was left undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerReport {
    pub verdict: Verdict,
    pub in_h: bool,
    pub has_unit: bool,
    /// Relations whose sum is not `≥ 0`.
    pub witnesses: Vec<Witness>,
    /// Relations the order oracle could not decide.
    pub undecided: Vec<Witness>,
}

impl PluckerReport {
    fn finish(in_h: bool, has_unit: bool, witnesses: Vec<Witness>, undecided: Vec<Witness>) -> Self {
        let verdict = if !in_h || !has_unit || !witnesses.is_empty() {
            Verdict::False
        } else if !undecided.is_empty() {
            Verdict::Indeterminate
        } else {
            Verdict::True
        };
        PluckerReport { verdict, in_h, has_unit, witnesses, undecided }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::True
    }
}

fn judge(inst: &Blueprint, oracle: &OrderOracle, sum: &FormalSum) -> Option<bool> {
    match oracle {
        OrderOracle::Preset => Some(inst.zero_leq(sum)),
        OrderOracle::Closure { relations, budget } => {
            match closure_decide_leq(inst, relations, &FormalSum::zero(), sum, *budget) {
                ClosureVerdict::Holds => Some(true),
                ClosureVerdict::Unknown => None,
            }
        }
    }
}

/// Checks the Grassmann–Plücker conditions: some value is a unit and every
/// relation sum is `≥ 0`. All failing relations are reported.
pub fn is_gp_function(inst: &Blueprint, delta: &GpFunction, oracle: &OrderOracle) -> Result<PluckerReport> {
    delta.check(inst)?;
    let table = PluckerRelations::new(delta.n, delta.d);
    let has_unit = delta.values.iter().any(|v| inst.is_unit(v));
    let mut witnesses = Vec::new();
    let mut undecided = Vec::new();
    for rel in &table.relations {
        let sum = table.sum(inst, &delta.values, rel);
        let w = || Witness { x: rel.x, y: rel.y, sum: sum.clone() };
        match judge(inst, oracle, &sum) {
            Some(true) => {}
            Some(false) => witnesses.push(w()),
            None => undecided.push(w()),
        }
    }
    Ok(PluckerReport::finish(true, has_unit, witnesses, undecided))
}

/// Preset-rule Grassmann–Plücker test with early exit, for enumeration.
pub fn gp_holds(inst: &Blueprint, table: &PluckerRelations, values: &[Scalar]) -> bool {
    debug_assert_eq!(values.len() as u128, binomial(table.n, table.d));
    values.iter().any(|v| inst.is_unit(v))
        && table.relations.iter().all(|rel| inst.zero_leq(&table.sum(inst, values, rel)))
}

/// Checks whether `v` is a rank-`d` Plücker vector: `v ∈ H_{d,n} ∖ K_{d,n}`
/// and `φ_{X,Y}(v ⊗ v) ≥ 0` for all `X`, `Y`.
///
/// The relation values are computed by expanding `v ⊗ v` over pairs of
/// basis monomials and applying [`phi_xy`] to each pair.
pub fn is_plucker_vector(inst: &Blueprint, v: &ExteriorElement, d: usize, oracle: &OrderOracle) -> Result<PluckerReport> {
    if v.terms().keys().any(|k| k.len() != d) {
        return Err(Error::NotHomogeneous);
    }
    let n = v.dim();
    let class = v.classify(inst, d);
    let in_h = class != HkClass::OutsideH;
    let has_unit = class == HkClass::InHNotK;
    let mut witnesses = Vec::new();
    let mut undecided = Vec::new();
    if d >= 1 && d < n {
        let support: Vec<(IndexSet, &FormalSum)> = v.terms().iter().map(|(k, c)| (*k, c)).collect();
        for x in k_subsets(n, d - 1) {
            for y in k_subsets(n, d + 1) {
                let mut sum = FormalSum::zero();
                for (i, a) in &support {
                    for (j, b) in &support {
                        let phi = phi_xy(inst, x, y, *i, *j)?;
                        if phi.is_zero() {
                            continue;
                        }
                        let ab = inst.sum_product(a, b);
                        sum = sum.merged(&inst.scaled(&phi, &ab));
                    }
                }
                match judge(inst, oracle, &sum) {
                    Some(true) => {}
                    Some(false) => witnesses.push(Witness { x, y, sum }),
                    None => undecided.push(Witness { x, y, sum }),
                }
            }
        }
    }
    Ok(PluckerReport::finish(in_h, has_unit, witnesses, undecided))
}

/// `v = Σ v_I e_I ↦ (I ↦ v_I)`; `v` must lie in `H_{d,n}`.
pub fn gp_from_vector(inst: &Blueprint, v: &ExteriorElement, d: usize) -> Result<GpFunction> {
    if v.classify(inst, d) == HkClass::OutsideH {
        return Err(Error::NotInH(format!("coefficients must be single monoid terms of grade {d}")));
    }
    let n = v.dim();
    if d > n {
        return Err(Error::SizeViolation(format!("rank {d} exceeds ground set size {n}")));
    }
    Ok(GpFunction::from_fn(n, d, |s| {
        v.coeff(s).as_monomial().cloned().unwrap_or_else(|| inst.zero())
    }))
}

/// `Δ ↦ Σ Δ(I) e_I`.
pub fn vector_from_gp(inst: &Blueprint, delta: &GpFunction) -> Result<ExteriorElement> {
    delta.check(inst)?;
    let terms = delta
        .iter()
        .map(|(s, v)| (s, FormalSum::from_terms_unchecked(vec![v.clone()])));
    ExteriorElement::from_terms(inst, delta.n, terms)
}

/// Representative of the `B^×`-orbit: scales so that the value at the
/// lexicographically first unit-valued subset becomes `1`.
pub fn canonical_class(inst: &Blueprint, delta: &GpFunction) -> Result<GpFunction> {
    delta.check(inst)?;
    let first = delta.values.iter().find(|v| inst.is_unit(v)).ok_or(Error::NoUnit)?;
    let inv = inst.inverse(first).expect("unit");
    delta.scale(inst, &inv)
}

/// Default cap on the number of candidate tables in [`enumerate_gp`].
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 22;

/// All canonical Grassmann–Plücker functions of rank `d` on `[n]` over a
/// finite preset, in lexicographic order of their value tables.
///
/// `jobs` bounds the number of worker threads (0 uses rayon's default).
pub fn enumerate_gp(inst: &Blueprint, n: usize, d: usize, cap: u128, jobs: usize) -> Result<Vec<GpFunction>> {
    let carrier = inst.elements().ok_or_else(|| Error::WrongPresetKind {
        expected: "finite",
        got: inst.to_string(),
    })?;
    if d > n {
        return Err(Error::SizeViolation(format!("rank {d} exceeds ground set size {n}")));
    }
    let slots = binomial(n, d) as u32;
    let q = carrier.len() as u128;
    let total = q
        .checked_pow(slots)
        .filter(|t| *t <= cap)
        .ok_or(Error::CapExceeded { size: q.saturating_pow(slots), cap })?;
    let table = PluckerRelations::new(n, d);
    let one = inst.one();

    const CHUNK: u128 = 4096;
    let chunks = total.div_ceil(CHUNK);
    let run = || -> Vec<GpFunction> {
        (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(total);
                let mut found = Vec::new();
                let mut values = vec![carrier[0].clone(); slots as usize];
                for code in lo..hi {
                    // base-q digits, first subset most significant
                    let mut rest = code;
                    for slot in (0..slots as usize).rev() {
                        values[slot] = carrier[(rest % q) as usize].clone();
                        rest /= q;
                    }
                    let canonical = values.iter().find(|v| inst.is_unit(v)) == Some(&one);
                    if canonical && gp_holds(inst, &table, &values) {
                        found.push(GpFunction { n, d, values: values.clone() });
                    }
                }
                found
            })
            .collect()
    };
    if jobs == 0 {
        Ok(run())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::SizeViolation(e.to_string()))?;
        Ok(pool.install(run))
    }
}

/// Maximal minors of a full-rank `d × n` matrix over the field of a
/// `K^mon` preset.
pub fn realize_from_matrix(inst: &Blueprint, rows: &[Vec<Scalar>]) -> Result<GpFunction> {
    let field = inst.field().ok_or_else(|| Error::WrongPresetKind {
        expected: "field",
        got: inst.to_string(),
    })?;
    let d = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::SizeViolation("ragged matrix".into()));
    }
    if d > n {
        return Err(Error::RankDeficient(d));
    }
    let m: Vec<Vec<_>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|a| inst.check(a).map(|_| inst.to_field_elem(a)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut values = Vec::new();
    for s in k_subsets(n, d) {
        let cols: Vec<usize> = s.iter().map(|c| c - 1).collect();
        let sub: Vec<Vec<_>> = m.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        values.push(inst.from_field_elem(&field.determinant(&sub))?);
    }
    if values.iter().all(Scalar::is_zero) {
        return Err(Error::RankDeficient(d));
    }
    GpFunction::new(n, d, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix, 8).unwrap()
    }

    fn all_ones(inst: &Blueprint, n: usize, d: usize) -> GpFunction {
        GpFunction::from_fn(n, d, |_| inst.one())
    }

    fn gf3_example() -> (Blueprint, GpFunction) {
        let g = Blueprint::gf(3).unwrap();
        let r = |v: &[u32]| v.iter().map(|&x| Scalar::Residue(x)).collect::<Vec<_>>();
        let delta = realize_from_matrix(&g, &[r(&[1, 0, 1, 1]), r(&[0, 1, 1, 2])]).unwrap();
        (g, delta)
    }

    #[test]
    fn ranks_are_lexicographic() {
        for (r, s) in k_subsets(6, 3).into_iter().enumerate() {
            assert_eq!(subset_rank(s, 6), r);
        }
    }

    #[test]
    fn phi_examples() {
        let f = Blueprint::f1pm();
        let (x, y) = (set(&[1]), set(&[1, 2, 3]));
        assert_eq!(phi_xy(&f, x, y, set(&[1, 2]), set(&[1, 3])).unwrap(), f.one());
        assert_eq!(phi_xy(&f, x, y, set(&[1, 3]), set(&[1, 2])).unwrap(), f.eps());
        assert_eq!(phi_xy(&f, x, y, set(&[1, 2]), set(&[2, 3])).unwrap(), f.zero());
        assert!(phi_xy(&f, set(&[1, 2]), y, set(&[1, 2]), set(&[2, 3])).is_err());
        // e_2 ∧ e_1 = ε e_{1,2}
        assert_eq!(phi_xy(&f, set(&[2]), y, set(&[1, 2]), set(&[2, 3])).unwrap(), f.one());
        assert_eq!(phi_xy(&f, set(&[2]), y, set(&[2, 3]), set(&[1, 2])).unwrap(), f.eps());
    }

    #[test]
    fn plucker_sum_examples() {
        let f = Blueprint::f1pm();
        let s = plucker_sum(&f, &all_ones(&f, 4, 2), set(&[1]), set(&[2, 3, 4])).unwrap();
        assert_eq!(s, f.sum([f.eps(), f.one(), f.eps()]).unwrap());

        let vanishing = GpFunction::from_fn(4, 2, |s| if s.contains(1) { f.zero() } else { f.one() });
        assert!(plucker_sum(&f, &vanishing, set(&[1]), set(&[2, 3, 4])).unwrap().is_zero());

        let (g, delta) = gf3_example();
        let s = plucker_sum(&g, &delta, set(&[1]), set(&[2, 3, 4])).unwrap();
        assert_eq!(g.hull_scalar(&s).unwrap(), crate::oracles::arith::FieldElem::Mod(0));
        assert!(plucker_sum(&g, &delta, set(&[1, 2]), set(&[2, 3, 4])).is_err());
    }

    #[test]
    fn gf3_minors() {
        let (g, delta) = gf3_example();
        let expected: Vec<Scalar> = [1, 1, 2, 2, 2, 1].iter().map(|&v| Scalar::Residue(v)).collect();
        assert_eq!(delta.values(), expected.as_slice());
        assert!(is_gp_function(&g, &delta, &OrderOracle::Preset).unwrap().holds());
        let field = g.field().unwrap();
        for x in k_subsets(4, 1) {
            for y in k_subsets(4, 3) {
                let s = plucker_sum(&g, &delta, x, y).unwrap();
                assert!(field.is_zero(&g.hull_scalar(&s).unwrap()), "{x} {y}");
            }
        }
    }

    #[test]
    fn uniform_matroid_verdicts() {
        let g2 = Blueprint::gf(2).unwrap();
        let r = is_gp_function(&g2, &all_ones(&g2, 4, 2), &OrderOracle::Preset).unwrap();
        assert_eq!(r.verdict, Verdict::False);
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            // 1 + 1 + 1 whenever X ⊄ Y leaves three terms
            assert_eq!(w.sum.len(), 3);
        }
        let b = Blueprint::boolean();
        assert!(is_gp_function(&b, &all_ones(&b, 4, 2), &OrderOracle::Preset).unwrap().holds());
        let f = Blueprint::f1pm();
        assert_eq!(
            is_gp_function(&f, &all_ones(&f, 4, 2), &OrderOracle::Preset).unwrap().verdict,
            Verdict::False
        );
    }

    #[test]
    fn plucker_vector_examples() {
        for inst in [Blueprint::f1pm(), Blueprint::gf(3).unwrap(), Blueprint::boolean(), Blueprint::maxplus()] {
            let e12 = ExteriorElement::basis(&inst, 4, &[1, 2]).unwrap();
            assert!(is_plucker_vector(&inst, &e12, 2, &OrderOracle::Preset).unwrap().holds(), "{inst}");
        }
        let g3 = Blueprint::gf(3).unwrap();
        let k = ExteriorElement::zero(4);
        let r = is_plucker_vector(&g3, &k, 2, &OrderOracle::Preset).unwrap();
        assert!(!r.has_unit && r.verdict == Verdict::False);
        let b = Blueprint::boolean();
        let all = vector_from_gp(&b, &all_ones(&b, 4, 2)).unwrap();
        assert!(is_plucker_vector(&b, &all, 2, &OrderOracle::Preset).unwrap().holds());
        let mixed = all.add(&b, &ExteriorElement::basis(&b, 4, &[1]).unwrap()).unwrap();
        assert!(matches!(is_plucker_vector(&b, &mixed, 2, &OrderOracle::Preset), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn max_plus_zero_values_make_non_units() {
        // a maxplus vector whose coefficients are all -inf is the zero vector: in K
        let mp = Blueprint::maxplus();
        let delta = GpFunction::from_fn(3, 1, |_| mp.zero());
        let r = is_gp_function(&mp, &delta, &OrderOracle::Preset).unwrap();
        assert!(!r.has_unit);
    }

    #[test]
    fn round_trip_and_gamma() {
        let f = Blueprint::f1pm();
        let e12 = ExteriorElement::basis(&f, 4, &[1, 2]).unwrap();
        let delta = gp_from_vector(&f, &e12, 2).unwrap();
        assert_eq!(delta.value(set(&[1, 2])), Some(&f.one()));
        assert_eq!(delta.values().iter().filter(|v| !v.is_zero()).count(), 1);
        assert_eq!(vector_from_gp(&f, &delta).unwrap(), e12);
        let ones = all_ones(&f, 4, 2);
        let coeffs = k_subsets(4, 2).into_iter().map(|s| (s, f.natural(1))).collect();
        assert_eq!(vector_from_gp(&f, &ones).unwrap(), crate::exterior::gamma(&f, 4, 2, &coeffs).unwrap());
        let two = ExteriorElement::from_terms(&f, 4, [(set(&[1, 2]), f.natural(2))]).unwrap();
        assert!(matches!(gp_from_vector(&f, &two, 2), Err(Error::NotInH(_))));
    }

    #[test]
    fn canonical_forms() {
        let f = Blueprint::f1pm();
        let delta = GpFunction::from_fn(4, 2, |s| if s.contains(4) { f.eps() } else { f.one() });
        let c = canonical_class(&f, &delta).unwrap();
        assert_eq!(c, canonical_class(&f, &delta.scale(&f, &f.eps()).unwrap()).unwrap());
        assert_eq!(canonical_class(&f, &c).unwrap(), c);
        let (g, d3) = gf3_example();
        assert_eq!(
            canonical_class(&g, &d3).unwrap(),
            canonical_class(&g, &d3.scale(&g, &Scalar::Residue(2)).unwrap()).unwrap()
        );
        let zero = GpFunction::from_fn(3, 1, |_| g.zero());
        assert!(matches!(canonical_class(&g, &zero), Err(Error::NoUnit)));
    }

    #[test]
    fn small_enumerations() {
        let g2 = Blueprint::gf(2).unwrap();
        assert_eq!(enumerate_gp(&g2, 3, 1, DEFAULT_ENUMERATION_CAP, 0).unwrap().len(), 7);
        assert_eq!(enumerate_gp(&g2, 4, 2, DEFAULT_ENUMERATION_CAP, 2).unwrap().len(), 35);
        assert!(matches!(
            enumerate_gp(&g2, 6, 3, 1000, 0),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_gp(&Blueprint::rational(), 3, 1, 1000, 0).is_err());
    }

    #[test]
    fn degenerate_ranks() {
        let g2 = Blueprint::gf(2).unwrap();
        assert_eq!(enumerate_gp(&g2, 3, 0, DEFAULT_ENUMERATION_CAP, 0).unwrap().len(), 1);
        assert_eq!(enumerate_gp(&g2, 3, 3, DEFAULT_ENUMERATION_CAP, 0).unwrap().len(), 1);
        assert!(PluckerRelations::new(3, 0).is_empty());
        assert!(PluckerRelations::new(3, 3).is_empty());
    }

    #[test]
    fn realization_edge_cases() {
        let g = Blueprint::gf(5).unwrap();
        let id: Vec<Vec<Scalar>> = (0..3)
            .map(|r| (0..3).map(|c| Scalar::Residue(u32::from(r == c))).collect())
            .collect();
        let delta = realize_from_matrix(&g, &id).unwrap();
        assert_eq!(delta.values(), &[g.one()]);
        let wide: Vec<Vec<Scalar>> = (0..2)
            .map(|r| (0..4).map(|c| Scalar::Residue(u32::from(r == c))).collect())
            .collect();
        let delta = realize_from_matrix(&g, &wide).unwrap();
        assert_eq!(delta.value(set(&[1, 2])), Some(&g.one()));
        assert_eq!(delta.values().iter().filter(|v| !v.is_zero()).count(), 1);
        let flat = vec![vec![Scalar::Residue(1), Scalar::Residue(2)], vec![Scalar::Residue(2), Scalar::Residue(4)]];
        assert!(matches!(realize_from_matrix(&g, &flat), Err(Error::RankDeficient(2))));
        assert!(realize_from_matrix(&Blueprint::boolean(), &[vec![Scalar::Bool(true)]]).is_err());
    }

    #[test]
    fn closure_oracle_can_be_indeterminate() {
        let f = Blueprint::f1pm();
        let ones = all_ones(&f, 4, 2);
        let oracle = OrderOracle::Closure { relations: RelationSet::default(), budget: Budget::default() };
        let r = is_gp_function(&f, &ones, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Indeterminate);
        let gens = crate::blueprints::preset_relations(&f, &[], 2);
        let oracle = OrderOracle::Closure { relations: gens, budget: Budget::default() };
        let e12 = gp_from_vector(&f, &ExteriorElement::basis(&f, 4, &[1, 2]).unwrap(), 2).unwrap();
        assert_eq!(is_gp_function(&f, &e12, &oracle).unwrap().verdict, Verdict::True);
    }
}
