//! Bounded search in the preorder generated by a finite relation set.
//!
//! A relation `x ≤ y` lies in the additive, multiplicative, reflexive and
//! transitive closure of generators `aⱼ ≤ bⱼ` iff `y` is reachable from `x`
//! by rewrite steps `m·aⱼ + r ⟶ m·bⱼ + r` with `m` a monoid element and `r`
//! an arbitrary context. The search below explores these steps breadth
//! first, so a `Holds` answer is always backed by a derivation.

use std::collections::{HashSet, VecDeque};

use super::{Blueprint, FormalSum, PresetKind, Scalar};

/// Generators `lhs ≤ rhs`, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RelationSet {
    gens: Vec<(FormalSum, FormalSum)>,
}

impl RelationSet {
    pub fn new<I: IntoIterator<Item = (FormalSum, FormalSum)>>(gens: I) -> Self {
        let mut gens: Vec<_> = gens.into_iter().filter(|(l, r)| l != r).collect();
        gens.sort();
        gens.dedup();
        RelationSet { gens }
    }

    pub fn gens(&self) -> &[(FormalSum, FormalSum)] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when no generator has more terms on its left than on its right,
    /// so no rewrite step ever shrinks a sum.
    fn is_non_decreasing(&self) -> bool {
        self.gens.iter().all(|(l, r)| l.len() <= r.len())
    }
}

/// Search limits: maximal number of terms per intermediate sum and maximal
/// number of distinct states visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_terms: usize,
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_terms: 8, max_states: 100_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureVerdict {
    Holds,
    Unknown,
}

/// Monoid elements used to scale generators: the whole nonzero carrier for
/// finite presets, otherwise the scalars mentioned by the query and the
/// generators together with `1` and `ε`.
fn scaling_pool(
    inst: &Blueprint,
    gens: &RelationSet,
    lhs: &FormalSum,
    rhs: &FormalSum,
) -> Vec<Scalar> {
    let mut pool: Vec<Scalar> = match inst.elements() {
        Some(els) => els.into_iter().filter(|a| !a.is_zero()).collect(),
        None => {
            let mut v = vec![inst.one(), inst.eps()];
            for s in [lhs, rhs] {
                v.extend(s.terms().iter().cloned());
            }
            for (l, r) in gens.gens() {
                v.extend(l.terms().iter().cloned());
                v.extend(r.terms().iter().cloned());
            }
            // quotients t/s let a generator term be moved onto a query term
            let base = v.clone();
            for s in &base {
                if let Some(inv) = inst.inverse(s) {
                    for t in &base {
                        v.push(inst.product(t, &inv));
                    }
                }
            }
            v
        }
    };
    pool.sort();
    pool.dedup();
    pool
}

/// Searches for a derivation of `lhs ≤ rhs` from `gens`.
///
/// Sound but incomplete: `Unknown` only means that no derivation was found
/// within `budget`.
pub fn closure_decide_leq(
    inst: &Blueprint,
    gens: &RelationSet,
    lhs: &FormalSum,
    rhs: &FormalSum,
    budget: Budget,
) -> ClosureVerdict {
    if lhs == rhs {
        return ClosureVerdict::Holds;
    }
    if budget.max_states == 0 || inst.check_sum(lhs).is_err() || inst.check_sum(rhs).is_err() {
        return ClosureVerdict::Unknown;
    }
    let pool = scaling_pool(inst, gens, lhs, rhs);
    let mut steps: Vec<(FormalSum, FormalSum)> = Vec::new();
    for (a, b) in gens.gens() {
        for m in &pool {
            steps.push((inst.scaled(m, a), inst.scaled(m, b)));
        }
    }
    steps.retain(|(a, b)| a != b);
    steps.sort();
    steps.dedup();

    let mut bound = budget.max_terms.max(lhs.len());
    if gens.is_non_decreasing() {
        bound = bound.min(rhs.len());
    }

    let mut seen: HashSet<FormalSum> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lhs.clone());
    queue.push_back(lhs.clone());
    while let Some(state) = queue.pop_front() {
        for (a, b) in &steps {
            let Some(rest) = state.checked_sub(a) else {
                continue;
            };
            let next = rest.merged(b);
            if next.len() > bound || seen.contains(&next) {
                continue;
            }
            if next == *rhs {
                return ClosureVerdict::Holds;
            }
            if seen.len() >= budget.max_states {
                return ClosureVerdict::Unknown;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    ClosureVerdict::Unknown
}

/// All multisets of size `k` drawn from `pool` (with repetition).
fn multisets(pool: &[Scalar], k: usize) -> Vec<Vec<Scalar>> {
    fn rec(pool: &[Scalar], start: usize, k: usize, cur: &mut Vec<Scalar>, out: &mut Vec<Vec<Scalar>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, 0, k, &mut Vec::new(), &mut out);
    out
}

/// The preset's defining generators restricted to right-hand sides with at
/// most `max_rhs_terms` terms drawn from `pool` (all nonzero carrier
/// elements are added for finite presets).
///
/// * `f1pm`: `0 ≤ 1 + ε`.
/// * `K^mon`: `1·b ≤ Σ 1·aᵢ` whenever `b = Σ aᵢ` in `K`.
/// * `S^mon`: `1·b ≤ Σ 1·aᵢ` whenever `Σ aᵢ = b + Σ_{i≠k} aᵢ` for all `k`.
pub fn preset_relations(inst: &Blueprint, pool: &[Scalar], max_rhs_terms: usize) -> RelationSet {
    let mut pool: Vec<Scalar> = pool.iter().filter(|a| !a.is_zero() && inst.contains(a)).cloned().collect();
    if let Some(els) = inst.elements() {
        pool.extend(els.into_iter().filter(|a| !a.is_zero()));
    }
    pool.sort();
    pool.dedup();

    let mut gens = Vec::new();
    match inst.kind() {
        PresetKind::Sign => {
            gens.push((FormalSum::zero(), FormalSum::from_terms_unchecked(vec![inst.one(), inst.eps()])));
        }
        PresetKind::Field => {
            let field = inst.field().expect("field preset");
            for k in 2..=max_rhs_terms {
                for a in multisets(&pool, k) {
                    let b = field.sum(a.iter().map(|t| inst.to_field_elem(t)).collect::<Vec<_>>().iter());
                    let b = inst.from_field_elem(&b).expect("field value embeds");
                    gens.push((
                        FormalSum::from_terms_unchecked(vec![b]),
                        FormalSum::from_terms_unchecked(a),
                    ));
                }
            }
        }
        PresetKind::Idempotent => {
            let mut lhs_pool = pool.clone();
            lhs_pool.push(inst.zero());
            for k in 1..=max_rhs_terms {
                for a in multisets(&pool, k) {
                    let rhs = FormalSum::from_terms_unchecked(a);
                    for b in &lhs_pool {
                        let lhs = FormalSum::from_terms_unchecked(vec![b.clone()]);
                        if inst.instance_leq(&lhs, &rhs).unwrap_or(false) {
                            gens.push((lhs, rhs.clone()));
                        }
                    }
                }
            }
        }
    }
    RelationSet::new(gens)
}
