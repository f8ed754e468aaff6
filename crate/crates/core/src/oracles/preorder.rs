//! Exhaustive closure of a generator set on a finite universe of sums.

use std::collections::HashMap;

use crate::blueprints::{Blueprint, FormalSum, RelationSet, Scalar};

/// The preorder generated by a relation set, restricted to sums of at most
/// `max_terms` terms over a fixed pool of scalars. Computed as the
/// reachability relation of the single-step rewrite graph.
#[derive(Debug, Clone)]
pub struct BruteForcePreorder {
    universe: Vec<FormalSum>,
    index: HashMap<FormalSum, usize>,
    reach: Vec<Vec<bool>>,
}

impl BruteForcePreorder {
    pub fn universe(&self) -> &[FormalSum] {
        &self.universe
    }

    /// `None` when either side lies outside the universe.
    pub fn leq(&self, lhs: &FormalSum, rhs: &FormalSum) -> Option<bool> {
        let i = *self.index.get(lhs)?;
        let j = *self.index.get(rhs)?;
        Some(self.reach[i][j])
    }
}

fn multisets_up_to(pool: &[Scalar], max: usize) -> Vec<FormalSum> {
    let mut out = vec![FormalSum::zero()];
    let mut layer: Vec<(usize, Vec<Scalar>)> = vec![(0, Vec::new())];
    for _ in 0..max {
        let mut next = Vec::new();
        for (start, cur) in &layer {
            for (i, a) in pool.iter().enumerate().skip(*start) {
                let mut v = cur.clone();
                v.push(a.clone());
                out.push(FormalSum::from_terms_unchecked(v.clone()));
                next.push((i, v));
            }
        }
        layer = next;
    }
    out
}

/// Saturates `gens` over every sum of at most `max_terms` terms drawn from
/// the nonzero scalars in `pool`, scaling generators by every pool element.
pub fn brute_force_preorder(inst: &Blueprint, gens: &RelationSet, pool: &[Scalar], max_terms: usize) -> BruteForcePreorder {
    let mut pool: Vec<Scalar> = pool.iter().filter(|a| !a.is_zero() && inst.contains(a)).cloned().collect();
    pool.sort();
    pool.dedup();
    let universe = multisets_up_to(&pool, max_terms);
    let index: HashMap<FormalSum, usize> = universe.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

    let mut edges = vec![Vec::new(); universe.len()];
    for (a, b) in gens.gens() {
        for m in &pool {
            let (ma, mb) = (inst.scaled(m, a), inst.scaled(m, b));
            for (i, s) in universe.iter().enumerate() {
                if let Some(rest) = s.checked_sub(&ma) {
                    if let Some(&j) = index.get(&rest.merged(&mb)) {
                        edges[i].push(j);
                    }
                }
            }
        }
    }

    let reach = (0..universe.len())
        .map(|start| {
            let mut seen = vec![false; universe.len()];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &j in &edges[i] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            seen
        })
        .collect();
    BruteForcePreorder { universe, index, reach }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blueprints::preset_relations;

    #[test]
    fn f1pm_multiples_of_one_plus_eps() {
        let f = Blueprint::f1pm();
        let gens = preset_relations(&f, &[], 2);
        let pre = brute_force_preorder(&f, &gens, &[f.one(), f.eps()], 4);
        assert_eq!(pre.universe().len(), 15);
        let z = FormalSum::zero();
        let s = |t: Vec<Scalar>| f.sum(t).unwrap();
        assert_eq!(pre.leq(&z, &s(vec![f.one(), f.eps()])), Some(true));
        assert_eq!(pre.leq(&z, &s(vec![f.one(), f.eps(), f.one(), f.eps()])), Some(true));
        assert_eq!(pre.leq(&z, &s(vec![f.one()])), Some(false));
        assert_eq!(pre.leq(&s(vec![f.one(), f.eps()]), &z), Some(false));
        assert_eq!(pre.leq(&z, &s(vec![f.one(); 5])), None);
    }

    #[test]
    fn empty_generators_give_equality() {
        let b = Blueprint::boolean();
        let pre = brute_force_preorder(&b, &RelationSet::default(), &[b.one()], 3);
        for x in pre.universe() {
            for y in pre.universe() {
                assert_eq!(pre.leq(x, y), Some(x == y));
            }
        }
    }
}
