//! Seeded random generators for scalars, sums and exterior elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::blueprints::{Blueprint, FormalSum, Preset, Scalar, Tropical};
use crate::exterior::ExteriorElement;
use crate::subsets::{k_subsets, IndexSet};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-num..=num)), BigInt::from(rng.gen_range(1..=den)))
}

/// A nonzero monoid element. Infinite carriers draw from small numerators
/// and denominators so that collisions and ties happen.
pub fn nonzero_scalar<R: Rng>(inst: &Blueprint, rng: &mut R) -> Scalar {
    match inst.preset() {
        Preset::Rational => loop {
            let q = small_rational(rng, 4, 3);
            if q != BigRational::from_integer(0.into()) {
                return Scalar::Rational(q);
            }
        },
        Preset::Maxplus => Scalar::Tropical(Tropical::Finite(small_rational(rng, 3, 2))),
        _ => {
            let units = inst.units().expect("finite preset");
            units.choose(rng).expect("nonempty").clone()
        }
    }
}

/// Zero with probability `p_zero`, otherwise [`nonzero_scalar`].
pub fn scalar<R: Rng>(inst: &Blueprint, rng: &mut R, p_zero: f64) -> Scalar {
    if rng.gen_bool(p_zero) {
        inst.zero()
    } else {
        nonzero_scalar(inst, rng)
    }
}

pub fn sum<R: Rng>(inst: &Blueprint, rng: &mut R, max_terms: usize) -> FormalSum {
    let k = rng.gen_range(0..=max_terms);
    inst.sum((0..k).map(|_| nonzero_scalar(inst, rng))).expect("sampled scalars belong to the preset")
}

/// A random index sequence over `[n]` of length at most `n`; repeats are
/// allowed when `repeats` is set.
pub fn index_sequence<R: Rng>(rng: &mut R, n: usize, repeats: bool) -> Vec<usize> {
    if repeats {
        let len = rng.gen_range(0..=n);
        (0..len).map(|_| rng.gen_range(1..=n)).collect()
    } else {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(rng);
        all.truncate(rng.gen_range(0..=n));
        all
    }
}

/// Random element of `(Λ Bⁿ)⁺` with about `density` of the index sets
/// present, each with up to `max_terms` terms.
pub fn exterior<R: Rng>(inst: &Blueprint, rng: &mut R, n: usize, density: f64, max_terms: usize) -> ExteriorElement {
    let mut terms: Vec<(IndexSet, FormalSum)> = Vec::new();
    for s in (0..=n).flat_map(|d| k_subsets(n, d)) {
        if rng.gen_bool(density) {
            terms.push((s, sum(inst, rng, max_terms)));
        }
    }
    ExteriorElement::from_terms(inst, n, terms).expect("valid indices")
}

/// Random grade-`d` element of `H_{d,n}`: each coefficient is zero or a
/// single monoid element.
pub fn h_element<R: Rng>(inst: &Blueprint, rng: &mut R, n: usize, d: usize, p_zero: f64) -> ExteriorElement {
    let terms: Vec<(IndexSet, FormalSum)> = k_subsets(n, d)
        .into_iter()
        .map(|s| (s, inst.sum([scalar(inst, rng, p_zero)]).expect("valid scalar")))
        .collect();
    ExteriorElement::from_terms(inst, n, terms).expect("valid indices")
}
