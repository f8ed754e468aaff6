//! Differential suites comparing the blueprint constructions with the
//! reference oracles. Each suite returns a [`SuiteReport`]; a suite passes
//! when it ran at least one case and found no mismatch.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use crate::blue_modules::{bilinear_correspondence_check, free_module, BilinearMap, FreeModuleElement, TensorMorphism};
use crate::blueprints::{
    closure_decide_leq, preset_relations, standard_presets, Blueprint, Budget, ClosureVerdict, FormalSum, PresetKind,
    Scalar, Tropical,
};
use crate::exterior::{hull_realize, idem_realize, normalize_wedge, wedge, wedge_all, ExteriorElement, WedgeMonomial};
use crate::matroids::{
    enumerate_gp, gp_from_vector, gp_holds, is_gp_function, is_plucker_vector, plucker_sum, realize_from_matrix,
    vector_from_gp, GpFunction, OrderOracle, PluckerRelations, Verdict, DEFAULT_ENUMERATION_CAP,
};
use crate::oracles::{
    basis_exchange_check, brute_force_preorder, classical_wedge, subspace_plucker_enumerate, tropical_plucker_check,
    tropical_wedge,
};
use crate::sampling;
use crate::subsets::{k_subsets, IndexSet};

const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// The first few mismatches, human readable.
    pub mismatches: Vec<String>,
    pub detail: String,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, cases: 0, failures: 0, mismatches: Vec::new(), detail: String::new(), elapsed: Duration::ZERO }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.mismatches.len() < MAX_RECORDED {
                self.mismatches.push(what());
            }
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        let room = MAX_RECORDED.saturating_sub(self.mismatches.len());
        self.mismatches.extend(other.mismatches.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.cases > 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Scales the sample counts; 1.0 gives the full-size runs.
    pub scale: f64,
    pub jobs: usize,
    pub budget: Budget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, scale: 1.0, jobs: 0, budget: Budget::default() }
    }
}

impl SuiteConfig {
    fn samples(&self, full: usize) -> usize {
        ((full as f64 * self.scale).round() as usize).max(1)
    }
}

pub const SUITES: [&str; 10] = [
    "basis-lemma",
    "hull",
    "idem",
    "cryptomorphism",
    "boolean-matroid",
    "field-count",
    "regular-exclusion",
    "maxplus-agreement",
    "closure-soundness",
    "bilinear",
];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let r = match name {
        "basis-lemma" => basis_lemma(cfg.seed, cfg.samples(10_000)),
        "hull" => hull_theorem(cfg.seed, cfg.samples(500)),
        "idem" => idem_theorem(cfg.seed, cfg.samples(500)),
        "cryptomorphism" => cryptomorphism(cfg.seed, cfg.samples(1000)),
        "boolean-matroid" => {
            let cases: &[(usize, usize)] = if cfg.scale >= 1.0 { &[(4, 2), (5, 2), (6, 3)] } else { &[(4, 2), (5, 2)] };
            boolean_matroid(cases, cfg.jobs)
        }
        "field-count" => field_count(cfg.jobs),
        "regular-exclusion" => regular_exclusion(),
        "maxplus-agreement" => maxplus_agreement(cfg.seed, cfg.samples(1000)),
        "closure-soundness" => closure_soundness(cfg.budget),
        "bilinear" => bilinear(cfg.seed, cfg.samples(50)),
        _ => return None,
    };
    Some(r)
}

fn timed(name: &'static str, body: impl FnOnce(&mut SuiteReport)) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new(name);
    body(&mut r);
    r.elapsed = start.elapsed();
    r
}

fn eps_power(inst: &Blueprint, k: usize, c: &Scalar) -> Scalar {
    (0..k).fold(c.clone(), |acc, _| inst.scalar_mul(&inst.eps(), &acc).expect("same preset"))
}

/// `normalize_wedge` against the inversion-count formula, and `wedge_all`
/// of basis vectors against the same monomial.
pub fn basis_lemma(seed: u64, samples: usize) -> SuiteReport {
    timed("basis-lemma", |r| {
        let mut rng = sampling::rng(seed);
        let presets = [Blueprint::f1pm(), Blueprint::gf(3).expect("prime"), Blueprint::rational()];
        for s in 0..samples {
            let inst = &presets[s % presets.len()];
            let n = rng.gen_range(1..=6);
            let seq = sampling::index_sequence(&mut rng, n, s % 2 == 0);
            let c = sampling::nonzero_scalar(inst, &mut rng);

            let distinct = seq.iter().collect::<BTreeSet<_>>().len() == seq.len();
            let expected = distinct.then(|| {
                let inv = (0..seq.len())
                    .flat_map(|i| (i + 1..seq.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| seq[i] > seq[j])
                    .count();
                WedgeMonomial { coeff: eps_power(inst, inv, &c), indices: IndexSet::from_indices(&seq, n).expect("in range") }
            });
            let got = normalize_wedge(inst, n, &seq, &c);
            r.check(got.as_ref() == Ok(&expected), || format!("{inst} n={n} {seq:?} c={c}: {got:?} vs {expected:?}"));

            let mut factors: Vec<ExteriorElement> =
                seq.iter().map(|&i| ExteriorElement::basis(inst, n, &[i]).expect("in range")).collect();
            if let Some(first) = factors.first_mut() {
                *first = first.scale(inst, &c).expect("same preset");
            }
            let prod = wedge_all(inst, n, &factors).expect("same preset");
            let want = match &expected {
                // the empty product carries no coefficient
                _ if seq.is_empty() => ExteriorElement::unit(inst, n),
                None => ExteriorElement::zero(n),
                Some(m) => ExteriorElement::from_terms(inst, n, [(m.indices, inst.sum([m.coeff.clone()]).unwrap())]).unwrap(),
            };
            r.check(prod == want, || format!("{inst} wedge_all {seq:?}: {prod:?} vs {want:?}"));
        }
    })
}

fn all_basis(inst: &Blueprint, n: usize) -> Vec<ExteriorElement> {
    (0..=n)
        .flat_map(|d| k_subsets(n, d))
        .map(|s| ExteriorElement::basis(inst, n, &s.indices()).expect("in range"))
        .collect()
}

/// `hull_realize(x ∧ y) = hull(x) ∧ hull(y)` over GF(2), GF(3) and Q.
pub fn hull_theorem(seed: u64, pairs: usize) -> SuiteReport {
    timed("hull", |r| {
        let mut rng = sampling::rng(seed);
        for inst in [Blueprint::gf(2).expect("prime"), Blueprint::gf(3).expect("prime"), Blueprint::rational()] {
            let basis = all_basis(&inst, 4);
            let mut cases: Vec<(ExteriorElement, ExteriorElement)> = Vec::new();
            for x in &basis {
                for y in &basis {
                    cases.push((x.clone(), y.clone()));
                }
            }
            for _ in 0..pairs {
                cases.push((sampling::exterior(&inst, &mut rng, 4, 0.4, 3), sampling::exterior(&inst, &mut rng, 4, 0.4, 3)));
            }
            for (x, y) in &cases {
                let lhs = hull_realize(&inst, &wedge(&inst, x, y).unwrap()).unwrap();
                let rhs = classical_wedge(&hull_realize(&inst, x).unwrap(), &hull_realize(&inst, y).unwrap()).unwrap();
                r.check(lhs == rhs, || format!("{inst}: {x:?} ∧ {y:?}"));
            }
        }
    })
}

/// `idem_realize(x ∧ y) = idem(x) ∧ idem(y)` over the boolean and max-plus
/// presets.
pub fn idem_theorem(seed: u64, pairs: usize) -> SuiteReport {
    timed("idem", |r| {
        let mut rng = sampling::rng(seed);
        for inst in [Blueprint::boolean(), Blueprint::maxplus()] {
            let basis = all_basis(&inst, 4);
            let mut cases: Vec<(ExteriorElement, ExteriorElement)> = Vec::new();
            for x in &basis {
                for y in &basis {
                    cases.push((x.clone(), y.clone()));
                }
            }
            for _ in 0..pairs {
                cases.push((sampling::exterior(&inst, &mut rng, 4, 0.4, 3), sampling::exterior(&inst, &mut rng, 4, 0.4, 3)));
            }
            for (x, y) in &cases {
                let lhs = idem_realize(&inst, &wedge(&inst, x, y).unwrap()).unwrap();
                let rhs = tropical_wedge(&idem_realize(&inst, x).unwrap(), &idem_realize(&inst, y).unwrap()).unwrap();
                r.check(lhs == rhs, || format!("{inst}: {x:?} ∧ {y:?}"));
            }
        }
    })
}

/// A random candidate of grade `d`, biased towards Plücker vectors so that
/// both verdicts occur.
fn candidate<R: Rng>(inst: &Blueprint, rng: &mut R, n: usize, d: usize) -> ExteriorElement {
    match rng.gen_range(0..3) {
        0 => sampling::h_element(inst, rng, n, d, 0.3),
        1 => {
            let delta = structured_gp(inst, rng, n, d);
            vector_from_gp(inst, &delta).expect("same preset")
        }
        _ => {
            let subsets = k_subsets(n, d);
            let s = subsets[rng.gen_range(0..subsets.len())];
            let c = sampling::nonzero_scalar(inst, rng);
            ExteriorElement::from_terms(inst, n, [(s, inst.sum([c]).unwrap())]).unwrap()
        }
    }
}

/// Realizable values: maximal minors for fields, sums of weights for
/// max-plus, uniform matroids for the boolean and sign presets.
fn structured_gp<R: Rng>(inst: &Blueprint, rng: &mut R, n: usize, d: usize) -> GpFunction {
    match inst.kind() {
        PresetKind::Field => loop {
            let rows: Vec<Vec<Scalar>> =
                (0..d).map(|_| (0..n).map(|_| sampling::scalar(inst, rng, 0.3)).collect()).collect();
            if let Ok(delta) = realize_from_matrix(inst, &rows) {
                return delta;
            }
        },
        PresetKind::Idempotent if inst.semifield() == Some(crate::oracles::arith::Semifield::MaxPlus) => {
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            GpFunction::from_fn(n, d, |s| {
                let total: i64 = s.iter().map(|i| w[i - 1]).sum();
                Scalar::Tropical(Tropical::Finite(num_rational::BigRational::from_integer(total.into())))
            })
        }
        _ => {
            let c = sampling::nonzero_scalar(inst, rng);
            GpFunction::from_fn(n, d, |_| c.clone())
        }
    }
}

/// `is_plucker_vector(v) = is_gp_function(gp_from_vector(v))` and
/// `vector_from_gp ∘ gp_from_vector = id` on every preset.
pub fn cryptomorphism(seed: u64, samples: usize) -> SuiteReport {
    timed("cryptomorphism", |r| {
        let presets = standard_presets();
        let parts: Vec<(SuiteReport, usize)> = presets
            .par_iter()
            .enumerate()
            .map(|(pi, inst)| {
                let mut part = SuiteReport::new("cryptomorphism");
                let mut rng = sampling::rng(seed.wrapping_add(pi as u64));
                let mut positives = 0;
                for _ in 0..samples {
                    let n = rng.gen_range(1..=5);
                    let d = rng.gen_range(0..=n.min(3));
                    let v = candidate(inst, &mut rng, n, d);
                    let lhs = is_plucker_vector(inst, &v, d, &OrderOracle::Preset).map(|x| x.verdict);
                    let delta = gp_from_vector(inst, &v, d);
                    let rhs = delta
                        .as_ref()
                        .map_err(Clone::clone)
                        .and_then(|g| is_gp_function(inst, g, &OrderOracle::Preset))
                        .map(|x| x.verdict);
                    positives += usize::from(lhs == Ok(Verdict::True));
                    part.check(lhs.is_ok() && lhs == rhs, || format!("{inst} n={n} d={d} {v:?}: {lhs:?} vs {rhs:?}"));
                    let back = delta.and_then(|g| vector_from_gp(inst, &g));
                    part.check(back.as_ref() == Ok(&v), || format!("{inst} round trip {v:?} -> {back:?}"));
                }
                (part, positives)
            })
            .collect();
        let mut pos = Vec::new();
        for ((part, p), inst) in parts.into_iter().zip(&presets) {
            r.absorb(part);
            pos.push(format!("{inst}:{p}"));
        }
        r.detail = format!("Plücker vectors per preset {}", pos.join(" "));
    })
}

fn family_of(code: u64, subsets: &[IndexSet]) -> Vec<IndexSet> {
    subsets.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, s)| *s).collect()
}

/// Over the boolean preset, a 0/1 function is a GP function iff its support
/// satisfies basis exchange. Exhaustive over all support families.
pub fn boolean_matroid(cases: &[(usize, usize)], jobs: usize) -> SuiteReport {
    timed("boolean-matroid", |r| {
        let b = Blueprint::boolean();
        let mut counts = Vec::new();
        for &(n, d) in cases {
            let subsets = k_subsets(n, d);
            let table = PluckerRelations::new(n, d);
            let total = 1u64 << subsets.len();
            let run = || {
                (0..total.div_ceil(1024))
                    .into_par_iter()
                    .map(|chunk| {
                        let mut part = SuiteReport::new("boolean-matroid");
                        let mut matroids = 0u64;
                        for code in chunk * 1024..((chunk + 1) * 1024).min(total) {
                            let values: Vec<Scalar> =
                                (0..subsets.len()).map(|i| Scalar::Bool(code >> i & 1 == 1)).collect();
                            let gp = gp_holds(&b, &table, &values);
                            let family = family_of(code, &subsets);
                            let ex = basis_exchange_check(&family);
                            matroids += u64::from(gp);
                            part.check(gp == ex, || format!("n={n} d={d} family {family:?}: gp={gp} exchange={ex}"));
                        }
                        (part, matroids)
                    })
                    .collect::<Vec<_>>()
            };
            let parts = with_jobs(jobs, run);
            let mut found = 0;
            for (part, m) in parts {
                r.absorb(part);
                found += m;
            }
            counts.push(format!("({n},{d}):{found}"));
        }
        r.detail = format!("matroids found {}", counts.join(" "));
    })
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// GF(2) GP functions coincide with Plücker coordinates of subspaces.
pub fn field_count(jobs: usize) -> SuiteReport {
    timed("field-count", |r| {
        let g2 = Blueprint::gf(2).expect("prime");
        let mut counts = Vec::new();
        for (n, d, expected) in [(3usize, 1usize, 7usize), (4, 2, 35)] {
            let gp: BTreeSet<GpFunction> =
                enumerate_gp(&g2, n, d, DEFAULT_ENUMERATION_CAP, jobs).unwrap_or_default().into_iter().collect();
            let sub: BTreeSet<GpFunction> =
                subspace_plucker_enumerate(2, n, d, DEFAULT_ENUMERATION_CAP).unwrap_or_default().into_iter().collect();
            r.check(gp.len() == expected, || format!("({n},{d}): enumerate_gp found {}, expected {expected}", gp.len()));
            r.check(sub.len() == expected, || format!("({n},{d}): subspaces {}, expected {expected}", sub.len()));
            r.check(gp == sub, || format!("({n},{d}): class sets differ"));
            counts.push(format!("({n},{d}):{}", gp.len()));
        }
        r.detail = format!("classes {}", counts.join(" "));
    })
}

/// All-ones `U_{2,4}` is not an `F1±`-matroid; its GF(3) realization is.
pub fn regular_exclusion() -> SuiteReport {
    timed("regular-exclusion", |r| {
        let f = Blueprint::f1pm();
        let ones = GpFunction::from_fn(4, 2, |_| f.one());
        let rep = is_gp_function(&f, &ones, &OrderOracle::Preset).expect("valid");
        r.check(rep.verdict == Verdict::False, || format!("f1pm all-ones verdict {:?}", rep.verdict));
        r.check(!rep.witnesses.is_empty(), || "no witnesses".into());
        for w in &rep.witnesses {
            let a = w.sum.count(&f.one());
            let b = w.sum.count(&f.eps());
            r.check(w.sum.len() == 3 && a != b, || format!("witness {} {} sum {}", w.x, w.y, w.sum));
        }
        let x1 = IndexSet::from_indices(&[1], 4).unwrap();
        let y234 = IndexSet::from_indices(&[2, 3, 4], 4).unwrap();
        let first = rep.witnesses.iter().find(|w| w.x == x1 && w.y == y234);
        let want = f.sum([f.eps(), f.one(), f.eps()]).unwrap();
        r.check(first.map(|w| &w.sum) == Some(&want), || format!("X={{1}} Y={{2,3,4}} witness {first:?}"));

        let g3 = Blueprint::gf(3).expect("prime");
        let col = |v: [u32; 4]| v.iter().map(|&x| Scalar::Residue(x)).collect::<Vec<_>>();
        let delta = realize_from_matrix(&g3, &[col([1, 0, 1, 1]), col([0, 1, 1, 2])]).expect("full rank");
        let rep = is_gp_function(&g3, &delta, &OrderOracle::Preset).expect("valid");
        r.check(rep.verdict == Verdict::True, || format!("GF(3) realization verdict {:?}", rep.verdict));
        let field = g3.field().expect("field");
        for x in k_subsets(4, 1) {
            for y in k_subsets(4, 3) {
                let s = plucker_sum(&g3, &delta, x, y).expect("sizes");
                let v = g3.hull_scalar(&s).expect("field");
                r.check(field.is_zero(&v), || format!("GF(3) relation {x} {y} sums to {v:?}"));
            }
        }
    })
}

/// Max-plus GP functions against the tropical Plücker oracle, `d = 2`.
pub fn maxplus_agreement(seed: u64, samples: usize) -> SuiteReport {
    timed("maxplus-agreement", |r| {
        let mp = Blueprint::maxplus();
        let mut rng = sampling::rng(seed);
        let mut positives = 0;
        for s in 0..samples {
            let n = rng.gen_range(2..=5);
            let v = if s % 2 == 0 {
                // small integer values make ties frequent
                let terms: Vec<(IndexSet, FormalSum)> = k_subsets(n, 2)
                    .into_iter()
                    .map(|k| {
                        let a = if rng.gen_bool(0.15) {
                            mp.zero()
                        } else {
                            Scalar::Tropical(Tropical::Finite(num_rational::BigRational::from_integer(rng.gen_range(0..=2).into())))
                        };
                        (k, mp.sum([a]).unwrap())
                    })
                    .collect();
                ExteriorElement::from_terms(&mp, n, terms).unwrap()
            } else {
                candidate(&mp, &mut rng, n, 2)
            };
            let gp = gp_from_vector(&mp, &v, 2)
                .and_then(|g| is_gp_function(&mp, &g, &OrderOracle::Preset))
                .map(|x| x.verdict == Verdict::True);
            let trop = idem_realize(&mp, &v).map(|t| tropical_plucker_check(&t, n, 2));
            positives += usize::from(trop == Ok(true));
            r.check(gp.is_ok() && gp == trop, || format!("n={n} {v:?}: gp={gp:?} oracle={trop:?}"));
        }
        r.detail = format!("{positives} tropical Plücker vectors among {samples}");
    })
}

fn sums_up_to(pool: &[Scalar], max: usize) -> Vec<FormalSum> {
    let mut out = vec![FormalSum::zero()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for cur in &layer {
            let start = cur.last().copied().unwrap_or(0);
            for i in start..pool.len() {
                let mut v = cur.clone();
                v.push(i);
                out.push(FormalSum::from_terms_unchecked(v.iter().map(|&k| pool[k].clone()).collect()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// The closure engine against the preset order and against exhaustive
/// saturation of the same generators.
pub fn closure_soundness(budget: Budget) -> SuiteReport {
    timed("closure-soundness", |r| {
        let presets = [Blueprint::f1pm(), Blueprint::gf(2).expect("prime"), Blueprint::gf(3).expect("prime"), Blueprint::boolean()];
        let mut derived = 0;
        for inst in &presets {
            let gens = preset_relations(inst, &[], 3);
            let pool: Vec<Scalar> = inst.units().expect("finite");
            let brute = brute_force_preorder(inst, &gens, &pool, 4);
            let sums = sums_up_to(&pool, 4);
            for lhs in sums.iter().filter(|s| s.len() <= 2) {
                for rhs in &sums {
                    let c = closure_decide_leq(inst, &gens, lhs, rhs, budget) == ClosureVerdict::Holds;
                    derived += usize::from(c);
                    if c {
                        if let Ok(exact) = inst.instance_leq(lhs, rhs) {
                            r.check(exact, || format!("{inst}: closure derived {lhs} ≤ {rhs}, preset rule rejects"));
                        }
                    }
                    let b = brute.leq(lhs, rhs);
                    r.check(b == Some(c), || format!("{inst}: {lhs} ≤ {rhs} closure={c} saturation={b:?}"));
                }
            }
            let one_eps = inst.sum([inst.one(), inst.eps()]).unwrap();
            let mut target = FormalSum::zero();
            for k in 1..=4 {
                target = inst.sum_add(&target, &one_eps).unwrap();
                let c = closure_decide_leq(inst, &gens, &FormalSum::zero(), &target, budget);
                r.check(c == ClosureVerdict::Holds, || format!("{inst}: 0 ≤ {k}(1+ε) not derived"));
            }
        }
        r.detail = format!("{derived} relations derived");
    })
}

/// Over GF(3), `n = m = 2`: the 81 scalar tables give distinct morphisms
/// and sampled morphisms are recovered from their restrictions.
pub fn bilinear(seed: u64, samples: usize) -> SuiteReport {
    timed("bilinear", |r| {
        let g = Blueprint::gf(3).expect("prime");
        let target = free_module(&g, 1);
        let pairs: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (2, 1), (2, 2)];
        let entry = |v: u32| -> FreeModuleElement {
            target.element([(1, g.sum([Scalar::Residue(v)]).unwrap())]).unwrap()
        };
        let mut maps = Vec::new();
        for code in 0..81u32 {
            let mut table = BTreeMap::new();
            let mut rest = code;
            for p in &pairs {
                let v = rest % 3;
                rest /= 3;
                if v != 0 {
                    table.insert(*p, entry(v));
                }
            }
            maps.push(BilinearMap { n: 2, m: 2, target_rank: 1, table });
        }
        let mut rng = sampling::rng(seed);
        let morphisms: Vec<TensorMorphism> = (0..samples)
            .map(|_| TensorMorphism {
                n: 2,
                m: 2,
                target_rank: 1,
                images: pairs
                    .iter()
                    .filter_map(|p| {
                        let v = rng.gen_range(0..3u32);
                        (v != 0).then(|| (*p, entry(v)))
                    })
                    .collect(),
            })
            .collect();
        let src = free_module(&g, 2);
        let probes: Vec<(FreeModuleElement, FreeModuleElement)> = (0..samples)
            .map(|_| {
                let mut el = || {
                    let a = sampling::sum(&g, &mut rng, 2);
                    let b = sampling::sum(&g, &mut rng, 2);
                    src.element([(1, a), (2, b)]).unwrap()
                };
                (el(), el())
            })
            .collect();
        match bilinear_correspondence_check(&g, 2, 2, 1, &maps, &morphisms, &probes) {
            Ok(rep) => {
                r.check(rep.distinct_maps == 81, || format!("{} distinct tables", rep.distinct_maps));
                r.check(rep.distinct_morphisms == 81, || format!("{} distinct morphisms", rep.distinct_morphisms));
                r.check(rep.injective, || "induced morphisms collide".into());
                r.check(rep.surjective, || "a morphism differs from its restriction's image".into());
                r.check(rep.factorization_holds, || "φ̄(x ⊗ y) ≠ φ(x, y) on a probe".into());
            }
            Err(e) => r.check(false, || e.to_string()),
        }
    })
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    SUITES.iter().filter_map(|s| run_suite(s, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let cfg = SuiteConfig { seed: 11, scale: 0.05, jobs: 2, budget: Budget::default() };
        for name in SUITES {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.mismatches);
        }
        assert!(run_suite("nope", &cfg).is_none());
    }
}
