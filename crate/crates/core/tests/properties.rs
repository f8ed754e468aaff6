use proptest::prelude::*;

use ordblue::blueprints::{standard_presets, Blueprint, Decision, Scalar};
use ordblue::exterior::{hull_realize, idem_realize, wedge};
use ordblue::matroids::{canonical_class, enumerate_gp, is_gp_function, realize_from_matrix, OrderOracle, DEFAULT_ENUMERATION_CAP};
use ordblue::oracles::{classical_wedge, subspace_plucker_enumerate, tropical_wedge};
use ordblue::sampling;
use ordblue::Error;

fn preset() -> impl Strategy<Value = Blueprint> {
    prop::sample::select(standard_presets())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_associative(inst in preset(), seed: u64, n in 1usize..5) {
        let mut rng = sampling::rng(seed);
        let x = sampling::exterior(&inst, &mut rng, n, 0.4, 2);
        let y = sampling::exterior(&inst, &mut rng, n, 0.4, 2);
        let z = sampling::exterior(&inst, &mut rng, n, 0.4, 2);
        let left = wedge(&inst, &wedge(&inst, &x, &y).unwrap(), &z).unwrap();
        let right = wedge(&inst, &x, &wedge(&inst, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hull_and_idem_are_multiplicative(inst in preset(), seed: u64, n in 1usize..5) {
        let mut rng = sampling::rng(seed);
        let x = sampling::exterior(&inst, &mut rng, n, 0.5, 3);
        let y = sampling::exterior(&inst, &mut rng, n, 0.5, 3);
        let xy = wedge(&inst, &x, &y).unwrap();
        if inst.field().is_some() {
            let (hx, hy) = (hull_realize(&inst, &x).unwrap(), hull_realize(&inst, &y).unwrap());
            prop_assert_eq!(hull_realize(&inst, &xy).unwrap(), classical_wedge(&hx, &hy).unwrap());
        }
        if inst.semifield().is_some() {
            let (tx, ty) = (idem_realize(&inst, &x).unwrap(), idem_realize(&inst, &y).unwrap());
            prop_assert_eq!(idem_realize(&inst, &xy).unwrap(), tropical_wedge(&tx, &ty).unwrap());
        }
    }

    #[test]
    fn preset_order_is_a_preorder(inst in preset(), seed: u64) {
        let mut rng = sampling::rng(seed);
        let a = sampling::sum(&inst, &mut rng, 4);
        let b = sampling::sum(&inst, &mut rng, 4);
        let c = sampling::sum(&inst, &mut rng, 4);
        prop_assert_eq!(inst.decide(&a, &a).unwrap(), Decision::Holds);
        // unsupported shapes say nothing
        let leq = |x, y| inst.instance_leq(x, y).ok();
        if leq(&a, &b) == Some(true) && leq(&b, &c) == Some(true) {
            prop_assert_ne!(leq(&a, &c), Some(false));
        }
        // compatible with addition
        if leq(&a, &b) == Some(true) {
            let (ac, bc) = (inst.sum_add(&a, &c).unwrap(), inst.sum_add(&b, &c).unwrap());
            prop_assert_ne!(leq(&ac, &bc), Some(false));
        }
    }

    #[test]
    fn realized_matrices_are_gp(p in prop::sample::select(vec![2u32, 3, 5, 7]), seed: u64, d in 1usize..3, extra in 0usize..3) {
        use rand::Rng;
        let inst = Blueprint::gf(p).unwrap();
        let mut rng = sampling::rng(seed);
        let n = d + extra;
        let rows: Vec<Vec<Scalar>> =
            (0..d).map(|_| (0..n).map(|_| Scalar::Residue(rng.gen_range(0..p))).collect()).collect();
        match realize_from_matrix(&inst, &rows) {
            Ok(delta) => {
                prop_assert!(is_gp_function(&inst, &delta, &OrderOracle::Preset).unwrap().holds());
                let c = canonical_class(&inst, &delta).unwrap();
                prop_assert_eq!(canonical_class(&inst, &c).unwrap(), c);
            }
            Err(e) => prop_assert!(matches!(e, Error::RankDeficient(_)), "{e}"),
        }
    }
}

#[test]
fn subspaces_are_gp_classes() {
    let inst = Blueprint::gf(3).unwrap();
    let classes = enumerate_gp(&inst, 4, 2, DEFAULT_ENUMERATION_CAP, 0).unwrap();
    let subspaces = subspace_plucker_enumerate(3, 4, 2, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(subspaces.len(), 130);
    for s in &subspaces {
        let c = canonical_class(&inst, s).unwrap();
        assert!(classes.contains(&c), "{:?}", c.values());
    }
}
