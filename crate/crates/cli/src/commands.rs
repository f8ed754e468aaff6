use serde_json::{json, Value};

use ordblue::blueprints::{
    closure_decide_leq, preset_relations, Blueprint, Budget, ClosureVerdict, FormalSum, Preset, RelationSet, Scalar,
};
use ordblue::differential::{run_suite, SuiteConfig, SUITES};
use ordblue::exterior::{hull_realize, idem_realize, wedge_all, ExteriorElement};
use ordblue::json::{
    classical_to_json, exterior_from_json, exterior_to_json, gp_from_json, gp_to_json, matrix_from_json,
    preset_to_json, report_to_json, sum_from_json, tropical_to_json,
};
use ordblue::matroids::{
    enumerate_gp, is_gp_function, is_plucker_vector, realize_from_matrix, OrderOracle, PluckerReport, Verdict,
    DEFAULT_ENUMERATION_CAP,
};
use ordblue::oracles::{basis_exchange_check, subspace_plucker_enumerate};
use ordblue::subsets::k_subsets;
use ordblue::Error;

use crate::{read_input, Common, Failure, OK, UNKNOWN, VERDICT_FALSE};

type Outcome = Result<(Value, u8), Failure>;

fn blueprint(c: &Common) -> Result<Blueprint, Failure> {
    let p = c.preset.as_deref().ok_or_else(|| Failure::new("MissingPreset", "--preset is required"))?;
    Ok(Blueprint::new(p.parse::<Preset>()?)?)
}

fn budget(c: &Common) -> Budget {
    let mut b = Budget::default();
    if let Some(n) = c.budget {
        b.max_states = n;
    }
    b
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::True => OK,
        Verdict::False => VERDICT_FALSE,
        Verdict::Indeterminate => UNKNOWN,
    }
}

fn report(inst: &Blueprint, r: &PluckerReport) -> Outcome {
    Ok((report_to_json(inst, r), verdict_code(r.verdict)))
}

fn oracle(c: &Common, inst: &Blueprint, pool: &[Scalar]) -> OrderOracle {
    match c.budget {
        None => OrderOracle::Preset,
        Some(_) => OrderOracle::Closure { relations: preset_relations(inst, pool, 3), budget: budget(c) },
    }
}

pub fn wedge(c: &Common) -> Outcome {
    let inst = blueprint(c)?;
    let input = read_input(&c.input)?;
    let items: Vec<&Value> = match &input {
        Value::Array(xs) => xs.iter().collect(),
        Value::Object(m) if m.contains_key("factors") => m["factors"]
            .as_array()
            .ok_or_else(|| Failure::new("Parse", "`factors` must be a list"))?
            .iter()
            .collect(),
        Value::Object(m) if m.contains_key("x") && m.contains_key("y") => vec![&m["x"], &m["y"]],
        _ => return Err(Failure::new("Parse", "expected a list of exterior elements or {\"x\":..,\"y\":..}")),
    };
    let factors = items.into_iter().map(|v| exterior_from_json(&inst, v)).collect::<Result<Vec<_>, _>>()?;
    let n = factors.first().map(ExteriorElement::dim).ok_or_else(|| Failure::new("Parse", "no factors given"))?;
    let prod = wedge_all(&inst, n, &factors)?;
    Ok((exterior_to_json(&inst, &prod), OK))
}

pub fn check_gp(c: &Common) -> Outcome {
    let expected = c.preset.as_ref().map(|_| blueprint(c)).transpose()?;
    let (inst, delta) = gp_from_json(&read_input(&c.input)?, expected.as_ref())?;
    let r = is_gp_function(&inst, &delta, &oracle(c, &inst, delta.values()))?;
    report(&inst, &r)
}

pub fn check_plucker(c: &Common, rank: Option<usize>) -> Outcome {
    let inst = blueprint(c)?;
    let v = exterior_from_json(&inst, &read_input(&c.input)?)?;
    let d = match (rank, v.pure_grade()) {
        (Some(d), _) => d,
        (None, Some(d)) => d,
        (None, None) if v.is_zero() => return Err(Failure::new("MissingRank", "--rank is required for the zero element")),
        (None, None) => return Err(Error::NotHomogeneous.into()),
    };
    let pool: Vec<Scalar> = v.terms().values().flat_map(|s| s.terms().iter().cloned()).collect();
    let r = is_plucker_vector(&inst, &v, d, &oracle(c, &inst, &pool))?;
    report(&inst, &r)
}

pub fn enumerate(c: &Common, n: usize, d: usize) -> Outcome {
    let inst = blueprint(c)?;
    let cap = c.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let classes = enumerate_gp(&inst, n, d, cap, c.jobs)?;
    let mut out = json!({
        "preset": preset_to_json(&inst.preset()),
        "n": n,
        "d": d,
        "count": classes.len(),
        "classes": classes.iter().map(|g| gp_to_json(&inst, g)).collect::<Vec<_>>(),
    });
    match inst.preset() {
        Preset::Boolean => {
            let subsets = k_subsets(n, d);
            let count = (0u64..1 << subsets.len())
                .filter(|code| {
                    let family: Vec<_> =
                        subsets.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, s)| *s).collect();
                    basis_exchange_check(&family)
                })
                .count();
            out["oracle_count"] = json!(count);
        }
        Preset::Gf { p } => {
            if let Ok(subspaces) = subspace_plucker_enumerate(p, n, d, cap) {
                out["oracle_count"] = json!(subspaces.len());
            }
        }
        _ => {}
    }
    Ok((out, OK))
}

pub fn realize(c: &Common) -> Outcome {
    let inst = blueprint(c)?;
    let rows = matrix_from_json(&inst, &read_input(&c.input)?)?;
    let delta = realize_from_matrix(&inst, &rows)?;
    Ok((gp_to_json(&inst, &delta), OK))
}

pub fn hull(c: &Common) -> Outcome {
    let inst = blueprint(c)?;
    let v = exterior_from_json(&inst, &read_input(&c.input)?)?;
    Ok((classical_to_json(&inst, &hull_realize(&inst, &v)?)?, OK))
}

pub fn idem(c: &Common) -> Outcome {
    let inst = blueprint(c)?;
    let v = exterior_from_json(&inst, &read_input(&c.input)?)?;
    Ok((tropical_to_json(&inst, &idem_realize(&inst, &v)?)?, OK))
}

pub fn oracle_compare(c: &Common, suite: Option<&str>, scale: f64) -> Outcome {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Failure::new("Usage", "--scale must be positive"));
    }
    let names: Vec<&str> = match suite {
        Some(s) if SUITES.contains(&s) => vec![s],
        Some(s) => return Err(Failure::new("UnknownSuite", format!("`{s}`; known: {}", SUITES.join(", ")))),
        None => SUITES.to_vec(),
    };
    let cfg = SuiteConfig { seed: c.seed, scale, jobs: c.jobs, budget: budget(c) };
    let mut all = true;
    let mut suites = Vec::new();
    for name in names {
        let r = run_suite(name, &cfg).expect("known suite");
        all &= r.passed();
        suites.push(json!({
            "name": r.name,
            "passed": r.passed(),
            "cases": r.cases,
            "failures": r.failures,
            "mismatches": r.mismatches,
            "detail": r.detail,
        }));
    }
    let out = json!({ "seed": c.seed, "scale": scale, "passed": all, "suites": suites });
    Ok((out, if all { OK } else { VERDICT_FALSE }))
}

pub fn closure(c: &Common) -> Outcome {
    let inst = blueprint(c)?;
    let input = read_input(&c.input)?;
    let side = |k: &str| -> Result<FormalSum, Failure> {
        let v = input.get(k).ok_or_else(|| Failure::new("Parse", format!("missing field `{k}`")))?;
        Ok(sum_from_json(&inst, v)?)
    };
    let (lhs, rhs) = (side("lhs")?, side("rhs")?);
    let gens = match input.get("gens") {
        Some(Value::Array(gs)) => {
            let mut out = Vec::new();
            for g in gs {
                let l = g.get("lhs").ok_or_else(|| Failure::new("Parse", "generator without `lhs`"))?;
                let r = g.get("rhs").ok_or_else(|| Failure::new("Parse", "generator without `rhs`"))?;
                out.push((sum_from_json(&inst, l)?, sum_from_json(&inst, r)?));
            }
            RelationSet::new(out)
        }
        Some(_) => return Err(Failure::new("Parse", "`gens` must be a list")),
        None => {
            let pool: Vec<Scalar> = lhs.terms().iter().chain(rhs.terms()).cloned().collect();
            preset_relations(&inst, &pool, 3)
        }
    };
    let verdict = closure_decide_leq(&inst, &gens, &lhs, &rhs, budget(c));
    let rule = match inst.instance_leq(&lhs, &rhs) {
        Ok(true) => json!("holds"),
        Ok(false) => json!("fails"),
        Err(_) => Value::Null,
    };
    let (name, code) = match verdict {
        ClosureVerdict::Holds => ("holds", OK),
        ClosureVerdict::Unknown => ("unknown", UNKNOWN),
    };
    Ok((json!({ "verdict": name, "preset_rule": rule, "generators": gens.len() }), code))
}
