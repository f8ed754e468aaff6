//! JSON encodings shared by the library and the command line.
//!
//! Scalars are strings (`"0"`, `"1"`, `"eps"`, residues, `"a/b"`,
//! `"q:a/b"`, `"q:-inf"`), formal sums are lists of scalar strings and
//! index sets are either integer lists or comma-separated keys.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::blue_modules::{free_module, FreeModuleElement};
use crate::blueprints::{Blueprint, FormalSum, Preset, Scalar};
use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::matroids::{GpFunction, PluckerReport, Verdict, Witness};
use crate::oracles::{ClassicalExteriorElement, TropicalExteriorElement};
use crate::subsets::{IndexSet, MAX_N};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("`{what}` must be a non-negative integer")))
}

fn dim(v: &Value) -> Result<usize> {
    let n = as_usize(field(v, "n")?, "n")?;
    if n > MAX_N {
        return Err(Error::IndexOutOfRange { index: n, n: MAX_N });
    }
    Ok(n)
}

pub fn preset_to_json(p: &Preset) -> Value {
    serde_json::to_value(p).expect("preset serializes")
}

pub fn preset_from_json(v: &Value) -> Result<Preset> {
    match v {
        Value::String(s) => s.parse(),
        _ => serde_json::from_value(v.clone()).map_err(|e| Error::UnknownPreset(e.to_string())),
    }
}

pub fn scalar_to_json(inst: &Blueprint, a: &Scalar) -> Value {
    Value::String(inst.format_scalar(a))
}

pub fn scalar_from_json(inst: &Blueprint, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => inst.parse_scalar(s),
        Value::Number(n) => inst.parse_scalar(&n.to_string()),
        _ => Err(parse_err(format!("scalar must be a string, got {v}"))),
    }
}

pub fn sum_to_json(inst: &Blueprint, x: &FormalSum) -> Value {
    Value::Array(x.terms().iter().map(|t| scalar_to_json(inst, t)).collect())
}

/// A list of scalars, or a single scalar as a one-term sum.
pub fn sum_from_json(inst: &Blueprint, v: &Value) -> Result<FormalSum> {
    match v {
        Value::Array(items) => inst.sum(items.iter().map(|t| scalar_from_json(inst, t)).collect::<Result<Vec<_>>>()?),
        _ => inst.sum([scalar_from_json(inst, v)?]),
    }
}

pub fn index_set_to_json(s: IndexSet) -> Value {
    json!(s.indices())
}

pub fn index_set_from_json(v: &Value, n: usize) -> Result<IndexSet> {
    match v {
        Value::Array(items) => {
            let ix = items.iter().map(|i| as_usize(i, "index")).collect::<Result<Vec<_>>>()?;
            IndexSet::from_indices(&ix, n)
        }
        Value::String(s) => index_set_from_key(s, n),
        _ => Err(Error::MalformedIndexSet(v.to_string())),
    }
}

/// Parses `"1,2,4"`; the empty string is the empty set.
pub fn index_set_from_key(s: &str, n: usize) -> Result<IndexSet> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IndexSet::EMPTY);
    }
    let ix = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::MalformedIndexSet(s.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let set = IndexSet::from_indices(&ix, n)?;
    if set.indices() != ix {
        return Err(Error::MalformedIndexSet(format!("`{s}` is not increasing")));
    }
    Ok(set)
}

pub fn module_element_to_json(inst: &Blueprint, x: &FreeModuleElement) -> Value {
    let coeffs: Map<String, Value> = x
        .coeffs()
        .iter()
        .map(|(i, c)| (i.to_string(), sum_to_json(inst, c)))
        .collect();
    json!({ "n": x.dim(), "coeffs": coeffs })
}

pub fn module_element_from_json(inst: &Blueprint, v: &Value) -> Result<FreeModuleElement> {
    let n = dim(v)?;
    let coeffs = field(v, "coeffs")?
        .as_object()
        .ok_or_else(|| parse_err("`coeffs` must be an object"))?;
    let mut entries = Vec::new();
    for (k, c) in coeffs {
        let i: usize = k.parse().map_err(|_| parse_err(format!("bad coordinate `{k}`")))?;
        entries.push((i, sum_from_json(inst, c)?));
    }
    free_module(inst, n).element(entries)
}

pub fn exterior_to_json(inst: &Blueprint, x: &ExteriorElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(k, c)| json!({ "I": index_set_to_json(*k), "coeff": sum_to_json(inst, c) }))
        .collect();
    json!({ "n": x.dim(), "terms": terms })
}

pub fn exterior_from_json(inst: &Blueprint, v: &Value) -> Result<ExteriorElement> {
    let n = dim(v)?;
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| parse_err("`terms` must be a list"))?;
    let mut out = Vec::new();
    for t in terms {
        let set = index_set_from_json(field(t, "I")?, n)?;
        out.push((set, sum_from_json(inst, field(t, "coeff")?)?));
    }
    ExteriorElement::from_terms(inst, n, out)
}

/// Classical images use the exterior schema with one-term coefficients.
pub fn classical_to_json(inst: &Blueprint, x: &ClassicalExteriorElement) -> Result<Value> {
    let mut terms = Vec::new();
    for (k, c) in x.terms() {
        let s = inst.from_field_elem(c)?;
        terms.push(json!({ "I": index_set_to_json(*k), "coeff": [scalar_to_json(inst, &s)] }));
    }
    Ok(json!({ "n": x.dim(), "terms": terms }))
}

pub fn tropical_to_json(inst: &Blueprint, x: &TropicalExteriorElement) -> Result<Value> {
    let mut terms = Vec::new();
    for (k, c) in x.terms() {
        let s = inst.from_semifield_elem(c)?;
        terms.push(json!({ "I": index_set_to_json(*k), "coeff": [scalar_to_json(inst, &s)] }));
    }
    Ok(json!({ "n": x.dim(), "terms": terms }))
}

pub fn gp_to_json(inst: &Blueprint, delta: &GpFunction) -> Value {
    let values: Map<String, Value> = delta
        .iter()
        .map(|(s, v)| (s.to_string(), scalar_to_json(inst, v)))
        .collect();
    json!({
        "preset": preset_to_json(&inst.preset()),
        "n": delta.n(),
        "d": delta.rank(),
        "values": values,
    })
}

/// Reads a GP function. The embedded preset wins unless `expected` is given,
/// in which case both must agree.
pub fn gp_from_json(v: &Value, expected: Option<&Blueprint>) -> Result<(Blueprint, GpFunction)> {
    let inst = match (v.get("preset"), expected) {
        (Some(p), Some(e)) => {
            let p = preset_from_json(p)?;
            if p != e.preset() {
                return Err(Error::InstanceMismatch(p.name(), e.to_string()));
            }
            e.clone()
        }
        (Some(p), None) => Blueprint::new(preset_from_json(p)?)?,
        (None, Some(e)) => e.clone(),
        (None, None) => return Err(parse_err("missing field `preset`")),
    };
    let n = dim(v)?;
    let d = as_usize(field(v, "d")?, "d")?;
    let values = field(v, "values")?
        .as_object()
        .ok_or_else(|| parse_err("`values` must be an object"))?;
    let mut map = BTreeMap::new();
    for (k, s) in values {
        let set = index_set_from_key(k, n)?;
        if set.len() != d {
            return Err(Error::MalformedIndexSet(format!("`{k}` does not have {d} elements")));
        }
        map.insert(set, scalar_from_json(&inst, s)?);
    }
    if map.len() != values.len() {
        return Err(Error::MalformedIndexSet("duplicate keys".into()));
    }
    let delta = GpFunction::from_map(&inst, n, d, &map)?;
    Ok((inst, delta))
}

pub fn matrix_from_json(inst: &Blueprint, v: &Value) -> Result<Vec<Vec<Scalar>>> {
    let rows = match v {
        Value::Object(_) => field(v, "rows")?,
        _ => v,
    };
    rows.as_array()
        .ok_or_else(|| parse_err("matrix must be a list of rows"))?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("matrix row must be a list"))?
                .iter()
                .map(|a| scalar_from_json(inst, a))
                .collect()
        })
        .collect()
}

pub fn verdict_to_json(v: Verdict) -> Value {
    match v {
        Verdict::True => Value::Bool(true),
        Verdict::False => Value::Bool(false),
        Verdict::Indeterminate => Value::String("indeterminate".into()),
    }
}

pub fn verdict_from_json(v: &Value) -> Result<Verdict> {
    match v {
        Value::Bool(true) => Ok(Verdict::True),
        Value::Bool(false) => Ok(Verdict::False),
        Value::String(s) if s == "indeterminate" => Ok(Verdict::Indeterminate),
        _ => Err(parse_err(format!("bad verdict {v}"))),
    }
}

pub fn witness_to_json(inst: &Blueprint, w: &Witness) -> Value {
    json!({ "X": index_set_to_json(w.x), "Y": index_set_to_json(w.y), "sum": sum_to_json(inst, &w.sum) })
}

pub fn witness_from_json(inst: &Blueprint, v: &Value) -> Result<Witness> {
    Ok(Witness {
        x: index_set_from_json(field(v, "X")?, MAX_N)?,
        y: index_set_from_json(field(v, "Y")?, MAX_N)?,
        sum: sum_from_json(inst, field(v, "sum")?)?,
    })
}

pub fn report_to_json(inst: &Blueprint, r: &PluckerReport) -> Value {
    json!({
        "verdict": verdict_to_json(r.verdict),
        "in_h": r.in_h,
        "has_unit": r.has_unit,
        "witnesses": r.witnesses.iter().map(|w| witness_to_json(inst, w)).collect::<Vec<_>>(),
        "undecided": r.undecided.iter().map(|w| witness_to_json(inst, w)).collect::<Vec<_>>(),
    })
}

pub fn report_from_json(inst: &Blueprint, v: &Value) -> Result<PluckerReport> {
    let flag = |k: &str| field(v, k)?.as_bool().ok_or_else(|| parse_err(format!("`{k}` must be a bool")));
    let list = |k: &str| -> Result<Vec<Witness>> {
        field(v, k)?
            .as_array()
            .ok_or_else(|| parse_err(format!("`{k}` must be a list")))?
            .iter()
            .map(|w| witness_from_json(inst, w))
            .collect()
    };
    Ok(PluckerReport {
        verdict: verdict_from_json(field(v, "verdict")?)?,
        in_h: flag("in_h")?,
        has_unit: flag("has_unit")?,
        witnesses: list("witnesses")?,
        undecided: list("undecided")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroids::{is_gp_function, OrderOracle};

    #[test]
    fn module_schema() {
        let f = Blueprint::f1pm();
        let v: Value = serde_json::from_str(r#"{"n":4,"coeffs":{"1":["1"],"3":["eps","1"]}}"#).unwrap();
        let x = module_element_from_json(&f, &v).unwrap();
        assert_eq!(x.coeff(3).len(), 2);
        assert_eq!(module_element_from_json(&f, &module_element_to_json(&f, &x)).unwrap(), x);
        let bad: Value = serde_json::from_str(r#"{"n":2,"coeffs":{"3":["1"]}}"#).unwrap();
        assert!(module_element_from_json(&f, &bad).is_err());
    }

    #[test]
    fn exterior_schema() {
        let f = Blueprint::f1pm();
        let v: Value =
            serde_json::from_str(r#"{"n":4,"terms":[{"I":[1,2],"coeff":["eps","eps"]},{"I":[3],"coeff":["1"]}]}"#).unwrap();
        let x = exterior_from_json(&f, &v).unwrap();
        assert_eq!(exterior_from_json(&f, &exterior_to_json(&f, &x)).unwrap(), x);
        // terms are ordered by grade, then lexicographically
        assert_eq!(exterior_to_json(&f, &x)["terms"][0]["I"], json!([3]));
        let dup: Value = serde_json::from_str(r#"{"n":4,"terms":[{"I":[1,1],"coeff":["1"]}]}"#).unwrap();
        assert!(exterior_from_json(&f, &dup).is_err());
    }

    #[test]
    fn gp_schema_and_report() {
        let g2 = Blueprint::gf(2).unwrap();
        let text = r#"{"preset":{"preset":"gf","p":2},"n":4,"d":2,
            "values":{"1,2":"1","1,3":"1","1,4":"1","2,3":"1","2,4":"1","3,4":"1"}}"#;
        let v: Value = serde_json::from_str(text).unwrap();
        let (inst, delta) = gp_from_json(&v, None).unwrap();
        assert_eq!(inst, g2);
        assert_eq!(gp_from_json(&gp_to_json(&inst, &delta), Some(&g2)).unwrap().1, delta);
        assert!(matches!(gp_from_json(&v, Some(&Blueprint::boolean())), Err(Error::InstanceMismatch(..))));

        let r = is_gp_function(&inst, &delta, &OrderOracle::Preset).unwrap();
        let out = report_to_json(&inst, &r);
        assert_eq!(out["verdict"], Value::Bool(false));
        let w = &out["witnesses"][0];
        assert_eq!(w["sum"], json!(["1", "1", "1"]));
        assert_eq!(report_from_json(&inst, &out).unwrap(), r);

        let mut missing = v.clone();
        missing["values"].as_object_mut().unwrap().remove("3,4");
        assert!(gp_from_json(&missing, None).is_err());
        let mut unsorted = v.clone();
        unsorted["values"].as_object_mut().unwrap().remove("3,4");
        unsorted["values"]["4,3"] = json!("1");
        assert!(gp_from_json(&unsorted, None).is_err());
    }

    #[test]
    fn presets_and_scalars() {
        assert_eq!(preset_from_json(&json!({"preset":"gf","p":3})).unwrap(), Preset::Gf { p: 3 });
        assert_eq!(preset_from_json(&json!("maxplus")).unwrap(), Preset::Maxplus);
        assert!(preset_from_json(&json!({"preset":"sign"})).is_err());
        let mp = Blueprint::maxplus();
        for s in ["q:-inf", "q:3/2", "q:-4"] {
            let a = scalar_from_json(&mp, &json!(s)).unwrap();
            assert_eq!(scalar_to_json(&mp, &a), json!(s));
        }
        let g = Blueprint::gf(5).unwrap();
        assert_eq!(matrix_from_json(&g, &json!([["1", "2"], ["0", "4"]])).unwrap()[1][1], Scalar::Residue(4));
    }
}
