use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ordblue")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    assert!(text.ends_with('\n'), "output not newline-terminated: {text:?}");
    (out.status.code().unwrap_or(-1), serde_json::from_str(&text).expect("json output"))
}

fn ones_u24(preset: Value) -> String {
    let values: serde_json::Map<String, Value> =
        ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"].iter().map(|k| (k.to_string(), json!("1"))).collect();
    json!({"preset": preset, "n": 4, "d": 2, "values": values}).to_string()
}

#[test]
fn wedge_of_basis_vectors() {
    let e = |i: usize| json!({"n": 4, "terms": [{"I": [i], "coeff": ["1"]}]});
    let (code, out) = run(&["wedge", "--preset", "f1pm", "--in", &json!([e(1), e(2)]).to_string()]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"n": 4, "terms": [{"I": [1, 2], "coeff": ["1"]}]}));
    let (_, swapped) = run(&["wedge", "--preset", "f1pm", "--in", &json!({"x": e(2), "y": e(1)}).to_string()]);
    assert_eq!(swapped["terms"][0]["coeff"], json!(["eps"]));
    let (_, square) = run(&["wedge", "--preset", "f1pm", "--in", &json!([e(3), e(3)]).to_string()]);
    assert_eq!(square["terms"], json!([]));
}

#[test]
fn check_gp_verdicts_and_exit_codes() {
    let (code, out) = run(&["check-gp", "--in", &ones_u24(json!({"preset": "gf", "p": 2}))]);
    assert_eq!(code, 1);
    assert_eq!(out["verdict"], json!(false));
    assert!(out["witnesses"].as_array().unwrap().iter().all(|w| w["sum"] == json!(["1", "1", "1"])));

    let (code, out) = run(&["check-gp", "--in", &ones_u24(json!({"preset": "boolean"}))]);
    assert_eq!((code, &out["verdict"]), (0, &json!(true)));

    let (code, out) = run(&["check-gp", "--preset", "f1pm", "--in", &ones_u24(json!({"preset": "f1pm"}))]);
    assert_eq!(code, 1);
    let first = &out["witnesses"][0];
    assert_eq!((&first["X"], &first["Y"], &first["sum"]), (&json!([1]), &json!([2, 3, 4]), &json!(["1", "eps", "eps"])));

    // the closure engine never refutes, so failing relations become undecided
    let (code, out) = run(&["check-gp", "--budget", "0", "--in", &ones_u24(json!({"preset": "f1pm"}))]);
    assert_eq!((code, &out["verdict"]), (3, &json!("indeterminate")));
    assert_eq!(out["witnesses"], json!([]));
}

#[test]
fn indeterminate_exit_code() {
    let e12 = json!({"n": 3, "terms": [{"I": [1, 2], "coeff": ["1"]}, {"I": [1, 3], "coeff": ["1"]}, {"I": [2, 3], "coeff": ["1"]}]});
    let (code, out) = run(&["check-plucker", "--preset", "f1pm", "--budget", "0", "--in", &e12.to_string()]);
    assert_eq!(code, 3, "{out}");
    assert_eq!(out["verdict"], json!("indeterminate"));
}

#[test]
fn enumerate_matches_oracles() {
    let (code, out) = run(&["enumerate-gp", "--preset", "boolean", "4", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["count"], out["oracle_count"]);
    assert_eq!(out["classes"].as_array().unwrap().len() as u64, out["count"].as_u64().unwrap());
    let (_, out) = run(&["enumerate-gp", "--preset", "gf2", "--jobs", "2", "4", "2"]);
    assert_eq!((out["count"].clone(), out["oracle_count"].clone()), (json!(35), json!(35)));
    let (code, out) = run(&["enumerate-gp", "--preset", "gf2", "--cap", "10", "4", "2"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], json!("CapExceeded"));
    let (code, _) = run(&["enumerate-gp", "--preset", "rational", "3", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn emitted_json_reparses() {
    let (_, gp) = run(&["realize", "--preset", "gf3", "--in", r#"[["1","0","1","1"],["0","1","1","2"]]"#]);
    assert_eq!(gp["values"]["1,4"], json!("2"));
    let (code, report) = run(&["check-gp", "--in", &gp.to_string()]);
    assert_eq!((code, &report["verdict"]), (0, &json!(true)));

    let (_, classes) = run(&["enumerate-gp", "--preset", "gf2", "3", "1"]);
    for c in classes["classes"].as_array().unwrap() {
        let (code, _) = run(&["check-gp", "--in", &c.to_string()]);
        assert_eq!(code, 0);
    }

    let x = json!({"n": 3, "terms": [{"I": [1], "coeff": ["1", "eps"]}, {"I": [2, 3], "coeff": ["eps"]}]});
    let (_, w) = run(&["wedge", "--preset", "f1pm", "--in", &json!([x, x]).to_string()]);
    let (code, again) = run(&["wedge", "--preset", "f1pm", "--in", &json!([w.clone()]).to_string()]);
    assert_eq!((code, again), (0, w));
}

#[test]
fn hull_and_idem() {
    let x = json!({"n": 2, "terms": [{"I": [1, 2], "coeff": ["1", "1", "1", "2"]}]});
    let (_, h) = run(&["hull", "--preset", "gf3", "--in", &x.to_string()]);
    assert_eq!(h["terms"][0]["coeff"], json!(["2"]));
    let (code, _) = run(&["hull", "--preset", "boolean", "--in", &x.to_string().replace("\"2\"", "\"1\"")]);
    assert_eq!(code, 2);
    let y = json!({"n": 2, "terms": [{"I": [1, 2], "coeff": ["q:1", "q:3/2"]}]});
    let (_, t) = run(&["idem", "--preset", "maxplus", "--in", &y.to_string()]);
    assert_eq!(t["terms"][0]["coeff"], json!(["q:3/2"]));
}

#[test]
fn closure_command() {
    let (code, out) = run(&["closure", "--preset", "f1pm", "--in", r#"{"lhs":[],"rhs":["1","eps","1","eps"]}"#]);
    assert_eq!((code, &out["verdict"]), (0, &json!("holds")));
    let (code, out) = run(&["closure", "--preset", "f1pm", "--in", r#"{"lhs":[],"rhs":["1"]}"#]);
    assert_eq!((code, &out["verdict"]), (3, &json!("unknown")));
    let custom = r#"{"lhs":["1"],"rhs":["2"],"gens":[{"lhs":["1"],"rhs":["2"]}]}"#;
    let (code, _) = run(&["closure", "--preset", "gf5", "--in", custom]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors() {
    for args in [
        vec!["check-gp", "--preset", "sign", "--in", "{}"],
        vec!["wedge", "--preset", "gf4", "--in", "[]"],
        vec!["wedge", "--in", "[]"],
        vec!["wedge", "--preset", "f1pm", "--in", "[{\"n\":2,\"terms\":[{\"I\":[3],\"coeff\":[\"1\"]}]}]"],
        vec!["check-gp", "--in", "{\"preset\":\"f1pm\",\"n\":3,\"d\":1,\"values\":{\"1\":\"1\"}}"],
        vec!["check-gp", "--in", "/nonexistent/file.json"],
        vec!["oracle-compare", "--suite", "nope"],
        vec!["frobnicate"],
    ] {
        let (code, out) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out["error"]["kind"].is_string() && out["error"]["message"].is_string(), "{args:?}: {out}");
    }
}

#[test]
fn oracle_compare_is_deterministic() {
    let args = ["oracle-compare", "--suite", "cryptomorphism", "--scale", "0.02", "--seed", "9"];
    let a = Command::new(env!("CARGO_BIN_EXE_ordblue")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_ordblue")).args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("ordblue-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let status = Command::new(env!("CARGO_BIN_EXE_ordblue"))
        .args(["realize", "--preset", "rational", "--in", r#"[["1","1/2"]]"#, "--out", path.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["values"]["2"], json!("1/2"));
    std::fs::remove_dir_all(dir).ok();
}
