//! End-to-end runs of the binary: outputs, schema, determinism, exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sunit-gcd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schemas/exceptional_scan.schema.json");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let s = schema();
    let msgs: Vec<String> = match s.validate(report) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("schema violations: {msgs:?}");
}

const SCAN: &[&str] = &[
    "exceptional-scan",
    "--function",
    "(X - 1)/(Y - 1)",
    "--epsilon",
    "3/5",
    "--primes",
    "2,3",
    "--bound",
    "6",
];

#[test]
fn exceptional_scan_report_matches_schema_and_is_deterministic() {
    let a = run(SCAN);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let report: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_valid(&report);
    assert_eq!(report["params"]["function"], "(X - 1)/(Y - 1)");
    assert_eq!(report["params"]["points_tested"], 13 * 13 * 13 * 13);
    let b = run(SCAN);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn every_selector_validates() {
    for sel in ["gcd-pair", "monomial-drop", "coordinate-drop", "shifted-gcd", "resultant-gcd"] {
        let o = run(&[
            "exceptional-scan",
            "--inequality",
            sel,
            "--function",
            "(X^2 - Y)/(X*Y + 1)",
            "--epsilon",
            "1/4",
            "--bound",
            "3",
            "--signs",
            "both",
        ]);
        assert_eq!(o.status.code(), Some(0), "{sel}: {}", stderr(&o));
        assert_valid(&serde_json::from_str(&stdout(&o)).unwrap());
    }
}

#[test]
fn large_epsilon_has_no_bounded_candidates_and_no_solutions() {
    let o = run(&["exceptional-scan", "--inequality", "shifted-gcd", "--epsilon", "2", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["candidates"], Value::Array(vec![]));
    assert_eq!(r["solutions"], Value::Array(vec![]));
    assert_valid(&r);
}

#[test]
fn config_file_then_flag_overrides() {
    let dir = std::env::temp_dir().join(format!("sunit-gcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("scan.json");
    let out = dir.join("out.csv");
    std::fs::write(&cfg, r#"{"primes": [2, 3], "exponent_bound": 5, "epsilon": "1/3"}"#).unwrap();
    let o = run(&["ratio-scan", "--config", cfg.to_str().unwrap(), "--bound", "1", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("u,v,H_ratio,H_1uv,"));
    assert_eq!(text.lines().count(), 1 + 64 + 1);
    assert!(text.ends_with("# skipped=17\n"));

    std::fs::write(&cfg, "{\"primes\": [2, 3],\n \"epsilon\": 0.5}").unwrap();
    let o = run(&["ratio-scan", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    std::fs::write(&cfg, r#"{"primes": [2, 9]}"#).unwrap();
    let o = run(&["ratio-scan", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("primes: 9 is not prime"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ratio_scan_bound_zero_skips_everything() {
    let o = run(&["ratio-scan", "--bound", "0"]);
    assert_eq!(stdout(&o), "u,v,H_ratio,H_1uv,h_ratio_num_f64,h_1uv_f64,ratio_f64,dependent,relation_p,relation_q\n# skipped=1\n");
}

#[test]
fn gcd_growth_rows_and_dependence_warning() {
    let o = run(&["gcd-growth", "2", "3", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(4).unwrap().starts_with("4,5,"));
    let o = run(&["gcd-growth", "2", "4", "--n-max", "2"]);
    assert!(stderr(&o).contains("multiplicatively dependent"));
    let o = run(&["gcd-growth", "1", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn candidates_modes() {
    let o = run(&["candidates", "--mode", "collision", "--function", "(X - 1)/(Y - 1)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pq: Vec<(i64, i64)> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["p"].as_i64().unwrap(), c["q"].as_i64().unwrap()))
        .collect();
    assert_eq!(pq, vec![(0, 1), (1, -1), (1, 0)]);
    let o = run(&["candidates", "--mode", "bounded", "--epsilon", "1/2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["candidates", "--mode", "bounded"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["candidates", "--mode", "collision", "--function", "(X+Y)/(2*X+2*Y)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("share a factor"));
}

#[test]
fn proof_trace_outputs_and_errors() {
    let o = run(&["proof-trace", "16", "81", "--epsilon", "1/4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let t = stdout(&o);
    assert!(t.contains("k=17 h=580"), "{t}");
    assert!(t.contains("final_bound"));
    let o = run(&["proof-trace", "16", "81", "--epsilon", "3/5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 10);
    assert_eq!(v["steps"][9]["status"], "pass");
    let o = run(&["proof-trace", "-1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["proof-trace", "1/2", "3", "--primes", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("prime 2 not in S"), "{}", stderr(&o));
}

#[test]
fn selfcheck_passes() {
    let o = run(&["selfcheck", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn bad_inequality_selector_is_a_config_error() {
    let o = run(&["exceptional-scan", "--inequality", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("inequality: unknown selector"));
}
