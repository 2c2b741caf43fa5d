use std::path::PathBuf;
use std::process::{Command, Output};

fn crlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crlie")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    crlie(args).status.code().expect("exit code")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("crlie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "su2", "--checks", "jacobi,killing"]), 0);
    assert_eq!(code(&["verify", "broken_heis3"]), 1);
    assert_eq!(code(&["verify", "does_not_exist"]), 2);
    assert_eq!(code(&["verify", "su2", "--checks", "bogus"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["suite", "nope"]), 2);
    assert_eq!(code(&["flat", "check", "--kind", "su2", "--s", "1"]), 0);
    assert_eq!(code(&["flat", "check", "--kind", "su2", "--s", "2"]), 1);
    assert_eq!(code(&["thm4", "--m", "3", "--p", "1", "--q", "1"]), 2);
    assert_eq!(code(&["cr", "sl2R", "--cr", "k_X1", "--expect", "normal=true"]), 1);
    assert_eq!(code(&["cr", "sl2R", "--cr", "k_Z1", "--expect", "normal=true"]), 0);
    assert_eq!(code(&["embed", "heisenberg", "--m", "2", "--eps", "+x"]), 2);
}

#[test]
fn malformed_catalog_is_a_parse_error() {
    let path = tmp("bad.json");
    std::fs::write(&path, r#"{"name": "x", "dim": 2, "basis": ["A"], "real": true, "brackets": []}"#).unwrap();
    assert_eq!(code(&["verify", path.to_str().unwrap()]), 2);
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(code(&["verify", path.to_str().unwrap()]), 2);
}

#[test]
fn json_is_byte_deterministic() {
    let a = crlie(&["suite", "thm1", "--format", "json", "--seed", "5"]);
    let b = crlie(&["suite", "thm1", "--format", "json", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "thm1");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c.get("elapsed").is_none()));
}

#[test]
fn discrepancies_do_not_fail() {
    let out = crlie(&["classify3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("DISCREPANCY") && text.contains("discrepancies"));
}

#[test]
fn su_dump_round_trips() {
    let path = tmp("su22.json");
    assert_eq!(code(&["su", "build", "--p", "1", "--q", "1", "--dump-catalog", path.to_str().unwrap()]), 0);
    let out = crlie(&["verify", path.to_str().unwrap(), "--checks", "jacobi,radical", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parts: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path.with_extension("parts.json")).unwrap()).unwrap();
    assert_eq!(parts["heis"].as_array().unwrap().len(), 5);
    assert_eq!(parts["h0"].as_array().unwrap().len(), 10);
}

#[test]
fn embed_csv_columns() {
    let path = tmp("heis.csv");
    let out = tmp("report.json");
    let args = ["embed", "heisenberg", "--m", "2", "--eps", "+-", "--delta", "1+i", "--samples", "7", "--csv", path.to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "json"];
    assert_eq!(code(&args), 0);
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.first().map(String::as_str), Some("t"));
    assert_eq!(header.last().map(String::as_str), Some("residual"));
    assert_eq!(header.len(), 1 + 5 + 6 + 1);
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| &r[r.len() - 1] == "0"));
    assert!(std::fs::read_to_string(out).unwrap().contains("\"residual\""));
    for kind in ["su2", "sl2"] {
        let path = tmp(&format!("{kind}.csv"));
        assert_eq!(code(&["embed", kind, "--samples", "5", "--csv", path.to_str().unwrap()]), 0);
        assert_eq!(csv::Reader::from_path(&path).unwrap().records().count(), 5);
    }
}
