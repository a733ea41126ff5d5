//! The binary end to end: exit codes, reports, replay and sweeps.

use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn zfgraph(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zfgraph")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, out) = zfgraph(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn build_counts() {
    let (code, r) = report(&["build", "johnson", "-n", "5", "-k", "2", "-S", "0"]);
    assert_eq!(code, 0);
    assert_eq!((r["values"]["vertices"].as_u64(), r["values"]["edges"].as_u64()), (Some(10), Some(15)));
    let (_, r) = report(&["build", "grassmann", "-n", "4", "-k", "2", "-q", "2", "-S", "1"]);
    assert_eq!(r["values"]["vertices"], 35);
    let (_, r) = report(&["build", "hamming", "-n", "3", "-q", "2"]);
    assert_eq!((r["values"]["vertices"].as_u64(), r["values"]["edges"].as_u64()), (Some(8), Some(12)));
}

#[test]
fn saved_graphs_load_back() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["g.zfg", "g.edges"] {
        let path = dir.path().join(name);
        let p = path.to_str().unwrap();
        assert_eq!(zfgraph(&["build", "hamming", "-n", "2", "-q", "3", "--out", p]).0, 0);
        let (code, r) = report(&["zf", "--graph", p, "--mode", "exact"]);
        assert_eq!(code, 0);
        assert_eq!(r["values"]["z"], 5);
        assert_eq!(r["exact_tags"]["z"], "exhaustive_search");
    }
}

#[test]
fn zf_modes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = dir.path().join("c4.txt");
    std::fs::write(&c4, "# vertices 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let (code, r) = report(&["zf", "--graph", c4.to_str().unwrap(), "--mode", "grundy", "--variant", "z"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["z_grundy"], 2);

    // white set given by labels: the 7 planes left out of the 28-vertex leader set
    let white = dir.path().join("white.json");
    let planes = [
        "[[0,0,1,0],[0,0,0,1]]",
        "[[0,1,0,0],[0,0,0,1]]",
        "[[0,1,0,0],[0,0,1,0]]",
        "[[1,0,0,0],[0,0,0,1]]",
        "[[1,0,0,0],[0,0,1,0]]",
        "[[1,0,0,0],[0,1,0,0]]",
        "[[1,1,0,0],[0,0,1,1]]",
    ];
    std::fs::write(&white, serde_json::to_string(&planes).unwrap()).unwrap();
    let w = white.to_str().unwrap();
    let base = ["zf", "grassmann", "-n", "4", "-k", "2", "-q", "2", "-S", "1", "--set", w];
    let (code, r) = report(&[&base[..], &["--mode", "verify", "--complement"]].concat());
    assert_eq!(code, 0);
    assert_eq!(r["verdicts"]["accepted"], true);
    assert_eq!(r["values"]["leader_size"], 28);
    // the white planes alone do not force
    let (code, r) = report(&[&base[..], &["--mode", "verify"]].concat());
    assert_eq!(code, 1);
    assert_eq!(r["verdicts"]["accepted"], false);
    let (_, r) = report(&[&base[..], &["--mode", "closure", "--complement"]].concat());
    assert_eq!(r["values"]["closure_size"], 35);
}

#[test]
fn capped_search_is_partial() {
    let out = Command::new(env!("CARGO_BIN_EXE_zfgraph"))
        .args(["zf", "hamming", "-n", "2", "-q", "4"])
        .env("ZFGRAPH_SEARCH_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["values"]["partial"], true);
    assert_eq!(r["values"]["upper"], 16);
}

#[test]
fn error_exit_codes() {
    assert_eq!(zfgraph(&["construct", "kneser", "-n", "4", "-k", "2", "-t", "0"]).0, 2);
    assert_eq!(zfgraph(&["build", "johnson", "-n", "3", "-k", "2", "-S", "5"]).0, 1);
    assert_eq!(zfgraph(&["build", "grassmann", "-n", "30", "-k", "15", "-q", "2"]).0, 3);
    assert_eq!(zfgraph(&["zf", "--graph", "/nonexistent/graph"]).0, 1);
}

#[test]
fn constructions_verify() {
    let (code, r) = report(&["construct", "kneser", "-n", "7", "-k", "2", "-t", "0", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["leader_size"], 15);
    let (code, r) = report(&["construct", "hamming", "-n", "3", "-q", "4", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["leader_size"], 36);
    assert_eq!(r["verdicts"]["core_free_trace"], true);
    let (code, r) = report(&["construct", "johnson", "-n", "4", "-k", "2", "-S", "1", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["leader_size"], 4);
    assert_eq!(r["values"]["claims"]["minimum_known"], true);
}

#[test]
fn nullity_values() {
    for (n, q, nu) in [("2", "2", 2), ("1", "5", 4), ("3", "3", 14)] {
        let (code, r) = report(&["nullity", "-n", n, "-q", q]);
        assert_eq!(code, 0);
        assert_eq!(r["values"]["nullity"], nu);
    }
}

#[test]
fn reports_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    let (code, _) = zfgraph(&["construct", "hamming", "-n", "2", "-q", "4", "--verify", "--report", p]);
    assert_eq!(code, 0);
    let (code, r) = report(&["--replay", p]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["certificates"], 2);

    // tamper with the leader set
    let mut saved: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    saved["certificates"][0]["vertices"] = serde_json::json!([0, 1]);
    std::fs::write(&path, saved.to_string()).unwrap();
    let (code, r) = report(&["--replay", p]);
    assert_eq!(code, 1);
    assert_eq!(r["values"]["failed"], serde_json::json!([0]));
}

#[test]
fn metrics_formula_and_walk() {
    let (code, r) = report(&["metrics", "grassmann", "-n", "6", "-k", "3", "-q", "2", "-S", "2", "--check-formula", "--walk", "0,1000"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["diameter"], 3);
    assert_eq!(r["verdicts"]["walk_is_shortest"], true);
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("two.txt");
    std::fs::write(&g, "# vertices 2\n").unwrap();
    let (code, r) = report(&["metrics", "--graph", g.to_str().unwrap(), "--diameter"]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["diameter"], "infinity");
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn sweep_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "s.toml",
        r#"
[[run]]
command = "construct"
args = ["--verify"]
[run.grid]
family = "kneser"
k = 2
n = [4, 7]
t = 0

[[run]]
command = "nullity"
[run.grid]
n = [1, 2]
q = 3
"#,
    );
    let (code, out) = zfgraph(&["sweep", &cfg, "--format", "json"]);
    assert_eq!(code, 1);
    let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
    let codes: Vec<i64> = rows.iter().map(|r| r["exit_code"].as_i64().unwrap()).collect();
    assert_eq!(codes, [2, 0, 0, 0]);
    assert!(rows[0]["error"].as_str().unwrap().contains("2k + 1"));
    assert_eq!(rows[3]["instance"], "nullity -n 2 -q 3");

    let (_, csv) = zfgraph(&["sweep", &cfg]);
    assert!(csv.starts_with("row,instance,exit_code,passed,values,error\n"));
    assert_eq!(csv.lines().count(), 5);
    assert_eq!(zfgraph(&["sweep", &cfg]).1, csv);
}
