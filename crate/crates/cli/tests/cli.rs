use std::process::{Command, Output};

use serde_json::{json, Value};

fn qyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qyl")).args(args).env_remove("QYL_Q").output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_examples() {
    let v = json_of(&qyl(&["check", "--n", "2", "--lambda", "1,0", "--mu", "0,-1"]));
    assert_eq!(v["verdict"], "reducible");
    assert_eq!(v["witness"], json!([-2, -1, 0, 1]));

    let v = json_of(&qyl(&["check", "--n", "2", "--lambda", "1,0", "--mu", "1,0"]));
    assert_eq!(v["verdict"], "irreducible");
    assert!(v.get("witness").is_none());

    let v = json_of(&qyl(&["check", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--b", "8", "--q", "2"]));
    assert_eq!(v["verdict"], "irreducible");
    assert_eq!(v["reason"], "ratio not in q^{2Z}");
}

#[test]
fn check_reduces_general_parameters() {
    // b / b' = q^2 shifts mu by one
    let v = json_of(&qyl(&["check", "--lambda", "1,0", "--mu", "1,0", "--a", "4", "--q", "2", "--debug"]));
    assert_eq!(v["normalized"], json!({"k": 1, "lambda": [1, 0], "mu": [2, 1]}));
    assert_eq!(v["pairwise"], v["verdict"]);
}

#[test]
fn q_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qyl"))
        .args(["check", "--lambda", "1,0", "--mu", "1,0", "--b", "8"])
        .env("QYL_Q", "2")
        .output()
        .unwrap();
    let v = json_of(&out);
    assert_eq!(v["input"]["q"], "2");
    assert_eq!(v["reason"], "ratio not in q^{2Z}");
    let v = json_of(&qyl(&["check", "--lambda", "1,0", "--mu", "1,0", "--a", "9/4"]));
    assert_eq!(v["input"]["q"], "3/2");
    assert_eq!(v["normalized"]["k"], 1);
}

#[test]
fn usage_errors() {
    for args in [
        &["check", "--n", "2", "--lambda", "1,x", "--mu", "0,0"][..],
        &["check", "--n", "2", "--lambda", "0,1", "--mu", "0,0"],
        &["check", "--n", "3", "--lambda", "1,0", "--mu", "0,0"],
        &["check", "--lambda", "1,0"],
        &["check", "--lambda", "1,0", "--mu", "0,0", "--q", "1"],
        &["check", "--lambda", "1,0", "--mu", "0,0", "--eps", "1,2"],
        &["verify", "--suite", "nope", "--lambda", "1,0"],
    ] {
        let out = qyl(args);
        assert!(!out.status.success(), "{args:?} succeeded");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn oracle_both_orders() {
    let v = json_of(&qyl(&["oracle", "--lambda", "1,0", "--mu", "0,-1"]));
    assert_eq!(v["cyclic_from_top"], false);
    assert_eq!(v["singular_dim"], 1);
    assert_eq!(v["irreducible"], false);
    let v = json_of(&qyl(&["oracle", "--lambda", "0,-1", "--mu", "1,0"]));
    assert_eq!(v["cyclic_from_top"], true);
    assert_eq!(v["singular_dim"], 2);
    let v = json_of(&qyl(&["oracle", "--lambda", "1,0", "--mu", "1,0"]));
    assert_eq!(v, json!({"cyclic_from_top": true, "singular_dim": 1, "irreducible": true, "burnside_algebra_dim": 16}));
}

#[test]
fn sweep_small_exhaustive() {
    let out = qyl(&["sweep", "--n", "2", "--lambda-max", "2", "--mu-bound", "2"]);
    let v = json_of(&out);
    assert_eq!(v["summary"]["total"], 3 * 15);
    assert_eq!(v["summary"]["agree"], 3 * 15);
}

#[test]
fn sweep_empty_range() {
    let v = json_of(&qyl(&["sweep", "--n", "2", "--lambda-max", "-1"]));
    assert_eq!(v["cases"], json!([]));
    assert_eq!(v["summary"]["total"], 0);
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--n", "3", "--count", "6", "--width", "2", "--seed", "11"];
    let (a, b) = (qyl(&args), qyl(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["range"]["seed"], 11);
    assert_eq!(v["cases"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "--suite", "relations", "--n", "3", "--lambda", "2,1,0"][..],
        &["verify", "--suite", "minors", "--n", "2", "--lambda", "1,0", "--mu", "1,0"],
        &["verify", "--suite", "rtt", "--lambda", "1,0", "--a", "-2/3", "--h", "5", "--eps", "-1,1"],
        &["verify", "--suite", "gt", "--lambda", "2,0,0"],
    ] {
        let v = json_of(&qyl(args));
        assert_eq!(v["ok"], true, "{args:?}");
        assert!(v["checks"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_theta() {
    let v = json_of(&qyl(&["verify", "--suite", "theta", "--n", "2", "--lambda", "0,-1", "--mu", "1,0", "--debug"]));
    assert_eq!(v["ok"], true);
    let theta = &v["theta"][0];
    assert_eq!(theta["p"], 1);
    assert!(theta["theta"].as_array().unwrap().iter().any(|x| x != "0"));

    // no singular vector of this shape: the suite fails with a nonzero exit
    let out = qyl(&["verify", "--suite", "theta", "--lambda", "1,0", "--mu", "1,0"]);
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], false);
}

#[test]
fn export_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let out = qyl(&["export", "--lambda", "2,1,0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rep"]["dim"], 8);
    assert_eq!(v["rep"]["basis"].as_array().unwrap().len(), 8);
    assert_eq!(v["operators"].as_array().unwrap().len(), 9);
    assert_eq!(v["rep"]["q"], "3/2");
}
