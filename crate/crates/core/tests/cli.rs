//! End-to-end checks of the `lsr` binary.

use std::path::Path;
use std::process::{Command, Output};

fn lsr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsr")).args(args).env_remove("LSR_SEED").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_the_text_format() {
    let out = lsr(&["gen", "--family", "path:3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3 2\n0 1\n1 2\n");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lsr(&["run", "--family", "cycle:5", "--algo", "bogus"]).status.code(), Some(2));
    assert_eq!(lsr(&["gen", "--family", "nope:3"]).status.code(), Some(2));
    assert_eq!(lsr(&["run", "--algo", "sept"]).status.code(), Some(2));
}

#[test]
fn verify_reports_true_and_false() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let values = dir.path().join("v.txt");
    std::fs::write(&graph, "3 2\n0 1\n1 2\n").unwrap();
    std::fs::write(&values, "3\n1\n2\n").unwrap();
    let yes = lsr(&["verify", "--graph", path_str(&graph), "--values", path_str(&values), "--vertex", "1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes).trim(), "true");
    let no = lsr(&["verify", "--graph", path_str(&graph), "--values", path_str(&values), "--vertex", "0"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).trim(), "false");
}

#[test]
fn run_writes_a_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let transcript = dir.path().join("t.json");
    let out = lsr(&["run", "--family", "cycle:31", "--algo", "sept", "--t", "3", "--transcript", path_str(&transcript)]);
    assert!(out.status.success());
    let summary = json(&out);
    assert_eq!(summary["verified"], true);
    assert!(summary["rounds"].as_u64().unwrap() <= 3);

    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&transcript).unwrap()).unwrap();
    let rounds = t["rounds"].as_array().unwrap();
    let summed: usize = rounds.iter().map(|r| r["batch"].as_array().unwrap().len()).sum();
    assert_eq!(t["total"].as_u64().unwrap() as usize, summed);
    assert_eq!(summary["queries"], t["total"]);
    for r in rounds {
        assert_eq!(r["batch"].as_array().unwrap().len(), r["answers"].as_array().unwrap().len());
    }
}

#[test]
fn run_on_a_graph_file_with_values() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let values = dir.path().join("v.txt");
    std::fs::write(&graph, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    std::fs::write(&values, "4\n3\n1\n2\n").unwrap();
    let out = lsr(&["run", "--graph", path_str(&graph), "--values", path_str(&values), "--algo", "cover2", "--s", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["output"], 2);
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.toml");
    std::fs::write(&config, "family = \"cycle\"\nsizes = [31, 63]\nt = [2, 3]\nseeds = 3\nalgo = \"sept\"\n").unwrap();
    let a = lsr(&["sweep", "--config", path_str(&config)]);
    let b = lsr(&["sweep", "--config", path_str(&config), "--jobs", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,t,s,delta,algo,seed,queries,rounds,success,det_upper,rand_lower,verified"
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn empty_sweep_prints_only_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = lsr(&["sweep", "--output", path_str(&csv)]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "family,n,t,s,delta,algo,seed,queries,rounds,success,det_upper,rand_lower,verified\n"
    );
}

#[test]
fn bounds_values() {
    let out = lsr(&["bounds", "--n", "256", "--t", "2", "--delta", "2"]);
    assert!(out.status.success());
    let b = json(&out);
    assert!((b["det_upper"].as_f64().unwrap() - 8.0 * 16.0 * 2f64.sqrt()).abs() < 1e-9);
    assert!((b["rand_lower"].as_f64().unwrap() - 29.875).abs() < 1e-12);
    assert_eq!(b["k_hat"], serde_json::json!([20]));
}

#[test]
fn adversary_evaluates_separator_search() {
    let out = lsr(&["adversary", "--family", "path:15", "--algo", "sept", "--t", "2"]);
    assert!(out.status.success());
    let e = json(&out);
    assert_eq!(e["success_prob"], 1.0);
    assert_eq!(e["partition_violations"], 0);
    assert!(e["expected_queries"].as_f64().unwrap() >= e["lower_bound"].as_f64().unwrap());
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_lsr"))
            .args(["gen", "--family", "random-tree:20"])
            .env("LSR_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
    assert_eq!(run("7"), lsr(&["gen", "--family", "random-tree:20", "--seed", "7"]).stdout);
}
