use std::process::{Command, Output};

use serde_json::Value;

fn operadlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operadlab"))
        .args(args)
        .env_remove("OPERADLAB_BUDGET_MB")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn details(report: &Value) -> Vec<String> {
    report["checks"][0]["details"].as_array().unwrap().iter().map(|d| d.as_str().unwrap().to_string()).collect()
}

#[test]
fn enumerate_counts() {
    for (variant, n, k, count) in [("K", "1", "3", 6), ("K", "2", "3", 60), ("Khat", "1", "2", 3), ("KB", "2", "2", 4)] {
        let out = operadlab(&["enumerate", "--variant", variant, "--n", n, "--k", k]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["count"], count);
        assert_eq!(v["elements"].as_array().unwrap().len(), count as usize);
    }
}

#[test]
fn enumerate_text_and_dot() {
    let out = operadlab(&["enumerate", "--n", "1", "--k", "2", "--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("count: 2\n"));
    let out = operadlab(&["enumerate", "--n", "1", "--k", "2", "--format", "dot"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("digraph").count(), 2);
}

#[test]
fn verify_examples() {
    let out = operadlab(&["verify", "--check", "phi", "--n", "2", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(details(&json(&out)).iter().any(|d| d == "K_2(3) round trips: 60/60"));

    let out = operadlab(&["verify", "--check", "prop-a2", "--trials", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["checks"][0]["passed"].as_u64(), v["checks"][0]["total"].as_u64()), (Some(100), Some(100)));
}

#[test]
fn verify_default_bounds_pass_and_are_deterministic() {
    let a = operadlab(&["verify", "--seed", "3", "--trials", "100"]);
    let b = operadlab(&["verify", "--seed", "3", "--trials", "100"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 14);
}

#[test]
fn homology_examples() {
    for (n, k, betti) in [("2", "2", vec![1, 1]), ("3", "2", vec![1, 0, 1]), ("2", "3", vec![1, 3, 2])] {
        let out = operadlab(&["homology", "--variant", "K", "--n", n, "--k", k]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["betti"], serde_json::json!(betti));
        assert_eq!(v["matches_configuration_space"], true);
    }
}

#[test]
fn counterexample_report() {
    let out = operadlab(&["counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violation_exhibited"], true);
    assert_eq!(v["pairwise_disjoint"], true);
    assert_eq!(v["gamma_in_k"], true);
    assert_eq!(v["gamma_in_berger"], false);
    assert_eq!(v["gamma_polychrome_cycle"], serde_json::json!([1, 3, 2]));
    assert!(v["berger_minimal_cells"].as_array().unwrap().len() >= 2);
}

#[test]
fn acyclicity_examples() {
    let out = operadlab(&["acyclicity", "--n", "2", "--k", "3", "--lambda", "blank"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["checks"][0]["passed"].as_u64(), v["checks"][0]["total"].as_u64()), (Some(60), Some(60)));

    let out = operadlab(&["acyclicity", "--n", "1", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(operadlab(&["enumerate", "--variant", "Q"]).status.code(), Some(2));
    assert_eq!(operadlab(&["verify", "--check", "nonsense"]).status.code(), Some(2));
    assert_eq!(operadlab(&["enumerate", "-n", "2"]).status.code(), Some(2));
    assert_eq!(operadlab(&["enumerate", "--n", "0"]).status.code(), Some(2));
    assert_eq!(operadlab(&["homology", "--format", "dot"]).status.code(), Some(2));
    let out = operadlab(&["enumerate", "--n", "2", "--k", "4", "--budget-elements", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn budget_raise_is_clamped_with_warning() {
    let out = operadlab(&["enumerate", "--n", "1", "--k", "2", "--budget-elements", "999999999999"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn memory_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_operadlab"))
        .args(["enumerate", "--n", "2", "--k", "3"])
        .env("OPERADLAB_BUDGET_MB", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("OPERADLAB_BUDGET_MB"));
}

#[test]
fn config_file_and_out() {
    let dir = std::env::temp_dir().join(format!("operadlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.json");
    let report = dir.join("out.json");
    std::fs::write(&cfg, r#"{"variant": "Khat", "n": 1, "k": 3}"#).unwrap();
    let out = operadlab(&["enumerate", "--config", cfg.to_str().unwrap(), "--k", "2", "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!((v["variant"].as_str(), v["count"].as_u64()), (Some("Khat"), Some(3)));
    std::fs::remove_dir_all(&dir).ok();
}
