use std::process::{Command, Output};

fn shortloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shortloc"))
        .args(args)
        .env_remove("SHORTLOC_P")
        .env_remove("SHORTLOC_N")
        .env_remove("SHORTLOC_CAP")
        .output()
        .expect("run shortloc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn resolve_fibonacci_row() {
    let o = shortloc(&["resolve", "--preset", "alg_8_2_A", "--module", "S", "--n", "5", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,t_n,top,rad,w"));
    let t: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(t.join(" "), "1 3 8 21 55 144");
}

#[test]
fn spectral_report() {
    let o = shortloc(&["spectral", "--e", "3", "--a", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["spectral"]["rho"], 2.0);
    assert_eq!(v["spectral"]["eigenvalues"]["large"], 2);
    assert_eq!(v["spectral"]["eigenvalues"]["small"], 1);
    assert_eq!(v["gamma_pair"]["small"], 1);
    assert_eq!(v["gamma_pair"]["large"], 2);
}

#[test]
fn spectral_csv_subcommands() {
    let o = shortloc(&["spectral", "pairs", "--e", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() > 1);
    let o = shortloc(&["spectral", "sweep", "--e", "4", "--a-max", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn koszul_failure_at_one() {
    let o = shortloc(&["koszul", "--preset", "rem_4_2", "--module", "nonkoszul", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["koszul_up_to_bound"], false);
    assert_eq!(v["first_failure"], 1);
}

#[test]
fn positional_targets_and_json_determinism() {
    let a = shortloc(&["gamma", "lambda_3_2", "M", "--n", "4", "--format", "json"]);
    let b = shortloc(&["gamma", "lambda_3_2", "M", "--n", "4", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn preset_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = shortloc(&["preset", "export", "alg_8_2_A", "--out", d]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let alg = dir.path().join("alg_8_2_A.algebra.json");
    let module = dir.path().join("alg_8_2_A.X.module.json");
    let o = shortloc(&["algebra", "validate", alg.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hilbert_type"], serde_json::json!([3, 2]));

    let from_file = shortloc(&["resolve", "--module", module.to_str().unwrap(), "--n", "4", "--format", "csv"]);
    let from_preset = shortloc(&["resolve", "alg_8_2_A", "X", "--n", "4", "--format", "csv"]);
    assert!(from_file.status.success(), "{}", String::from_utf8_lossy(&from_file.stderr));
    assert_eq!(from_file.stdout, from_preset.stdout);

    let o = shortloc(&["resolve", alg.to_str().unwrap(), "S", "--p", "3", "--n", "5", "--format", "csv"]);
    assert!(o.status.success());
    let t: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(t.join(" "), "1 3 8 21 55 144");
}

#[test]
fn conca_commands() {
    let o = shortloc(&["conca", "check", "lambda_2_1", "y1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["left_conca"], true);
    let o = shortloc(&["conca", "check", "ex_6_3", "x", "--opposite", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["left_conca"], true);
    let o = shortloc(&["conca", "search", "ex_6_3", "--p", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["witness"].is_null());
    assert_eq!(v["exhaustive_complete"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(shortloc(&["resolve", "no_such_preset"]).status.code(), Some(2));
    assert_eq!(shortloc(&["resolve", "alg_8_2_A", "W"]).status.code(), Some(2));
    assert_eq!(shortloc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(shortloc(&["resolve", "alg_8_2_A", "--cap", "0"]).status.code(), Some(2));
    assert_eq!(shortloc(&["aligned", "alg_8_2_A", "--format", "csv"]).status.code(), Some(2));

    let o = shortloc(&["conca", "search", "ex_6_3", "--budget", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "budget_exceeded");
    assert!(err["message"].is_string());
}

#[test]
fn env_overrides_defaults() {
    let o = Command::new(env!("CARGO_BIN_EXE_shortloc"))
        .args(["resolve", "alg_8_2_Aprime", "--format", "csv"])
        .env("SHORTLOC_N", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).lines().count(), 1 + 4);
}

#[test]
fn verify_command_reports_every_criterion() {
    let o = shortloc(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for id in 1..=10 {
        assert!(out.contains(&format!("criterion {id:>2} [")), "{out}");
    }
    assert!(out.contains("0 unexpected"));
}
