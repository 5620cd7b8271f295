//! End-to-end checks of the binary: JSON shape, exit codes, seeding.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkinema"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkinema"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn demo_example2_passes_and_reports_checks() {
    let out = run(&["demo", "example2"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["command"], "demo example2");
    assert_eq!(json["pass"], true);
    let checks = json["checks"].as_array().unwrap();
    assert!(checks.len() >= 5);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn demo_classical_passes() {
    let out = run(&["demo", "classical"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["pass"], true);
    assert_eq!(
        json["point_map"]["table"],
        serde_json::json!([0, 1, 4, 4, 1])
    );
}

#[test]
fn verify_nosignaling_reports_qm_verdict() {
    let out = run(&[
        "verify",
        "nosignaling",
        "--dims",
        "2,2",
        "--trials",
        "5",
        "--seed",
        "11",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["verdict"]["theory"], "QM");
    assert_eq!(json["verdict"]["signaling"], false);
    assert!(json["verdict"]["channel_gap"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn certify_affine_identity_is_expected_verdict() {
    let out = run(&[
        "certify", "affine", "--map", "identity", "--dim", "3", "--trials", "20", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["report"]["verdict"], "certified_affine");
    assert_eq!(json["expected_verdict"], "certified_affine");
}

#[test]
fn certify_affine_purify_finds_witness() {
    let out = run(&[
        "certify", "affine", "--map", "purify", "--dim", "2", "--trials", "50", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["report"]["verdict"], "witness_found");
    assert!(json["report"]["witness"]["deviation"].as_f64().unwrap() > 1e-8);
}

#[test]
fn unexpected_verdict_exits_2() {
    // a threshold above the trace-distance range hides every witness, so
    // purify comes back certified, contradicting the expected verdict
    let out = run(&[
        "certify",
        "affine",
        "--map",
        "purify",
        "--dim",
        "2",
        "--trials",
        "3",
        "--seed",
        "5",
        "--threshold",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let json = stdout_json(&out);
    assert_eq!(json["pass"], false);
}

#[test]
fn simulate_eqm_signaling_reports_gap() {
    let out = run(&["simulate", "eqm-signaling", "--shots", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["verdict"]["theory"], "EQM");
    assert_eq!(json["verdict"]["signaling"], true);
    let gap = json["verdict"]["channel_gap"].as_f64().unwrap();
    assert!((gap - 0.25).abs() <= 1e-10);
    assert_eq!(json["steered_ensembles_equivalent_in_qm"], true);
    assert_eq!(
        json["functional_values"]["alice_sends_0_z_basis"]
            .as_f64()
            .unwrap(),
        0.5
    );
}

#[test]
fn seed_falls_back_to_environment() {
    let a = run_with_env(
        &["simulate", "eqm-signaling", "--shots", "2"],
        "QKINEMA_SEED",
        "123",
    );
    let b = run(&["simulate", "eqm-signaling", "--shots", "2", "--seed", "123"]);
    assert_eq!(stdout_json(&a), stdout_json(&b));

    let bad = run_with_env(
        &["simulate", "eqm-signaling", "--shots", "2"],
        "QKINEMA_SEED",
        "not-a-number",
    );
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        run(&["certify", "affine", "--map", "bogus", "--dim", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "nosignaling", "--dims", "2x2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "certify",
            "affine",
            "--map",
            "depolarizing:1.5",
            "--dim",
            "2"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn reports_are_deterministic_for_a_fixed_seed() {
    let a = run(&[
        "verify",
        "nosignaling",
        "--dims",
        "3,2",
        "--trials",
        "3",
        "--seed",
        "9",
    ]);
    let b = run(&[
        "verify",
        "nosignaling",
        "--dims",
        "3,2",
        "--trials",
        "3",
        "--seed",
        "9",
    ]);
    assert_eq!(stdout_json(&a), stdout_json(&b));
}
