use std::process::{Command, Output};

use macdonald_cli::suite::{run_identity, verify_all, Config, VerificationReport, VerifyParams};
use macdonald_core::identities::Guard;
use macdonald_core::pieri::Perturbation;
use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdonald")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn verify_single_pair() {
    let o = cli(&["verify", "thm3", "--n", "2", "--l1", "3", "--l2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["identity"], "thm3");
    assert_eq!(v["ok"], true);
    assert_eq!(v["mode"], "exact");
    assert!(v["elapsed_ms"].is_u64());
    let r = VerificationReport::from_json(&v).unwrap();
    assert_eq!(VerificationReport::from_json(&r.to_json()), Some(r));
}

#[test]
fn compute_q_one_row() {
    let o = cli(&["compute-q", "--n", "2", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["lambda"], serde_json::json!([1, 0]));
    let value = macdonald_coeff::json::scalar_from_json(&coeffs[0]["value"]).unwrap();
    use macdonald_coeff::ExactScalar;
    assert_eq!(value, &ExactScalar::one_minus(1, 0, 2) / &ExactScalar::one_minus(1, 2, 0));
}

#[test]
fn pieri_text_table() {
    let o = cli(&["pieri", "--n", "2", "--l1", "1", "--l2", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("0\t0\t1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["compute-p", "--n", "2", "--lambda", "1,2"],
        vec!["compute-p", "--n", "1", "--lambda", "2,1"],
        vec!["verify", "nope"],
        vec!["pieri", "--n", "2", "--l1", "1", "--l2", "2"],
        vec!["b2", "compute", "--lambda", "1,1/2"],
        vec!["compute-q"],
    ] {
        let o = cli(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn guard_exits_three_and_probabilistic_mode_runs() {
    let o = cli(&["verify", "thm6", "--n", "3", "--r", "3", "--guard", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = cli(&["verify", "thm6", "--n", "3", "--r", "3", "--mode", "probabilistic", "--seed", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["mode"], "probabilistic");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "cor6", "--n", "2", "--no-timing"],
        vec!["pieri-quasi", "--n", "2", "--lambda", "2,1"],
        vec!["onerow-series", "--n", "2", "--max", "3", "--format", "text"],
    ] {
        let (a, b) = (cli(&args), cli(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn failed_verification_exits_one() {
    let o = cli(&["verify", "thm3", "--n", "2", "--l1", "1", "--l2", "1", "--perturb", "1,0"]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["ok"], false);
    assert!(v["detail"].as_str().unwrap().contains("coefficient of m"));
}

#[test]
fn b2_commands() {
    let o = cli(&["b2", "compute", "--lambda", "3/2,1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["doubled"], serde_json::json!([3, 1]));
    let o = cli(&["b2", "verify-thm7", "--l1", "3", "--l2", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("thm7 ok"));
}

#[test]
fn minuscule_table_lists_targets() {
    let o = cli(&["pieri-minuscule", "--n", "2", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let terms = stdout_json(&o)["terms"].as_array().unwrap().clone();
    let targets: Vec<Value> = terms.iter().map(|t| t["target"].clone()).collect();
    assert_eq!(targets.len(), 4);
    assert!(targets.contains(&serde_json::json!([3, 1])));
    assert!(targets.contains(&serde_json::json!([2, 0])));
}

#[test]
fn reduced_guard_shrinks_default_boxes() {
    let cfg = Config { guard: Guard { max_size: 3 }, ..Config::default() };
    let r = run_identity("thm6", &VerifyParams::default(), &cfg).unwrap();
    assert!(r.ok, "{r:?}");
    assert!(!r.params["skipped"].as_array().unwrap().is_empty());
    let r = run_identity("cor7", &VerifyParams::default(), &cfg).unwrap();
    assert!(r.ok && r.params["n"] == serde_json::json!([1]));
}

#[test]
fn perturbation_hook_names_the_monomial() {
    let cfg = Config { perturb: Some(Perturbation { i: 0, j: 1 }), ..Config::default() };
    let p = VerifyParams { n: Some(2), l1: Some(2), l2: Some(1), ..Default::default() };
    let r = run_identity("thm3", &p, &cfg).unwrap();
    assert!(!r.ok);
    assert!(r.detail.unwrap().contains("coefficient of m("));
}

#[test]
fn verify_all_default() {
    let reports: Vec<VerificationReport> = verify_all(&Config::default()).into_iter().map(|r| r.unwrap()).collect();
    assert!(reports.iter().all(|r| r.ok));
}
