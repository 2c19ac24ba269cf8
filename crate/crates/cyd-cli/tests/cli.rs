//! End-to-end checks of the `cyd` binary: output shapes, determinism and
//! the exit-code contract.

use std::process::{Command, Output};

fn cyd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyd")).args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout is one JSON document")
}

#[test]
fn eval_rho_reports_value_and_bound() {
    let out = cyd(&["eval", "rho", "--x", "1", "--y", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - 2.2795853023360673).abs() < 1e-12);
    assert!(v["tail_bound"].as_f64().unwrap() > 0.0);
    assert!(v["terms"].as_u64().unwrap() > 4);
}

#[test]
fn eval_examples_match_worked_values() {
    let v = json(&cyd(&["eval", "voldn", "--n", "3", "--x", "2", "--y", "3"]));
    assert_eq!(v["value"].as_f64().unwrap(), 9.0);

    let v = json(&cyd(&["eval", "qcard", "--m", "2", "--n", "2"]));
    let coeffs: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["0", "0", "0", "1", "1"]);

    let v = json(&cyd(&["eval", "meanarea", "--n", "10", "--x", "1", "--y", "1"]));
    assert_eq!(v["value"].as_f64().unwrap(), 0.55);

    let v = json(&cyd(&["eval", "zcard", "--m", "2", "--n", "2", "--z", "1"]));
    let expect = (-3.0f64).exp() + (-4.0f64).exp();
    assert!((v["value"].as_f64().unwrap() - expect).abs() < 1e-12);
}

#[test]
fn identical_flags_give_byte_identical_output() {
    let a = cyd(&["verify", "poset", "--seed", "9", "--trials", "60"]);
    let b = cyd(&["verify", "poset", "--seed", "9", "--trials", "60"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = cyd(&["sample", "volz", "--n", "2", "--x", "1", "--y", "1", "--z", "1", "--samples", "20000", "--seed", "7", "--streams", "3"]);
    let b = cyd(&["sample", "volz", "--n", "2", "--x", "1", "--y", "1", "--z", "1", "--samples", "20000", "--seed", "7", "--streams", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_output_is_csv_with_exact_rationals() {
    let out = cyd(&["table", "dnl", "--nmax", "4", "--lmax", "4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,l=0,l=1,l=2,l=3,l=4");
    let row2: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
    assert_eq!(row2[0], "2");
    assert_eq!(row2[2], "1/2"); // d_{2,1}

    let out = cyd(&["table", "tnum", "--k", "2", "--nmax", "6"]);
    assert!(stdout_str(&out).lines().any(|l| l == "2,4,11"));

    let out = cyd(&["table", "ycoeffs", "--m", "2", "--n", "2"]);
    assert_eq!(stdout_str(&out), "a,count\n3,1\n4,1\n");

    // JSON rendering of the same table on request
    let out = cyd(&["table", "ycoeffs", "--m", "2", "--n", "2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v[0]["a"], "3");
    assert_eq!(v[1]["count"], "1");
}

#[test]
fn eval_format_csv_flattens_fields() {
    let out = cyd(&["eval", "voldn", "--n", "1", "--x", "1", "--y", "1", "--format", "csv"]);
    let text = stdout_str(&out);
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("value,1"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = cyd(&["verify", "t2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["failed"].as_u64().unwrap(), 0);
    assert!(v["checks"].as_u64().unwrap() >= 5);
    assert!(v["details"].as_array().unwrap().iter().all(|d| d.as_str().unwrap().starts_with("ok")));

    // randomized suites demand a seed
    let out = cyd(&["verify", "monoid"]);
    assert_eq!(out.status.code(), Some(2));

    let out = cyd(&["verify", "nonsense", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_reports_reference_and_se_ratio() {
    let out = cyd(&["sample", "meanarea", "--n", "10", "--x", "1", "--y", "1", "--samples", "50000", "--seed", "7"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["reference"].as_f64().unwrap(), 0.55);
    assert!(v["se_ratio"].as_f64().unwrap() < 5.0);
    assert_eq!(v["estimate"]["samples"].as_u64().unwrap(), 50000);

    // the single diagram below the threshold: mean exactly zero
    let out = cyd(&["sample", "vhat", "--n", "1", "--x", "1", "--y", "1", "--w", "0.5", "--samples", "1000", "--seed", "1"]);
    let v = json(&out);
    assert_eq!(v["estimate"]["mean"].as_f64().unwrap(), 0.0);
    assert_eq!(v["se_ratio"].as_f64().unwrap(), 0.0);

    let out = cyd(&["sample", "integral", "--a", "1,1", "--x", "1", "--samples", "50000", "--seed", "3", "--streams", "2"]);
    let v = json(&out);
    assert_eq!(v["reference"].as_f64().unwrap(), 0.125);
    assert!(v["se_ratio"].as_f64().unwrap() < 5.0);
}

#[test]
fn exit_code_contract() {
    assert_eq!(cyd(&["eval", "rho", "--x", "1", "--y", "1"]).status.code(), Some(0));
    // usage: too few samples, missing seed
    assert_eq!(
        cyd(&["sample", "volz", "--n", "1", "--x", "1", "--y", "1", "--z", "0", "--samples", "10", "--seed", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cyd(&["sample", "volz", "--n", "1", "--x", "1", "--y", "1", "--z", "0", "--samples", "2000"]).status.code(),
        Some(2)
    );
    // domain
    assert_eq!(cyd(&["eval", "rho", "--x", "-1", "--y", "1"]).status.code(), Some(3));
    // resource
    assert_eq!(cyd(&["table", "dnl", "--nmax", "100", "--lmax", "4"]).status.code(), Some(4));
    // numeric
    assert_eq!(
        cyd(&["eval", "volzdn", "--n", "2", "--x", "100", "--y", "100", "--z", "1"]).status.code(),
        Some(5)
    );
    // diagnostics go to stderr, payload stays parseable JSON
    let out = cyd(&["eval", "rho", "--x", "-1", "--y", "1"]);
    assert!(!out.stderr.is_empty());
    let v = json(&out);
    assert_eq!(v["status"], "domain_error");
}
