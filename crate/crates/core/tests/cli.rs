// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use freeaction::report::{Report, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_freeaction"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

// keeps the CLI runs short
const FAST: &[&str] = &["--k-max", "3", "--primes", "5", "--samples", "500"];

#[test]
fn gluing_suite_exits_zero_with_json() {
    let out = run(&[&["verify", "gluing"], FAST].concat());
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.status, Status::Certified);
    assert!(r.checks.iter().all(|c| c.timing_ns.is_none()));
}

#[test]
fn bad_eps_is_a_usage_error() {
    let out = run(&["verify", "all", "--eps", "1/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_suite_and_verb_are_usage_errors() {
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn report_json_round_trips_and_markdown_renders() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let md = dir.path().join("r.md");
    let a = [
        &[
            "report",
            "--suite",
            "geometry",
            "--format",
            "json",
            "--out",
            json.to_str().unwrap(),
        ],
        FAST,
    ]
    .concat();
    assert_eq!(run(&a).status.code(), Some(0));
    let text = std::fs::read_to_string(&json).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.to_json().unwrap(), text);
    assert!(r.check("geometry/disjointness").is_some());

    let b = [
        &[
            "report",
            "--suite",
            "geometry",
            "--format",
            "markdown",
            "--out",
            md.to_str().unwrap(),
        ],
        FAST,
    ]
    .concat();
    assert_eq!(run(&b).status.code(), Some(0));
    let m = std::fs::read_to_string(&md).unwrap();
    assert!(m.starts_with("# Report: geometry"));
    assert!(m.contains("`geometry/disjointness`"));
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, "eps = \"1/4\"\nk_max = 3\nprimes = [5]\n").unwrap();
    // file alone is rejected
    let out = run(&["--config", cfg.to_str().unwrap(), "verify", "gluing"]);
    assert_eq!(out.status.code(), Some(2));
    // flag overrides the file
    let out = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "--eps",
        "1/16",
        "verify",
        "gluing",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.config["eps"], "1/16");
}

#[test]
fn record_timing_adds_timings() {
    let out = run(&[&["verify", "negative-controls", "--record-timing"], FAST].concat());
    assert_eq!(out.status.code(), Some(0));
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(r.checks.iter().all(|c| c.timing_ns.is_some()));
}

#[test]
fn group_info_reports_order_and_rank() {
    let out = run(&["group", "info", "P", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 81);
    assert_eq!(v["rank"], 2);
    let out = run(&["group", "info", "E", "5"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 75);
    assert_eq!(run(&["group", "info", "P", "2"]).status.code(), Some(2));
    assert_eq!(run(&["group", "info", "Q", "3"]).status.code(), Some(2));
}

#[test]
fn rep_check_and_fixedpoints() {
    let out = run(&["rep", "check", "rho_b4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["det"]["checked"], 81);
    assert_eq!(run(&["rep", "check", "rho_x"]).status.code(), Some(2));

    let out = run(&["fixedpoints", "--space", "X0", "--group", "P3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["offenders"].as_array().unwrap().len(), 12);
    assert_eq!(
        run(&["fixedpoints", "--space", "X9", "--group", "P3"])
            .status
            .code(),
        Some(2)
    );
}
