//! End-to-end tests of the `invseq` binary: output contracts, formats,
//! and exit codes (0 ok, 1 mismatch, 2 usage, 3 resource guard).

use std::process::{Command, Output};

fn invseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_pair_range() {
    let out = invseq(&["count", ">,<=", "--n", "1..9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for want in ["n=1   total=1", "n=5   total=72", "n=9   total=17504"] {
        assert!(text.contains(want), "missing {want:?} in {text}");
    }
}

#[test]
fn count_single_length() {
    let out = invseq(&["count", "<=,>=", "--n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total=3"));
}

#[test]
fn count_triple_and_refinements() {
    let out = invseq(&["count", ">,<=,-", "--n", "4", "--by-dist", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,total,by_dist"));
    assert!(text.contains("4,20,"));
}

#[test]
fn count_json_serializes_counts_as_strings() {
    let out = invseq(&["count", "=,!=", "--n", "1..9", "--format", "json", "--reproducible"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pattern"], ">=,<".replace(">=,<", "=,!="));
    let counts = v["counts"].as_array().unwrap();
    assert_eq!(counts.len(), 9);
    assert_eq!(counts[8]["total"], "46234");
    assert!(v.get("generated_at_unix").is_none());
}

#[test]
fn reproducible_output_is_byte_identical() {
    let a = invseq(&["count", ">,>", "--n", "1..6", "--format", "json", "--reproducible"]);
    let b = invseq(&["count", ">,>", "--n", "1..6", "--format", "json", "--reproducible"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn count_resource_guard_exit_code() {
    let out = invseq(&["count", "=,=", "--n", "13"]);
    assert_eq!(out.status.code(), Some(3));
    let out = invseq(&["count", "<=,<=,<=", "--n", "13"]);
    assert_eq!(out.status.code(), Some(3));
    // unimodality-characterized triples may go further
    let out = invseq(&["count", "!=,<=,-", "--n", "16"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total=2583"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(invseq(&["count", "bogus", "--n", "3"]).status.code(), Some(2));
    assert_eq!(invseq(&["count", "-,<", "--n", "3"]).status.code(), Some(2));
    assert_eq!(invseq(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(invseq(&["series", "nope"]).status.code(), Some(2));
    assert_eq!(invseq(&["nonsense-subcommand"]).status.code(), Some(2));
    assert_eq!(invseq(&["oeis-check", "--id", "A000000"]).status.code(), Some(2));
}

#[test]
fn classify_small_depth_is_coarser_but_consistent() {
    let out = invseq(&["classify", "--level", "strong", "--nmax", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("coarsening"));
}

#[test]
fn classify_json_shape() {
    let out = invseq(&["classify", "--level", "wilf", "--nmax", "5", "--format", "json", "--reproducible"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["level"], "wilf");
    assert_eq!(v["consistent_with_baseline"], true);
    assert!(v["classes"].as_array().unwrap().len() <= 30);
}

#[test]
fn verify_table1_passes() {
    let out = invseq(&["verify", "table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("suite table1: PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_detail() {
    let out = invseq(&["verify", "table2", "--format", "json", "--reproducible"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn series_text_output() {
    let out = invseq(&["series", "ogf_gt_le", "--order", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + z + 2*z^2 + 6*z^3 + 20*z^4 + 72*z^5 + 272*z^6");

    let out = invseq(&["series", "catalan", "--order", "4"]);
    assert_eq!(stdout(&out).trim(), "1 + z + 2*z^2 + 5*z^3 + 14*z^4");

    let out = invseq(&["series", "I_eq_le", "--order", "5", "--t", "1"]);
    assert_eq!(stdout(&out).trim(), "1 + z + 2*z^2 + 3*z^3 + 5*z^4 + 8*z^5");
}

#[test]
fn series_bivariate_output() {
    let out = invseq(&["series", "I_eq_le", "--order", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + t*z + [t + t^2]*z^2 + [2*t^2 + t^3]*z^3");

    let out = invseq(&["series", "I_gt_le", "--order", "4", "--format", "json", "--reproducible"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "bivariate");
    // coefficient of z^4 is 2t + 16t^2 + 2t^3 + ... palindromic with sum 20
    let z4 = v["coefficients"][4].as_array().unwrap();
    let total: i64 = z4.iter().map(|c| c.as_str().unwrap().parse::<i64>().unwrap()).sum();
    assert_eq!(total, 20);

    // --t on a univariate series is a usage error
    assert_eq!(invseq(&["series", "catalan", "--order", "3", "--t", "1"]).status.code(), Some(2));
}

#[test]
fn oeis_check_single_and_all() {
    let out = invseq(&["oeis-check", "--id", "A071356"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("MATCH A071356 — 9 terms"));

    let out = invseq(&["oeis-check", "--id", "A000085"]);
    assert!(out.status.success());

    let out = invseq(&["oeis-check", "--all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("MATCH")).count(), 15);
    assert!(text.contains("A033321"));
}

#[test]
fn map_round_trip_via_cli() {
    let out = invseq(&["map", "theta", "42513", "--format", "json", "--reproducible"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["output"], "01032");

    let out = invseq(&["map", "theta-inverse", "01032"]);
    assert_eq!(stdout(&out).trim(), "42513");

    let out = invseq(&["map", "to-marked-path", "011344421"]);
    assert_eq!(stdout(&out).trim(), "ENEEN*N*ENEEENNN");

    let out = invseq(&["map", "from-marked-path", "ENEEN*N*ENEEENNN"]);
    assert_eq!(stdout(&out).trim(), "011344421");

    let out = invseq(&["map", "to-subset", "012322"]);
    assert_eq!(stdout(&out).trim(), "{2,3}");

    let out = invseq(&["map", "from-subset", "{2,3}", "--n", "6"]);
    assert_eq!(stdout(&out).trim(), "012322");

    let out = invseq(&["map", "to-involution", "00114"]);
    assert_eq!(stdout(&out).trim(), "42513");

    // domain violations are usage errors
    let out = invseq(&["map", "to-involution", "010"]);
    assert_eq!(out.status.code(), Some(2));
}
