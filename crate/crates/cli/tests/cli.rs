use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use tightmaps::{run, Outcome, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn tm(args: &[&str]) -> Outcome {
    run(std::iter::once("tightmaps").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = tm(&full);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["bogus"],
        &["rootsys", "su(3,2)"],
        &["rootsys", "so(3,2)"],
        &["rootsys", "nonsense"],
        &["check", "su(2,3)", "nope:l=1"],
        &["check", "su(2,3)", "su4:l=9,s=9"],
        &["tensor", "3", "5"],
        &["tensor", "1", "1"],
        &["tensor", "9", "2", "--oracle"],
        &["verify-paper", "--sweep", "su=x"],
        &["validate", "su(2,3)", "--roots", "[1,0]"],
    ];
    for args in cases {
        let out = tm(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    for args in [&["--help"][..], &["tensor", "--help"], &["--version"]] {
        let out = tm(args);
        assert_eq!(out.code, EXIT_OK);
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn rootsys_text() {
    let out = tm(&["rootsys", "su(2,3)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stdout.contains("highest root     [1,1,1,1]"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("roots            20"));
}

#[test]
fn check_with_parameters_in_algebra() {
    let v = json(&["check", "sp(2p)", "sp1:p=4,l=2"]);
    assert_eq!(v["certificate"]["verdict"], "Tight");
    assert_eq!(v["certificate"]["ratios"], serde_json::json!([[2, 1]]));
    assert_eq!(v["certificate"]["weighted_sum"], serde_json::json!([4, 1]));
    let v = json(&["check", "sp(8)", "sp1:l=1"]);
    assert_eq!(v["certificate"]["verdict"], "NotTight");
}

#[test]
fn check_root_list() {
    // one noncompact root: su(1,1) in su(2,2) has rank 1 of 2
    let v = json(&["check", "su(2,2)", "[1,0,0]"]);
    assert_eq!(v["certificate"]["verdict"], "NotTight");
    // α_1 is the middle node; α_1 and γ are strongly orthogonal
    let v = json(&["check", "su(2,2)", "[1,0,0];[1,1,1]"]);
    assert_eq!(v["certificate"]["verdict"], "Tight");
}

#[test]
fn validate_reports_violation() {
    let v = json(&["validate", "su(2,3)", "--roots", "[1,0,0,0];[1,1,0,0]"]);
    let text = v.to_string();
    assert!(text.contains("(i)"), "{text}");
}

#[test]
fn tensor_with_oracle() {
    let v = json(&["tensor", "3", "2", "--oracle"]);
    let targets = v["targets"].as_array().unwrap();
    assert_eq!(targets[0]["target"], "su(3,3)");
    assert_eq!(targets[0]["pairing"], 7);
    assert_eq!(targets[1]["target"], "so*(6)");
    assert_eq!(targets[1]["verdict"]["status"], "Tight");
    assert!(!v["oracle"].is_null());
}

#[test]
fn maximal_lists_all_entries() {
    let out = tm(&["maximal", "e7"]);
    assert_eq!(out.code, EXIT_OK);
    for id in ["e1", "e2", "e3", "e4", "e5", "e6", "e7"] {
        assert!(out.stdout.lines().any(|l| l.starts_with(id)), "{id}");
    }
}

/// Parsing and re-rendering any JSON output gives the same bytes.
#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["rootsys", "e6"],
        &["rootsys", "so(7,2)"],
        &["maximal", "so*(10)"],
        &["check", "so(9,2)", "sou4"],
        &["validate", "sp(6)", "--roots", "[0,0,1];[1,1,0]"],
        &["tensor", "7", "4", "--oracle"],
    ];
    for args in cases {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let out = tm(&full);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, out.stdout, "{args:?}");
    }
}

#[test]
fn verify_default_sweep() {
    let out = tm(&["--json", "verify-paper"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["catalog"]["unresolved"], 0);
}

#[test]
fn parallel_output_is_identical() {
    // too small for every correction to be needed, so this exits 1
    let sweep = [
        "--json",
        "verify-paper",
        "--sweep",
        "su=6,sp=4,sostar=6,so2=7",
    ];
    let serial = tm(&sweep);
    let mut args = sweep.to_vec();
    args.push("--parallel");
    let parallel = tm(&args);
    assert_eq!(serial.code, EXIT_MISMATCH);
    assert_eq!(serial, parallel);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tightmaps");
    let ok = Command::new(bin)
        .args(["tensor", "4", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        tm(&["tensor", "4", "2"]).stdout
    );
    let bad = Command::new(bin)
        .args(["check", "e8", "x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(bad.stderr).unwrap().starts_with("error:"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn tensor_su_verdict(p in 2usize..=12, m_seed in 0usize..12) {
        let m = 1 + m_seed % p;
        let v = json(&["tensor", &p.to_string(), &m.to_string()]);
        let su = &v["targets"][0];
        let tight = m == 1 || m == p;
        prop_assert_eq!(su["verdict"]["status"].as_str(), Some(if tight { "Tight" } else { "NotTight" }));
        prop_assert_eq!(su["pairing"].as_i64() == Some(0), tight);
    }
}
