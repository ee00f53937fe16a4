//! End-to-end checks of the binary: exit codes, golden outputs, and
//! determinism of the `key=value` reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lmds-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn missing_code_file_is_an_input_error() {
    let out = lmds(&["code", "analyze", "--code", "/definitely/not/here.code"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minweight_bounds_print_the_worked_values() {
    let out = lmds(&["--no-ts", "bounds", "minweight", "--n", "9", "--k", "5", "--q", "3", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("boundA=33"), "{text}");
    assert!(text.contains("boundAdual=28"), "{text}");
    assert!(text.contains("genericA=168"), "{text}");
    assert!(text.contains("genericAdual=252"), "{text}");
}

#[test]
fn family_verification_reports_the_known_member() {
    let out = lmds(&["--no-ts", "ck", "verify", "--field", "2^3", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for needle in ["verdict=1-MDS", "lambda1=2", "lambda2=1", "design=2-(7,3,1)", "agree=true"] {
        assert!(text.contains(needle), "missing {needle} in {text}");
    }
}

#[test]
fn boundary_reconstruction_recovers_both_enumerators() {
    let out = lmds(&[
        "--no-ts", "bounds", "wdist", "--n", "9", "--k", "5", "--q", "3", "--ell", "2",
        "--boundary", "10,18,54",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("enumerator=1+10z^3+18z^4+54z^5+76z^6+54z^7+18z^8+12z^9"), "{text}");
    assert!(text.contains("dual_enumerator=1+14z^4+8z^5+26z^6+22z^7+10z^8"), "{text}");
    assert!(text.contains("consistent=true"), "{text}");
}

#[test]
fn suppressing_the_timestamp_makes_runs_byte_identical() {
    let args = ["--no-ts", "bounds", "maxlen", "--q", "2", "--k", "4", "--ell", "1"];
    let first = lmds(&args);
    let second = lmds(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let with_ts = lmds(&args[1..]);
    assert!(stdout(&with_ts).starts_with("ts="));
}

#[test]
fn non_design_supports_fail_the_check() {
    let path = fixture("c1.code", "field 2^1\n6 2\n1 1 1 1 0 0\n0 0 1 1 1 1\n");
    let out = lmds(&["--no-ts", "design", "check", "--code", path.to_str().unwrap(), "--weight", "4", "--t", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("is_design=false"));
    std::fs::remove_file(path).ok();
}

#[test]
fn subset_sum_brute_force_agrees_with_the_closed_count() {
    let out = lmds(&["--no-ts", "subsetsum", "--field", "2^4", "--r", "7", "--b", "0", "--brute"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("closed=435"), "{text}");
    assert!(text.contains("match=true"), "{text}");
}

#[test]
fn extension_writes_a_loadable_code_file() {
    let input = fixture("rep3.code", "field 2^1\n3 1\n1 1 1\n");
    let output = std::env::temp_dir().join(format!("lmds-cli-{}-rep4.code", std::process::id()));
    let out = lmds(&[
        "--no-ts", "prop", "extend",
        "--code", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("observed=[4,1,4]"));

    let analyzed = lmds(&["--no-ts", "code", "analyze", "--code", output.to_str().unwrap()]);
    assert_eq!(analyzed.status.code(), Some(0));
    assert!(stdout(&analyzed).contains("verdict=MDS"));
    std::fs::remove_file(input).ok();
    std::fs::remove_file(output).ok();
}

#[test]
fn characterization_of_a_code_file_verifies_the_equivalence() {
    let path = fixture(
        "ham.code",
        "field 2^1\n7 4\n1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n",
    );
    let out = lmds(&["--no-ts", "bounds", "check-code", "--code", path.to_str().unwrap(), "--ell", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("outcome=equivalent-verified"), "{text}");
    assert!(text.contains("within_bounds=true"), "{text}");
    std::fs::remove_file(path).ok();
}
