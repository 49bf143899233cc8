//! The command line, driven both in-process and through the built binary.

use std::process::Command;

use diffexp::cli::{run_with, EXIT_CONFIG, EXIT_OK};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("diffexp").chain(args.iter().copied()).map(Into::into);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn list_echoes_the_registry() {
    let (code, out, _) = invoke(&["list"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dem.left  SMOOTH  Def 3.1 \"such that the following diagrams commute\""), "{out}");
    assert!(out.contains("rel.cd3  REL  \"Linear Rule: η ε = 1\""));
    assert!(out.lines().count() >= 60);
}

#[test]
fn explain_describes_a_law() {
    let (code, out, _) = invoke(&["explain", "rigs.roundtrip"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Theorem") && out.contains("isomorphic to its category of differential"), "{out}");
    let (_, out, _) = invoke(&["explain", "rel.mu_dea"]);
    assert!(out.contains("Explicitly, μ is defined as follows"));
    assert!(out.contains("method:"));
}

#[test]
fn unknown_names_exit_with_configuration_error() {
    let (code, _, err) = invoke(&["explain", "nope"]);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("nope"));
    let (code, _, err) = invoke(&["check", "--suite", "bogus"]);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("smooth-axioms"), "{err}");
}

#[test]
fn bad_settings_exit_with_configuration_error() {
    for args in [
        &["check", "--tol", "-1"][..],
        &["check", "--tol", "0"],
        &["check", "--samples", "0"],
        &["check", "--max-degree", "0"],
        &["check", "--format", "xml"],
        &["check", "-s", "rel"],
    ] {
        assert_eq!(invoke(args).0, EXIT_CONFIG, "{args:?}");
    }
}

#[test]
fn smooth_json_report_has_the_schema() {
    let (code, out, err) = invoke(&["check", "--suite", "smooth-axioms", "--seed", "7", "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["version"], "1.0");
    for key in ["seed", "samples", "tol", "max_degree"] {
        assert!(v["config"].get(key).is_some(), "config.{key}");
    }
    assert_eq!(v["config"]["seed"], 7);
    let laws = v["laws"].as_array().unwrap();
    assert!(laws.len() >= 7);
    for key in ["id", "paper_ref", "model", "pass", "max_residual", "witnesses", "elapsed"] {
        assert!(laws[0].get(key).is_some(), "law.{key}");
    }
    let total = v["summary"]["total"].as_u64().unwrap();
    assert_eq!(total, v["summary"]["passed"].as_u64().unwrap() + v["summary"]["failed"].as_u64().unwrap());
}

#[test]
fn rel_suite_passes_at_degree_three() {
    let (code, out, err) = invoke(&["check", "--suite", "rel", "--max-degree", "3"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("| rel.cd3 | REL | pass |"));
    assert!(out.contains("| rel.neg.epsilon_as_exp | REL | fail | fail |"));
}

#[test]
fn reports_are_identical_across_runs_and_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = |n: &str| dir.path().join(n).to_string_lossy().into_owned();
    for name in ["a.json", "b.json"] {
        let (code, out, _) =
            invoke(&["check", "--suite", "exponentials", "--suite", "rigs", "--format", "json", "--out", &path(name)]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
    }
    assert_eq!(std::fs::read(path("a.json")).unwrap(), std::fs::read(path("b.json")).unwrap());
}

#[test]
fn impossible_tolerance_makes_laws_fail() {
    // A tolerance below rounding error turns honest floating-point residuals
    // into failures, which must surface as exit status 1.
    let (code, _, err) = invoke(&["check", "--suite", "exponentials", "--tol", "1e-300"]);
    assert_eq!(code, 1);
    assert!(err.contains("failed"), "{err}");
}

#[test]
fn binary_uses_the_same_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_diffexp");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let listed = status(&["list"]);
    assert!(listed.status.success());
    assert!(String::from_utf8_lossy(&listed.stdout).contains("rel.mu_dea  REL"));
    assert_eq!(status(&["check", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(status(&["check", "--suite", "dynamics"]).status.code(), Some(0));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
