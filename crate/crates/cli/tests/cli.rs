use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibniz_core::models::builtin_model_catalog;
use leibniz_core::PairPoly;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn leibniz(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_leibniz"));
    for a in args {
        // Bare fixture names are resolved against the fixtures directory.
        if a.ends_with(".spec") || a.ends_with(".model") {
            cmd.arg(fixture(a));
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn golden_second_power() {
    let out = leibniz(&["expand", "--spec", "generic.spec", "--n", "2", "--mode", "noncommutative"]);
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/generic_n2_noncommutative.txt"),
    )
    .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden);
}

#[test]
fn zeroth_power_is_the_unit_in_every_mode() {
    for (spec, mode) in [
        ("generic.spec", "iterate"),
        ("generic.spec", "noncommutative"),
        ("commuting.spec", "commutative"),
        ("sigma_tau.spec", "commutative"),
    ] {
        let out = leibniz(&["expand", "--spec", spec, "--n", "0", "--mode", mode]);
        assert_eq!(stdout(&out), "1 * I(a) * I(b)\n", "{spec} {mode}");
    }
}

#[test]
fn mode_all_agrees_at_three() {
    let out = leibniz(&["expand", "--spec", "generic.spec", "--n", "3", "--mode", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let body = |title: &str| {
        let start = text.find(&format!("# {title}\n")).unwrap() + title.len() + 3;
        let end = text[start..].find("# ").map_or(text.len(), |e| start + e);
        text[start..end].to_string()
    };
    assert_eq!(body("iterate"), body("noncommutative"));
    assert_eq!(body("iterate").lines().count(), 8);
    assert!(text.ends_with("verdict: EQUAL\n"));

    let out = leibniz(&["expand", "--spec", "sigma_tau.spec", "--n", "4", "--mode", "all"]);
    assert!(stdout(&out).contains("# commutative\n1 * d.d.d.d(a) * s.s.s.s(b)\n4 * d.d.d.t(a)"));
    assert!(stdout(&out).ends_with("verdict: EQUAL\n"));
}

#[test]
fn printed_expansion_parses_back() {
    for mode in ["iterate", "noncommutative"] {
        let out = leibniz(&["expand", "--spec", "generic.spec", "--n", "5", "--mode", mode]);
        let text = stdout(&out);
        let p: PairPoly = text.parse().unwrap();
        assert_eq!(p.to_canonical_string(), text);
        assert_eq!(p.len(), 32);
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: [(&[&str], &str); 7] = [
        (&["expand", "--spec", "three_summands.spec", "--n", "2"], "exactly two summands"),
        (&["expand", "--spec", "syntax_error.spec", "--n", "2"], "line 3"),
        (&["expand", "--spec", "missing.spec", "--n", "2"], "missing.spec"),
        (&["expand", "--spec", "generic.spec", "--n", "2", "--mode", "commutative"], "commutation"),
        (&["expand", "--spec", "generic.spec", "--n", "21"], "--allow-large"),
        (&["verify", "--spec", "inner.spec", "--model", "missing.model"], "missing.model"),
        (&["expand", "--spec", "generic.spec", "--n", "2", "--mode", "sideways"], "mode"),
    ];
    for (args, needle) in cases {
        let out = leibniz(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(needle), "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn allow_large_lifts_the_cap() {
    let out = leibniz(&["expand", "--spec", "commuting.spec", "--n", "21", "--mode", "commutative", "--allow-large"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 22);
}

#[test]
fn malformed_element_literals_exit_two() {
    for (a, b) in [("[[1,2],[3,4]]", "[0,1]"), ("[0,x]", "[1]"), ("[0,0,0,0,0,0,1]", "[1]"), ("", "[1]")] {
        let out = leibniz(&["eval", "--spec", "ddx.spec", "--model", "ddx.model", "--n", "2", "--a", a, "--b", b]);
        assert_eq!(out.status.code(), Some(2), "{a} {b}: {}", stderr(&out));
    }
}

#[test]
fn eval_second_derivative_of_x5() {
    let out = leibniz(&[
        "eval", "--spec", "ddx.spec", "--model", "ddx.model", "--n", "2", "--a", "[0,0,1]", "--b", "[0,0,0,1]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("brute-force: [0,0,0,20,0,0]\n"));
    assert!(text.contains("commutative: [0,0,0,20,0,0]\n"));
    assert!(text.ends_with("verdict: EQUAL\n"));
}

#[test]
fn verify_catalog_models() {
    for name in ["inner", "sigma", "generalized", "ternary", "ddx"] {
        let spec = format!("{name}.spec");
        let model = format!("{name}.model");
        let out = leibniz(&["verify", "--spec", &spec, "--model", &model, "--n-max", "4", "--trials", "5"]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", stdout(&out));
        assert!(stdout(&out).contains("ALL PASS"));
        assert!(stderr(&out).contains("time defining-identity"));
    }
}

#[test]
fn verify_rejects_left_multiplication() {
    let out = leibniz(&["verify", "--spec", "inner.spec", "--model", "bad.model", "--trials", "3", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("[FAIL] defining identity of d"));
    assert!(text.contains("counterexample (case 0):"));
    assert!(text.contains("lhs = ") && text.contains("rhs = "));
}

#[test]
fn fixtures_match_catalog() {
    let names = ["inner", "sigma", "generalized", "ternary", "ddx"];
    for (entry, name) in builtin_model_catalog().iter().zip(names) {
        assert_eq!(std::fs::read_to_string(fixture(&format!("{name}.spec"))).unwrap(), entry.spec_text);
        assert_eq!(std::fs::read_to_string(fixture(&format!("{name}.model"))).unwrap(), entry.model_text);
    }
    let bad = leibniz_core::models::known_bad_model();
    assert_eq!(std::fs::read_to_string(fixture("bad.model")).unwrap(), bad.model_text);
}

#[test]
fn small_selftest_is_deterministic_and_passes() {
    let a = leibniz(&["selftest", "--seed", "7", "--n-max", "3"]);
    let b = leibniz(&["--sequential", "selftest", "--seed", "7", "--n-max", "3"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_at_zero_passes() {
    let out = leibniz(&["selftest", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("ALL PASS"));
}

#[test]
fn selftest_outcome_is_seed_independent() {
    for seed in ["1", "2", "3", "4", "5"] {
        let out = leibniz(&["selftest", "--seed", seed, "--n-max", "4"]);
        assert_eq!(out.status.code(), Some(0), "seed {seed}:\n{}", stdout(&out));
    }
}
