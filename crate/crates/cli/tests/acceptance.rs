//! One pass/fail line per acceptance criterion, with the tolerance (exact
//! equality throughout) and the runtime budget pinned here.
//!
//! Runtime budgets assume an optimized test profile; the workspace sets
//! `opt-level = 2` for tests.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use leibniz_cli::{run_expand, ExpandCmd, Mode, EXIT_FAILED};
use leibniz_core::delta::DeltaOperator;
use leibniz_core::models::{builtin_model_catalog, ConcreteRing, Element, RationalMatrix, TruncPoly};
use leibniz_core::scalar::int;
use leibniz_core::verify::concrete::{self, BridgeForms};
use leibniz_core::verify::{symbolic, CheckReport};
use leibniz_core::Execution;

const SEED: u64 = 42;
const EXEC: Execution = Execution::Parallel;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name))
        .expect("golden file")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
}

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(format!("{} failed {}/{} cases", r.name, r.failed, r.cases)),
    }
}

fn matrix(rows: &[&[i64]]) -> Element {
    Element::Matrix(RationalMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
    ))
}

fn expand_text(spec: &str, n: u64, mode: Mode) -> Result<String, String> {
    let out = run_expand(&ExpandCmd { spec: &fixture(spec), n, mode, allow_large: false });
    if out.code != 0 {
        return Err(out.stderr);
    }
    Ok(out.stdout)
}

fn golden_expansion() -> Result<(), String> {
    let text = expand_text("generic.spec", 2, Mode::Noncommutative)?;
    let expected = golden("generic_n2_noncommutative.txt");
    if text != expected {
        return Err(format!("got:\n{text}expected:\n{expected}"));
    }
    Ok(())
}

fn noncommutative_equivalence() -> Result<(), String> {
    all_pass(&symbolic::noncommutative_equivalence(50, 10, SEED, EXEC))
}

fn commutative_collapse() -> Result<(), String> {
    all_pass(&symbolic::commutative_collapse(50, 10, SEED, EXEC))?;
    let n2 = "1 * g1.g1(a) * h1.h1(b)\n2 * g1.g2(a) * h1.h2(b)\n1 * g2.g2(a) * h2.h2(b)\n";
    let n3 = "1 * g1.g1.g1(a) * h1.h1.h1(b)\n3 * g1.g1.g2(a) * h1.h1.h2(b)\n\
              3 * g1.g2.g2(a) * h1.h2.h2(b)\n1 * g2.g2.g2(a) * h2.h2.h2(b)\n";
    for (n, expected) in [(2, n2), (3, n3)] {
        let got = expand_text("commuting.spec", n, Mode::Commutative)?;
        if got != expected {
            return Err(format!("n = {n}: got\n{got}"));
        }
    }
    Ok(())
}

fn delta_closed_form() -> Result<(), String> {
    let rings = [ConcreteRing::Matrix(2), ConcreteRing::Matrix(3), ConcreteRing::Matrix(4)];
    all_pass(&[concrete::delta_closed_form(&rings, 50, 8, SEED, EXEC)])?;
    // Pinned value, recomputed by hand-iterating x -> b1 x - x b2 twice.
    let delta = DeltaOperator::new(matrix(&[&[0, 1], &[0, 0]]), matrix(&[&[1, 0], &[0, 0]]));
    let a = matrix(&[&[1, 2], &[3, 4]]);
    let expected = matrix(&[&[-5, 0], &[3, 0]]);
    let (closed, iterated) = (delta.power_closed(&a, 2), delta.power_iterated(&a, 2));
    if closed != expected || iterated != expected {
        return Err(format!("pinned case: closed {closed}, iterated {iterated}"));
    }
    Ok(())
}

fn power_and_binomial() -> Result<(), String> {
    let rings = [ConcreteRing::Matrix(2), ConcreteRing::Matrix(3), ConcreteRing::Matrix(4)];
    all_pass(&[
        concrete::power_identity(&rings, 50, 8, SEED, EXEC),
        concrete::binomial_independence(&rings, 50, 5, 8, SEED, EXEC),
    ])
}

fn soundness_bridge() -> Result<(), String> {
    for entry in builtin_model_catalog() {
        let forms = BridgeForms { commutative: entry.spec.has_commutative_hypotheses() };
        all_pass(&concrete::soundness_bridge(entry.name, &entry.spec, &entry.env, 25, 6, forms, SEED, EXEC))?;
    }
    // D²(x²·x³) = 20x³ in Q[x]/x⁶.
    let entry = builtin_model_catalog().into_iter().find(|e| e.name == "formal-d-dx").unwrap();
    let a = Element::Poly(TruncPoly::monomial(6, 2));
    let b = Element::Poly(TruncPoly::monomial(6, 3));
    let expected = Element::Poly(TruncPoly::monomial(6, 3).scale(&int(20)));
    let expansion = leibniz_core::expansions::general_leibniz_noncommutative(&entry.spec, 2);
    let got = entry.env.eval_pairpoly(&expansion, &a, &b).map_err(|e| e.to_string())?;
    if got != expected || entry.env.brute_force_power(2, &a, &b) != expected {
        return Err(format!("d/dx fixture gave {got}"));
    }
    Ok(())
}

fn known_bad_model() -> Result<(), String> {
    let out = bin()
        .args(["verify", "--spec"])
        .arg(fixture("inner.spec"))
        .arg("--model")
        .arg(fixture("bad.model"))
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    if out.status.code() != Some(EXIT_FAILED) {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    if !stdout.contains("[FAIL] defining identity") || !stdout.contains("counterexample") {
        return Err(format!("no counterexample in report:\n{stdout}"));
    }
    Ok(())
}

fn selftest_determinism() -> Result<(), String> {
    let run = || {
        bin()
            .args(["selftest", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    if first.status.code() != Some(0) {
        return Err(format!("selftest failed:\n{}", String::from_utf8_lossy(&first.stdout)));
    }
    if first.stdout != second.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(())
}

type Criterion = (&'static str, Duration, fn() -> Result<(), String>);

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden expansion at n = 2", Duration::from_millis(100), golden_expansion),
        ("closed form = iterated expansion, 50 specs, n <= 10", Duration::from_secs(30), noncommutative_equivalence),
        ("commutative collapse with C(n,k) coefficients, n <= 10", Duration::from_secs(10), commutative_collapse),
        ("delta closed form on 50 matrix triples, n <= 8", Duration::from_secs(5), delta_closed_form),
        ("a^n and (a+b)^n identities, 50 pairs x 7 c, n <= 8", Duration::from_secs(10), power_and_binomial),
        ("soundness bridge on 5 catalog models, n <= 6", Duration::from_secs(20), soundness_bridge),
        ("known-bad model rejected with counterexample", Duration::from_secs(30), known_bad_model),
        ("selftest --seed 42 byte-identical twice", Duration::from_secs(120), selftest_determinism),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= *budget => Ok(()),
            Ok(()) => Err(format!("over budget: {elapsed:.3?} > {budget:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS {}: {name} ({elapsed:.3?}, budget {budget:?})", i + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL {}: {name} ({elapsed:.3?}, budget {budget:?})\n  {}", i + 1, e.replace('\n', "\n  "));
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
