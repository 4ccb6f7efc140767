//! Check results and their deterministic text rendering.

use std::fmt::Write as _;
use std::time::Duration;

use crate::par::Execution;

/// Inputs and both sides of the first failing case of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: usize,
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

impl Counterexample {
    pub fn new(inputs: Vec<(String, String)>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Counterexample {
            case: 0,
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: None,
        }
    }

    /// A case that could not be evaluated at all.
    pub fn error(inputs: Vec<(String, String)>, note: impl ToString) -> Self {
        Counterexample {
            case: 0,
            inputs,
            lhs: String::new(),
            rhs: String::new(),
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl ToString) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

pub type CaseOutcome = Result<(), Counterexample>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Runs `count` independent cases and keeps the lowest-index failure.
    pub fn run<F>(name: impl Into<String>, count: usize, exec: Execution, case: F) -> Self
    where
        F: Fn(usize) -> CaseOutcome + Sync + Send,
    {
        let outcomes = exec.map_indexed(count, case);
        let mut failed = 0;
        let mut counterexample = None;
        for (i, outcome) in outcomes.into_iter().enumerate() {
            if let Err(mut cx) = outcome {
                failed += 1;
                if counterexample.is_none() {
                    cx.case = i;
                    counterexample = Some(cx);
                }
            }
        }
        CheckReport {
            name: name.into(),
            cases: count,
            failed,
            counterexample,
        }
    }

    /// A single pass/fail fact.
    pub fn single(name: impl Into<String>, outcome: CaseOutcome) -> Self {
        let outcome = outcome.err();
        CheckReport {
            name: name.into(),
            cases: 1,
            failed: usize::from(outcome.is_some()),
            counterexample: outcome,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            suites: Vec::new(),
        }
    }

    pub fn push(&mut self, suite: SuiteReport) {
        self.suites.push(suite);
    }

    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn check_count(&self) -> (usize, usize) {
        let total = self.suites.iter().map(|s| s.checks.len()).sum();
        let passed = self
            .suites
            .iter()
            .flat_map(|s| &s.checks)
            .filter(|c| c.passed())
            .count();
        (passed, total)
    }

    /// Report text without timings; byte-identical for identical inputs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.title);
        for suite in &self.suites {
            let status = if suite.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "suite {} [{status}]", suite.name);
            for check in &suite.checks {
                render_check(&mut out, check);
            }
        }
        let (passed, total) = self.check_count();
        let verdict = if self.passed() { "ALL PASS" } else { "FAILURES" };
        let _ = writeln!(out, "summary: {passed}/{total} checks passed, {verdict}");
        out
    }

    /// Per-suite wall-clock times, for stderr.
    pub fn render_timings(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            let _ = writeln!(
                out,
                "time {}: {:.3}s",
                suite.name,
                suite.elapsed.as_secs_f64()
            );
        }
        out
    }
}

fn render_check(out: &mut String, check: &CheckReport) {
    let status = if check.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "  [{status}] {} ({} cases, {} failed)",
        check.name, check.cases, check.failed
    );
    if let Some(cx) = &check.counterexample {
        let _ = writeln!(out, "    counterexample (case {}):", cx.case);
        for (name, value) in &cx.inputs {
            let _ = writeln!(out, "      {name} = {value}");
        }
        if let Some(note) = &cx.note {
            let _ = writeln!(out, "      note: {note}");
        }
        if !cx.lhs.is_empty() || !cx.rhs.is_empty() {
            let _ = writeln!(out, "      lhs = {}", cx.lhs.trim_end().replace('\n', " + "));
            let _ = writeln!(out, "      rhs = {}", cx.rhs.trim_end().replace('\n', " + "));
        }
    }
}

/// Compares two values, producing a counterexample with both sides on
/// mismatch.
pub fn expect_eq<T: PartialEq + std::fmt::Display>(
    lhs: &T,
    rhs: &T,
    inputs: impl FnOnce() -> Vec<(String, String)>,
) -> CaseOutcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Counterexample::new(inputs(), lhs, rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_failure_in_index_order() {
        let check = CheckReport::run("odd", 10, Execution::Parallel, |i| {
            if i % 2 == 1 {
                Err(Counterexample::new(vec![("i".into(), i.to_string())], i, 0))
            } else {
                Ok(())
            }
        });
        assert_eq!(check.failed, 5);
        assert_eq!(check.counterexample.unwrap().case, 1);
    }

    #[test]
    fn render_is_stable() {
        let mut report = Report::new("demo");
        report.push(SuiteReport {
            name: "s".into(),
            checks: vec![CheckReport::single("fact", Ok(()))],
            elapsed: Duration::from_millis(5),
        });
        assert_eq!(
            report.render(),
            "== demo ==\nsuite s [PASS]\n  [PASS] fact (1 cases, 0 failed)\nsummary: 1/1 checks passed, ALL PASS\n"
        );
    }
}
