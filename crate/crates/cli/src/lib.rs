//! Command runners behind the `leibniz` binary.
//!
//! Each runner returns an [`Outcome`] instead of printing, so the binary and
//! the tests share one code path. Exit codes: 0 all checks pass, 1 a
//! mathematical check failed, 2 usage, parse or I/O error.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use leibniz_core::expansions::{general_leibniz_noncommutative, iterate_expand, leibniz_commutative};
use leibniz_core::models::ModelFile;
use leibniz_core::verify::{selftest, verify_model, SelftestConfig, VerifyConfig};
use leibniz_core::{DerivationSpec, Execution, PairPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest power expanded without `--allow-large`; raw expansion has 2^n terms.
pub const DEFAULT_N_CAP: u64 = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code: EXIT_USAGE }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Iterate,
    Commutative,
    Noncommutative,
    All,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "iterate" => Ok(Mode::Iterate),
            "commutative" => Ok(Mode::Commutative),
            "noncommutative" => Ok(Mode::Noncommutative),
            "all" => Ok(Mode::All),
            other => Err(format!("unknown mode `{other}` (iterate|commutative|noncommutative|all)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExpandCmd<'a> {
    pub spec: &'a Path,
    pub n: u64,
    pub mode: Mode,
    pub allow_large: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyCmd<'a> {
    pub spec: &'a Path,
    pub model: &'a Path,
    pub n_max: u64,
    pub trials: usize,
    pub seed: u64,
    pub exec: Execution,
}

#[derive(Clone, Debug)]
pub struct EvalCmd<'a> {
    pub spec: &'a Path,
    pub model: &'a Path,
    pub n: u64,
    pub a: &'a str,
    pub b: &'a str,
    pub allow_large: bool,
}

#[derive(Clone, Debug)]
pub struct SelftestCmd {
    pub seed: u64,
    pub n_max: Option<u64>,
    pub exec: Execution,
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_spec_file(path: &Path) -> Result<DerivationSpec, String> {
    let text = read(path)?;
    DerivationSpec::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_model_file(path: &Path) -> Result<ModelFile, String> {
    let text = read(path)?;
    ModelFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn check_cap(n: u64, allow_large: bool) -> Result<(), String> {
    if n > DEFAULT_N_CAP && !allow_large {
        return Err(format!("n = {n} exceeds the default cap of {DEFAULT_N_CAP}; pass --allow-large to override"));
    }
    Ok(())
}

pub fn run_expand(cmd: &ExpandCmd) -> Outcome {
    let spec = match parse_spec_file(cmd.spec) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    if let Err(e) = check_cap(cmd.n, cmd.allow_large) {
        return Outcome::usage(e);
    }
    let n = cmd.n;
    match cmd.mode {
        Mode::Iterate => Outcome::ok(iterate_expand(&spec, n).poly.to_canonical_string()),
        Mode::Noncommutative => Outcome::ok(general_leibniz_noncommutative(&spec, n).to_canonical_string()),
        Mode::Commutative => match leibniz_commutative(&spec, n) {
            Ok(p) => Outcome::ok(p.to_canonical_string()),
            Err(e) => Outcome::usage(e),
        },
        Mode::All => expand_all(&spec, n),
    }
}

fn section(out: &mut String, title: &str, p: &PairPoly) {
    let _ = writeln!(out, "# {title}");
    out.push_str(&p.to_canonical_string());
}

fn expand_all(spec: &DerivationSpec, n: u64) -> Outcome {
    let iterated = iterate_expand(spec, n).poly;
    let closed = general_leibniz_noncommutative(spec, n);
    let mut out = String::new();
    section(&mut out, "iterate", &iterated);
    section(&mut out, "noncommutative", &closed);
    let mut equal = iterated == closed;
    if spec.has_commutative_hypotheses() {
        let comm = match leibniz_commutative(spec, n) {
            Ok(p) => p,
            Err(e) => return Outcome::usage(e),
        };
        section(&mut out, "commutative", &comm);
        // The grouped form only matches after both sides are brought to the
        // same normal form under the declared commutations.
        let same = match (iterated.normalize_commutative(&spec.hyp), comm.normalize_commutative(&spec.hyp)) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        };
        equal &= same;
    } else {
        out.push_str("# commutative\nskipped: no commuting pairs declared for both summand slots\n");
    }
    let _ = writeln!(out, "verdict: {}", if equal { "EQUAL" } else { "UNEQUAL" });
    Outcome { stdout: out, stderr: String::new(), code: if equal { EXIT_OK } else { EXIT_FAILED } }
}

pub fn run_verify(cmd: &VerifyCmd) -> Outcome {
    if cmd.trials == 0 {
        return Outcome::usage("--trials must be at least 1");
    }
    let (spec, model) = match (parse_spec_file(cmd.spec), parse_model_file(cmd.model)) {
        (Ok(s), Ok(m)) => (s, m),
        (Err(e), _) | (_, Err(e)) => return Outcome::usage(e),
    };
    if let Err(e) = check_cap(cmd.n_max, false) {
        return Outcome::usage(e);
    }
    let cfg = VerifyConfig { n_max: cmd.n_max, trials: cmd.trials, seed: cmd.seed, exec: cmd.exec };
    match verify_model(&spec, &model, &cfg) {
        Ok(report) => Outcome {
            stdout: report.render(),
            stderr: report.render_timings(),
            code: if report.passed() { EXIT_OK } else { EXIT_FAILED },
        },
        Err(e) => Outcome::usage(e),
    }
}

pub fn run_eval(cmd: &EvalCmd) -> Outcome {
    let (spec, model) = match (parse_spec_file(cmd.spec), parse_model_file(cmd.model)) {
        (Ok(s), Ok(m)) => (s, m),
        (Err(e), _) | (_, Err(e)) => return Outcome::usage(e),
    };
    if let Err(e) = check_cap(cmd.n, cmd.allow_large) {
        return Outcome::usage(e);
    }
    let env = match model.env_for(&spec) {
        Ok(env) => env,
        Err(e) => return Outcome::usage(e),
    };
    let parse = |label: &str, text: &str| {
        model.ring.parse_element(text).map_err(|e| format!("--{label}: {e}"))
    };
    let (a, b) = match (parse("a", cmd.a), parse("b", cmd.b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::usage(e),
    };

    let brute = env.brute_force_power(cmd.n, &a, &b);
    let mut rows = vec![("brute-force", Ok(brute.clone()))];
    rows.push(("iterate", env.eval_pairpoly(&iterate_expand(&spec, cmd.n).poly, &a, &b)));
    rows.push(("noncommutative", env.eval_pairpoly(&general_leibniz_noncommutative(&spec, cmd.n), &a, &b)));
    if spec.has_commutative_hypotheses() {
        match leibniz_commutative(&spec, cmd.n) {
            Ok(p) => rows.push(("commutative", env.eval_pairpoly(&p, &a, &b))),
            Err(e) => return Outcome::usage(e),
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "f^{}(ab) with a = {a}, b = {b}", cmd.n);
    let mut equal = true;
    for (label, value) in rows {
        match value {
            Ok(v) => {
                equal &= v == brute;
                let _ = writeln!(out, "{label}: {v}");
            }
            Err(e) => return Outcome::usage(e),
        }
    }
    let _ = writeln!(out, "verdict: {}", if equal { "EQUAL" } else { "UNEQUAL" });
    Outcome { stdout: out, stderr: String::new(), code: if equal { EXIT_OK } else { EXIT_FAILED } }
}

pub fn run_selftest(cmd: &SelftestCmd) -> Outcome {
    let mut cfg = SelftestConfig::new(cmd.seed);
    if let Some(n) = cmd.n_max {
        if let Err(e) = check_cap(n, false) {
            return Outcome::usage(e);
        }
        cfg = cfg.with_n_max(n);
    }
    cfg.exec = cmd.exec;
    let report = selftest(&cfg);
    Outcome {
        stdout: report.render(),
        stderr: report.render_timings(),
        code: if report.passed() { EXIT_OK } else { EXIT_FAILED },
    }
}
