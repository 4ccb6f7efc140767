//! Verification suites over the symbolic layer and concrete models.
//!
//! Every suite is a pure function of its configuration and seed; cases fan
//! out through [`Execution`] and are merged in index order, so rendered
//! reports are byte-identical across runs and thread counts.

pub mod concrete;
pub mod random;
pub mod report;
pub mod symbolic;

use std::time::Instant;

use crate::error::Result;
use crate::models::{
    builtin_model_catalog, known_bad_model, validate_commutation, validate_spec, ConcreteRing, ModelFile,
    Sampler, Trials,
};
use crate::par::Execution;
use crate::spec::DerivationSpec;
use concrete::BridgeForms;
pub use report::{CheckReport, Counterexample, Report, SuiteReport};

fn suite(name: &str, body: impl FnOnce() -> Vec<CheckReport>) -> SuiteReport {
    let start = Instant::now();
    let checks = body();
    SuiteReport {
        name: name.to_string(),
        checks,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Power bound for symbolic expansions.
    pub n_symbolic: u64,
    /// Power bound for catalog soundness checks.
    pub n_concrete: u64,
    /// Power bound for δ-power identities.
    pub n_delta: u64,
    /// Power bound for the classical-coefficient check.
    pub n_classical: u64,
    /// Power bound for family-wrapper consistency.
    pub n_wrappers: u64,
    pub random_specs: usize,
    pub law_cases: usize,
    pub ring_cases: usize,
    pub random_c: usize,
    pub validation_trials: usize,
    pub bridge_pairs: usize,
    pub exec: Execution,
}

impl SelftestConfig {
    pub fn new(seed: u64) -> Self {
        SelftestConfig {
            seed,
            n_symbolic: 10,
            n_concrete: 6,
            n_delta: 8,
            n_classical: 12,
            n_wrappers: 6,
            random_specs: 50,
            law_cases: 100,
            ring_cases: 50,
            random_c: 5,
            validation_trials: 100,
            bridge_pairs: 25,
            exec: Execution::Parallel,
        }
    }

    /// Caps every power bound at `n`.
    pub fn with_n_max(mut self, n: u64) -> Self {
        self.n_symbolic = n;
        self.n_concrete = n;
        self.n_delta = n;
        self.n_classical = n;
        self.n_wrappers = n;
        self
    }
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig::new(42)
    }
}

/// The concrete rings exercised by the δ-identity suites.
pub fn default_rings() -> Vec<ConcreteRing> {
    vec![
        ConcreteRing::Matrix(2),
        ConcreteRing::Matrix(3),
        ConcreteRing::Matrix(4),
        ConcreteRing::PolyTrunc(6),
    ]
}

/// Runs every property of the symbolic layer and every catalog model.
pub fn selftest(cfg: &SelftestConfig) -> Report {
    let seed = cfg.seed;
    let exec = cfg.exec;
    let rings = default_rings();
    let mut report = Report::new(format!("selftest seed={seed}"));

    report.push(suite("binomial", || vec![symbolic::pascal_identity(40)]));
    report.push(suite("otimes-ring", || {
        let mut checks = symbolic::ring_laws(cfg.law_cases, seed, exec);
        checks.push(symbolic::power_additivity(cfg.law_cases / 4, cfg.n_symbolic.min(5), seed, exec));
        checks.extend(symbolic::normalization_and_text(cfg.law_cases, seed, exec));
        checks
    }));
    report.push(suite("noncommutative-closed-form", || {
        symbolic::noncommutative_equivalence(cfg.random_specs, cfg.n_symbolic, seed, exec)
    }));
    report.push(suite("commutative-collapse", || {
        symbolic::commutative_collapse(cfg.random_specs, cfg.n_symbolic, seed, exec)
    }));
    report.push(suite("term-count", || {
        vec![symbolic::term_count(cfg.random_specs, cfg.n_symbolic, seed, exec)]
    }));
    report.push(suite("classical-reduction", || {
        vec![symbolic::classical_reduction(cfg.n_classical)]
    }));
    report.push(suite("family-wrappers", || symbolic::wrapper_consistency(cfg.n_wrappers)));
    report.push(suite("delta-closed-form", || {
        vec![
            symbolic::delta_degenerate_cases(),
            symbolic::delta_closed_form_symbolic(cfg.ring_cases, cfg.n_delta, seed, exec),
            concrete::delta_closed_form(&rings, cfg.ring_cases, cfg.n_delta, seed, exec),
        ]
    }));
    report.push(suite("power-identity", || {
        vec![concrete::power_identity(&rings, cfg.ring_cases, cfg.n_delta, seed, exec)]
    }));
    report.push(suite("binomial-independence", || {
        vec![concrete::binomial_independence(
            &rings,
            cfg.ring_cases,
            cfg.random_c,
            cfg.n_delta,
            seed,
            exec,
        )]
    }));
    let catalog = builtin_model_catalog();
    report.push(suite("catalog-validation", || {
        let sampler = Sampler::default();
        let mut checks = Vec::new();
        for entry in &catalog {
            let mut check = validate_spec(
                &entry.spec,
                &entry.env,
                Trials::Random(cfg.validation_trials),
                seed,
                &sampler,
                exec,
            );
            check.name = format!("{}: {}", entry.name, check.name);
            checks.push(check);
            let hyp = entry.spec.hyp.union(&entry.env.hyp);
            for mut check in validate_commutation(
                &hyp,
                &entry.env,
                Trials::Random(cfg.validation_trials),
                seed,
                &sampler,
                exec,
            ) {
                check.name = format!("{}: {}", entry.name, check.name);
                checks.push(check);
            }
        }
        let bad = known_bad_model();
        let bad_report = validate_spec(&bad.spec, &bad.env, Trials::Random(25), seed, &sampler, exec);
        checks.push(CheckReport::single(
            "left multiplication by a non-central element is rejected",
            if bad_report.passed() {
                Err(Counterexample::error(Vec::new(), "validator accepted a non-derivation"))
            } else {
                Ok(())
            },
        ));
        checks
    }));
    report.push(suite("soundness-bridge", || {
        catalog
            .iter()
            .flat_map(|entry| {
                concrete::soundness_bridge(
                    entry.name,
                    &entry.spec,
                    &entry.env,
                    cfg.bridge_pairs,
                    cfg.n_concrete,
                    BridgeForms {
                        commutative: entry.spec.has_commutative_hypotheses(),
                    },
                    seed,
                    exec,
                )
            })
            .collect()
    }));
    report
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub n_max: u64,
    pub trials: usize,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            trials: 25,
            seed: 42,
            exec: Execution::Parallel,
        }
    }
}

/// Checks a user-supplied spec against a model file. Binding errors (unbound
/// symbols, role clashes) are returned as `Err`; mathematical failures are
/// recorded in the report.
pub fn verify_model(spec: &DerivationSpec, model: &ModelFile, cfg: &VerifyConfig) -> Result<Report> {
    let env = model.env_for(spec)?;
    let sampler = Sampler::default();
    let trials = Trials::Random(cfg.trials);
    let mut report = Report::new(format!(
        "verify {} on {} (n_max={}, trials={}, seed={})",
        spec.f_name, model.ring, cfg.n_max, cfg.trials, cfg.seed
    ));

    let spec_check = validate_spec(spec, &env, trials, cfg.seed, &sampler, cfg.exec);
    let spec_ok = spec_check.passed();
    report.push(suite("defining-identity", || vec![spec_check]));

    let hyp = spec.hyp.union(&env.hyp);
    if !hyp.is_empty() {
        report.push(suite("commutation", || {
            validate_commutation(&hyp, &env, trials, cfg.seed, &sampler, cfg.exec)
        }));
    }
    if spec_ok {
        report.push(suite("soundness-bridge", || {
            concrete::soundness_bridge(
                "model",
                spec,
                &env,
                cfg.trials,
                cfg.n_max,
                BridgeForms {
                    commutative: spec.has_commutative_hypotheses(),
                },
                cfg.seed,
                cfg.exec,
            )
        }));
    }
    let rings = [model.ring];
    report.push(suite("delta-identities", || {
        vec![
            concrete::delta_closed_form(&rings, cfg.trials, cfg.n_max, cfg.seed, cfg.exec),
            concrete::power_identity(&rings, cfg.trials, cfg.n_max, cfg.seed, cfg.exec),
            concrete::binomial_independence(&rings, cfg.trials, 5, cfg.n_max, cfg.seed, cfg.exec),
        ]
    }));
    Ok(report)
}
