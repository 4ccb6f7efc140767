//! Sample-based checks that a concrete environment really satisfies a spec.

use super::element::{Element, Sampler};
use super::env::MapEnv;
use crate::expansions::iterate_expand;
use crate::par::Execution;
use crate::spec::DerivationSpec;
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};
use crate::verify::random::case_rng;
use crate::verify::report::{CheckReport, Counterexample};

const TAG_SPEC: u64 = 1;
const TAG_COMMUTE: u64 = 2;

/// How many sample points a validator uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trials {
    Random(usize),
    /// Every basis element (or basis pair, for bilinear checks). Exact for
    /// linear maps.
    ExhaustiveBasis,
}

/// Checks `f(ab) = g1(a)h1(b) + g2(a)h2(b)` on sampled pairs. `env` must
/// already be bound to `spec` (see [`MapEnv::bind`]).
pub fn validate_spec(
    spec: &DerivationSpec,
    env: &MapEnv,
    trials: Trials,
    seed: u64,
    sampler: &Sampler,
    exec: Execution,
) -> CheckReport {
    let rhs_poly = iterate_expand(spec, 1).poly;
    let name = format!("defining identity of {}", spec.f_name);
    let basis_pairs = match trials {
        Trials::ExhaustiveBasis => Some(env.ring.basis_pairs()),
        Trials::Random(_) => None,
    };
    let count = match (&basis_pairs, trials) {
        (Some(p), _) => p.len(),
        (None, Trials::Random(n)) => n,
        (None, Trials::ExhaustiveBasis) => unreachable!(),
    };
    CheckReport::run(name, count, exec, |i| {
        let (a, b) = match &basis_pairs {
            Some(pairs) => pairs[i].clone(),
            None => env.ring.random_pair(&mut case_rng(seed, TAG_SPEC, i), sampler),
        };
        let inputs = || vec![("a".to_string(), a.to_string()), ("b".to_string(), b.to_string())];
        let lhs = env.brute_force_power(1, &a, &b);
        let rhs = env
            .eval_pairpoly(&rhs_poly, &a, &b)
            .map_err(|e| Counterexample::error(inputs(), e))?;
        if lhs == rhs {
            Ok(())
        } else {
            Err(Counterexample::new(inputs(), lhs, rhs)
                .with_note(format!("{}(a*b) differs from the summand sum", spec.f_name)))
        }
    })
}

/// Checks `S(T(x)) = T(S(x))` for every declared pair, one report per pair.
pub fn validate_commutation(
    hyp: &CommutationHypotheses,
    env: &MapEnv,
    trials: Trials,
    seed: u64,
    sampler: &Sampler,
    exec: Execution,
) -> Vec<CheckReport> {
    let points: Option<Vec<Element>> = match trials {
        Trials::ExhaustiveBasis => Some(env.ring.basis()),
        Trials::Random(_) => None,
    };
    hyp.pairs()
        .enumerate()
        .map(|(pair_idx, (s, t))| {
            let count = match (&points, trials) {
                (Some(p), _) => p.len(),
                (None, Trials::Random(n)) => n,
                (None, Trials::ExhaustiveBasis) => unreachable!(),
            };
            let st = OpWord::new([s.clone(), t.clone()]);
            let ts = OpWord::new([t.clone(), s.clone()]);
            CheckReport::run(format!("[{s}, {t}] = 0"), count, exec, |i| {
                let x = match &points {
                    Some(p) => p[i].clone(),
                    None => {
                        let stream = (pair_idx as u64) << 20 | i as u64;
                        env.ring.random(&mut case_rng(seed, TAG_COMMUTE, stream as usize), sampler)
                    }
                };
                let inputs = || vec![("x".to_string(), x.to_string())];
                let lhs = env.eval_word(&st, &x).map_err(|e| Counterexample::error(inputs(), e))?;
                let rhs = env.eval_word(&ts, &x).map_err(|e| Counterexample::error(inputs(), e))?;
                if lhs == rhs {
                    Ok(())
                } else {
                    Err(Counterexample::new(inputs(), lhs, rhs)
                        .with_note(format!("{s}({t}(x)) != {t}({s}(x))")))
                }
            })
        })
        .collect()
}

/// Convenience for the common `(s, t)` single-pair case.
pub fn commutes_on_samples(env: &MapEnv, s: &OpSymbol, t: &OpSymbol, trials: usize, seed: u64) -> bool {
    let hyp = CommutationHypotheses::from_pairs([(s, t)]);
    validate_commutation(&hyp, env, Trials::Random(trials), seed, &Sampler::default(), Execution::Sequential)
        .iter()
        .all(CheckReport::passed)
}
