//! Identity checks on concrete rings and catalog models.

use super::random::case_rng;
use super::report::{expect_eq, CheckReport, Counterexample};
use crate::delta::{noncomm_binomial, noncomm_binomial_via_delta, power_via_delta, DeltaOperator};
use crate::expansions::{general_leibniz_noncommutative, iterate_expand, leibniz_commutative};
use crate::models::{ConcreteRing, Element, MapEnv, Sampler};
use crate::pair_poly::PairPoly;
use crate::par::Execution;
use crate::ring::Ring;
use crate::spec::DerivationSpec;

const TAG_DELTA: u64 = 20;
const TAG_POWER: u64 = 21;
const TAG_BINOMIAL: u64 = 22;
const TAG_BRIDGE: u64 = 23;

fn named(items: &[(&str, &Element)]) -> Vec<(String, String)> {
    items.iter().map(|(n, e)| (n.to_string(), e.to_string())).collect()
}

fn ring_list(rings: &[ConcreteRing]) -> String {
    rings.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

/// Case `i` draws from `rings[i % rings.len()]`.
pub fn delta_closed_form(
    rings: &[ConcreteRing],
    cases: usize,
    n_max: u64,
    seed: u64,
    exec: Execution,
) -> CheckReport {
    let sampler = Sampler::default();
    let name = format!("delta closed form = iterated delta, n <= {n_max} [{}]", ring_list(rings));
    CheckReport::run(name, cases, exec, |i| {
        let ring = rings[i % rings.len()];
        let mut rng = case_rng(seed, TAG_DELTA, i);
        let b1 = ring.random(&mut rng, &sampler);
        let b2 = ring.random(&mut rng, &sampler);
        let x = ring.random(&mut rng, &sampler);
        let delta = DeltaOperator::new(b1.clone(), b2.clone());
        let iterates = delta.iterates(&x, n_max);
        for n in 0..=n_max {
            expect_eq(&delta.power_closed(&x, n), &iterates[n as usize], || {
                let mut v = named(&[("b1", &b1), ("b2", &b2), ("x", &x)]);
                v.push(("n".into(), n.to_string()));
                v
            })?;
        }
        Ok(())
    })
}

/// `Σ C(n,k) δ_{a,b}^{n−k}(1) b^k = a^n`.
pub fn power_identity(
    rings: &[ConcreteRing],
    cases: usize,
    n_max: u64,
    seed: u64,
    exec: Execution,
) -> CheckReport {
    let sampler = Sampler::default();
    let name = format!("a^n via delta powers, n <= {n_max} [{}]", ring_list(rings));
    CheckReport::run(name, cases, exec, |i| {
        let ring = rings[i % rings.len()];
        let mut rng = case_rng(seed, TAG_POWER, i);
        let a = ring.random(&mut rng, &sampler);
        let b = ring.random(&mut rng, &sampler);
        for n in 0..=n_max {
            expect_eq(&power_via_delta(&a, &b, n), &a.pow(n), || {
                let mut v = named(&[("a", &a), ("b", &b)]);
                v.push(("n".into(), n.to_string()));
                v
            })?;
        }
        Ok(())
    })
}

/// `(a+b)^n` from the δ-based binomial sums, for `random_c` random `c` plus
/// `c = 0` and `c = a + b`.
pub fn binomial_independence(
    rings: &[ConcreteRing],
    cases: usize,
    random_c: usize,
    n_max: u64,
    seed: u64,
    exec: Execution,
) -> CheckReport {
    let sampler = Sampler::default();
    let name = format!(
        "(a+b)^n independent of c ({random_c} random c, c = 0, c = a+b), n <= {n_max} [{}]",
        ring_list(rings)
    );
    CheckReport::run(name, cases, exec, |i| {
        let ring = rings[i % rings.len()];
        let mut rng = case_rng(seed, TAG_BINOMIAL, i);
        let a = ring.random(&mut rng, &sampler);
        let b = ring.random(&mut rng, &sampler);
        let sum = a.add(&b);
        let mut cs: Vec<Element> = (0..random_c).map(|_| ring.random(&mut rng, &sampler)).collect();
        cs.push(ring.zero());
        cs.push(sum.clone());
        let sum_pows = crate::ring::powers(&sum, n_max);
        for c in &cs {
            for n in 0..=n_max {
                let inputs = || {
                    let mut v = named(&[("a", &a), ("b", &b), ("c", c)]);
                    v.push(("n".into(), n.to_string()));
                    v
                };
                let expected = &sum_pows[n as usize];
                expect_eq(&noncomm_binomial(&a, &b, c, n), expected, inputs)?;
                expect_eq(&noncomm_binomial_via_delta(&a, &b, c, n), expected, inputs)?;
            }
        }
        Ok(())
    })
}

/// Which symbolic expansions a soundness run evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgeForms {
    pub commutative: bool,
}

/// Evaluating each symbolic expansion of `f^n(ab)` in `env` reproduces
/// brute-force iteration of the concrete `f`, on `pairs` random `(a, b)`.
#[allow(clippy::too_many_arguments)]
pub fn soundness_bridge(
    label: &str,
    spec: &DerivationSpec,
    env: &MapEnv,
    pairs: usize,
    n_max: u64,
    forms: BridgeForms,
    seed: u64,
    exec: Execution,
) -> Vec<CheckReport> {
    let sampler = Sampler::default();
    let iterated: Vec<PairPoly> = (0..=n_max).map(|n| iterate_expand(spec, n).poly).collect();
    let noncomm: Vec<PairPoly> = (0..=n_max).map(|n| general_leibniz_noncommutative(spec, n)).collect();
    let mut forms_to_check: Vec<(String, Vec<PairPoly>)> = vec![
        (format!("{label}: iterated expansion = f^n(ab)"), iterated),
        (format!("{label}: delta closed form = f^n(ab)"), noncomm),
    ];
    if forms.commutative {
        match (0..=n_max)
            .map(|n| leibniz_commutative(spec, n))
            .collect::<crate::Result<Vec<_>>>()
        {
            Ok(polys) => forms_to_check.push((format!("{label}: binomial closed form = f^n(ab)"), polys)),
            Err(e) => {
                return vec![CheckReport::single(
                    format!("{label}: binomial closed form = f^n(ab)"),
                    Err(Counterexample::error(Vec::new(), e)),
                )]
            }
        }
    }
    forms_to_check
        .into_iter()
        .map(|(name, polys)| {
            CheckReport::run(format!("{name}, n <= {n_max}"), pairs, exec, |i| {
                let (a, b) = env.ring.random_pair(&mut case_rng(seed, TAG_BRIDGE, i), &sampler);
                for (n, p) in polys.iter().enumerate() {
                    let inputs = || {
                        let mut v = named(&[("a", &a), ("b", &b)]);
                        v.push(("n".into(), n.to_string()));
                        v
                    };
                    let symbolic = env
                        .eval_pairpoly(p, &a, &b)
                        .map_err(|e| Counterexample::error(inputs(), e))?;
                    let brute = env.brute_force_power(n as u64, &a, &b);
                    expect_eq(&symbolic, &brute, inputs)?;
                }
                Ok(())
            })
        })
        .collect()
}
