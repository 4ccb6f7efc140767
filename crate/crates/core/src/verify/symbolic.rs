//! Identity checks inside the formal ⊗-ring.

use num_traits::{One, Zero};

use super::random::{case_rng, full_hypotheses, random_commuting_spec, random_pairpoly, random_spec};
use super::report::{expect_eq, CaseOutcome, CheckReport, Counterexample};
use crate::delta::DeltaOperator;
use crate::expansions::{
    general_leibniz_double_sum, general_leibniz_noncommutative, generalized_sigma_tau_leibniz,
    generalized_sigma_tau_spec, iterate_expand, leibniz_commutative, sigma_tau_leibniz,
    sigma_tau_spec, ternary_leibniz, ternary_spec,
};
use crate::pair_poly::PairPoly;
use crate::par::Execution;
use crate::scalar::{binomial, int, Scalar};
use crate::spec::DerivationSpec;
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};

const TAG_LAWS: u64 = 10;
const TAG_NONCOMM: u64 = 11;
const TAG_COLLAPSE: u64 = 12;
const TAG_DELTA_SYM: u64 = 13;
const TAG_NORMALIZE: u64 = 14;

fn poly_inputs(named: &[(&str, &PairPoly)]) -> Vec<(String, String)> {
    named
        .iter()
        .map(|(n, p)| (n.to_string(), format!("{p:?}")))
        .collect()
}

fn spec_inputs(spec: &DerivationSpec, n: u64) -> Vec<(String, String)> {
    vec![
        ("spec".into(), spec.to_string().trim_end().replace('\n', "; ")),
        ("n".into(), n.to_string()),
    ]
}

/// Associativity, two-sided distributivity and the unit law on random
/// pair-polynomials (≤ 6 terms, words ≤ 4, alphabet ≤ 4).
pub fn ring_laws(cases: usize, seed: u64, exec: Execution) -> Vec<CheckReport> {
    let draw = |i: usize| {
        let mut rng = case_rng(seed, TAG_LAWS, i);
        let p = random_pairpoly(&mut rng, 6, 4, 4);
        let q = random_pairpoly(&mut rng, 6, 4, 4);
        let r = random_pairpoly(&mut rng, 6, 4, 4);
        (p, q, r)
    };
    let one = PairPoly::otimes_identity();
    vec![
        CheckReport::run("otimes associativity", cases, exec, |i| {
            let (p, q, r) = draw(i);
            expect_eq(
                &p.pair_otimes(&q).pair_otimes(&r),
                &p.pair_otimes(&q.pair_otimes(&r)),
                || poly_inputs(&[("p", &p), ("q", &q), ("r", &r)]),
            )
        }),
        CheckReport::run("left distributivity", cases, exec, |i| {
            let (p, q, r) = draw(i);
            expect_eq(
                &p.pair_add(&q).pair_otimes(&r),
                &p.pair_otimes(&r).pair_add(&q.pair_otimes(&r)),
                || poly_inputs(&[("p", &p), ("q", &q), ("r", &r)]),
            )
        }),
        CheckReport::run("right distributivity", cases, exec, |i| {
            let (p, q, r) = draw(i);
            expect_eq(
                &p.pair_otimes(&q.pair_add(&r)),
                &p.pair_otimes(&q).pair_add(&p.pair_otimes(&r)),
                || poly_inputs(&[("p", &p), ("q", &q), ("r", &r)]),
            )
        }),
        CheckReport::run("two-sided unit", cases, exec, |i| {
            let (p, _, _) = draw(i);
            expect_eq(&one.pair_otimes(&p), &p, || poly_inputs(&[("p", &p)]))?;
            expect_eq(&p.pair_otimes(&one), &p, || poly_inputs(&[("p", &p)]))
        }),
    ]
}

/// `p^{m+n} = p^m ⊗ p^n` for `m, n ≤ max_exp`.
pub fn power_additivity(cases: usize, max_exp: u64, seed: u64, exec: Execution) -> CheckReport {
    CheckReport::run("otimes power additivity", cases, exec, |i| {
        let mut rng = case_rng(seed, TAG_LAWS + 100, i);
        let p = random_pairpoly(&mut rng, 2, 2, 3);
        for m in 0..=max_exp {
            for n in 0..=max_exp {
                expect_eq(
                    &p.otimes_pow(m + n),
                    &p.otimes_pow(m).pair_otimes(&p.otimes_pow(n)),
                    || {
                        let mut v = poly_inputs(&[("p", &p)]);
                        v.push(("m".into(), m.to_string()));
                        v.push(("n".into(), n.to_string()));
                        v
                    },
                )?;
            }
        }
        Ok(())
    })
}

pub fn pascal_identity(n_max: u64) -> CheckReport {
    let mut outcome = Ok(());
    'outer: for n in 1..=n_max {
        for k in 1..=n {
            let lhs = binomial(n, k) + binomial(n, k - 1);
            let rhs = binomial(n + 1, k);
            if lhs != rhs {
                outcome = Err(Counterexample::new(
                    vec![("n".into(), n.to_string()), ("k".into(), k.to_string())],
                    lhs,
                    rhs,
                ));
                break 'outer;
            }
        }
    }
    CheckReport::single(format!("Pascal identity for n <= {n_max}"), outcome)
}

/// Idempotence and coefficient-sum preservation of commutative
/// normalization, plus stable canonical text that parses back.
pub fn normalization_and_text(cases: usize, seed: u64, exec: Execution) -> Vec<CheckReport> {
    let hyp = full_hypotheses(4);
    let draw = |i: usize| random_pairpoly(&mut case_rng(seed, TAG_NORMALIZE, i), 6, 4, 4);
    vec![
        CheckReport::run("normalization idempotent", cases, exec, |i| {
            let p = draw(i);
            let once = p.normalize_commutative(&hyp).map_err(|e| Counterexample::error(poly_inputs(&[("p", &p)]), e))?;
            let twice = once.normalize_commutative(&hyp).map_err(|e| Counterexample::error(poly_inputs(&[("p", &p)]), e))?;
            expect_eq(&once, &twice, || poly_inputs(&[("p", &p)]))?;
            expect_eq(&p.coefficient_sum(), &once.coefficient_sum(), || poly_inputs(&[("p", &p)]))
        }),
        CheckReport::run("canonical text stable and parseable", cases, exec, |i| {
            let p = draw(i);
            let first = p.to_canonical_string();
            let second = p.clone().to_canonical_string();
            expect_eq(&first, &second, || poly_inputs(&[("p", &p)]))?;
            let parsed: PairPoly = first
                .parse()
                .map_err(|e| Counterexample::error(poly_inputs(&[("p", &p)]), e))?;
            expect_eq(&parsed, &p, || poly_inputs(&[("p", &p)]))
        }),
    ]
}

/// Both closed forms built from `δ_{X1+X2, X2}` agree with plain
/// distribution on `specs` random specs for every `n ≤ n_max`.
pub fn noncommutative_equivalence(specs: usize, n_max: u64, seed: u64, exec: Execution) -> Vec<CheckReport> {
    let spec_for = |i: usize| random_spec(&mut case_rng(seed, TAG_NONCOMM, i));
    vec![
        CheckReport::run(
            format!("delta single-sum form = iterated expansion, n <= {n_max}"),
            specs,
            exec,
            |i| {
                let spec = spec_for(i);
                for n in 0..=n_max {
                    let expected = iterate_expand(&spec, n).poly;
                    expect_eq(&general_leibniz_noncommutative(&spec, n), &expected, || {
                        spec_inputs(&spec, n)
                    })?;
                }
                Ok(())
            },
        ),
        CheckReport::run(
            format!("delta double-sum form = iterated expansion, n <= {n_max}"),
            specs,
            exec,
            |i| {
                let spec = spec_for(i);
                for n in 0..=n_max {
                    let expected = iterate_expand(&spec, n).poly;
                    expect_eq(&general_leibniz_double_sum(&spec, n), &expected, || {
                        spec_inputs(&spec, n)
                    })?;
                }
                Ok(())
            },
        ),
    ]
}

fn collapse_case(spec: &DerivationSpec, n: u64) -> CaseOutcome {
    let err = |e| Counterexample::error(spec_inputs(spec, n), e);
    let closed = leibniz_commutative(spec, n).map_err(err)?;
    let lhs = iterate_expand(spec, n)
        .poly
        .normalize_commutative(&spec.hyp)
        .map_err(err)?;
    let rhs = closed.normalize_commutative(&spec.hyp).map_err(err)?;
    expect_eq(&lhs, &rhs, || spec_inputs(spec, n))
}

/// Under declared `[g1,g2] = [h1,h2] = 0`, normalized plain distribution
/// equals the binomial closed form.
pub fn commutative_collapse(specs: usize, n_max: u64, seed: u64, exec: Execution) -> Vec<CheckReport> {
    let generic = DerivationSpec::from_names("f", "g1", "h1", "g2", "h2")
        .and_then(|s| s.with_commuting("g1", "g2"))
        .and_then(|s| s.with_commuting("h1", "h2"))
        .expect("generic spec");
    vec![
        CheckReport::run(
            format!("normalized expansion = binomial closed form, n <= {n_max}"),
            specs,
            exec,
            |i| {
                let spec = random_commuting_spec(&mut case_rng(seed, TAG_COLLAPSE, i));
                (0..=n_max).try_for_each(|n| collapse_case(&spec, n))
            },
        ),
        CheckReport::run(
            format!("generic commuting spec has coefficients C(n,k), n <= {n_max}"),
            n_max as usize + 1,
            exec,
            |n| {
                let n = n as u64;
                collapse_case(&generic, n)?;
                let expanded = iterate_expand(&generic, n)
                    .poly
                    .normalize_commutative(&generic.hyp)
                    .map_err(|e| Counterexample::error(spec_inputs(&generic, n), e))?;
                for k in 0..=n {
                    let a = grouped(generic.g1(), generic.g2(), n, k);
                    let b = grouped(generic.h1(), generic.h2(), n, k);
                    expect_eq(&expanded.coeff(&a, &b), &binomial(n, k), || {
                        let mut v = spec_inputs(&generic, n);
                        v.push(("k".into(), k.to_string()));
                        v
                    })?;
                }
                expect_eq(&expanded.len(), &(n as usize + 1), || spec_inputs(&generic, n))
            },
        ),
    ]
}

fn grouped(first: &OpSymbol, second: &OpSymbol, n: u64, k: u64) -> OpWord {
    OpWord::power(first, (n - k) as usize).compose(&OpWord::power(second, k as usize))
}

/// Raw term count and collected coefficient sum are both `2^n`.
pub fn term_count(specs: usize, n_max: u64, seed: u64, exec: Execution) -> CheckReport {
    CheckReport::run(format!("2^n raw terms and coefficient sum, n <= {n_max}"), specs, exec, |i| {
        let spec = random_spec(&mut case_rng(seed, TAG_NONCOMM, i));
        for n in 0..=n_max {
            let e = iterate_expand(&spec, n);
            let expected = 1u64 << n;
            expect_eq(&e.raw_terms, &expected, || spec_inputs(&spec, n))?;
            expect_eq(&e.poly.coefficient_sum(), &int(expected as i64), || spec_inputs(&spec, n))?;
        }
        Ok(())
    })
}

/// Spec `(d, I, I, d)`: the coefficient of `d^{n−k}(a)d^k(b)` is `C(n,k)`.
pub fn classical_reduction(n_max: u64) -> CheckReport {
    let spec = DerivationSpec::from_names("d", "d", "I", "I", "d").expect("classical spec");
    let d = spec.g1().clone();
    let outcome = (0..=n_max).try_for_each(|n| {
        let p = leibniz_commutative(&spec, n)
            .map_err(|e| Counterexample::error(spec_inputs(&spec, n), e))?;
        let mut total = Scalar::zero();
        for k in 0..=n {
            let c = p.coeff(&OpWord::power(&d, (n - k) as usize), &OpWord::power(&d, k as usize));
            expect_eq(&c, &binomial(n, k), || spec_inputs(&spec, n))?;
            total += c;
        }
        expect_eq(&total, &p.coefficient_sum(), || spec_inputs(&spec, n))?;
        collapse_case(&spec, n)
    });
    CheckReport::single(format!("classical Leibniz coefficients, n <= {n_max}"), outcome)
}

/// The named-family wrappers equal the general closed form on their
/// induced specs.
pub fn wrapper_consistency(n_max: u64) -> Vec<CheckReport> {
    let sym = |n: &str| OpSymbol::new(n).expect("symbol");
    let (d, sigma, tau, big) = (sym("d"), sym("sigma"), sym("tau"), sym("Delta"));
    let mut st_hyp = CommutationHypotheses::new();
    st_hyp.declare(tau.clone(), d.clone());
    st_hyp.declare(sigma.clone(), d.clone());
    let mut gen_hyp = CommutationHypotheses::new();
    gen_hyp.declare(tau.clone(), big.clone());
    gen_hyp.declare(sigma.clone(), d.clone());
    let (d1, d2, d3) = (sym("d1"), sym("d2"), sym("d3"));

    let st_spec = sigma_tau_spec(&d, &sigma, &tau, &st_hyp);
    let gen_spec = generalized_sigma_tau_spec(&big, &d, &sigma, &tau, &gen_hyp);
    let ter_spec = ternary_spec(&d1, &d2, &d3);

    let check = |name: &str, spec: &DerivationSpec, f: &dyn Fn(u64) -> crate::Result<PairPoly>| {
        let outcome = (0..=n_max).try_for_each(|n| {
            let err = |e| Counterexample::error(spec_inputs(spec, n), e);
            let wrapped = f(n).map_err(err)?;
            let general = leibniz_commutative(spec, n).map_err(err)?;
            expect_eq(&wrapped, &general, || spec_inputs(spec, n))?;
            // The wrapper also agrees with plain distribution once normalized.
            let normalized = wrapped.normalize_commutative(&spec.hyp).map_err(err)?;
            let brute = iterate_expand(spec, n).poly.normalize_commutative(&spec.hyp).map_err(err)?;
            expect_eq(&normalized, &brute, || spec_inputs(spec, n))
        });
        CheckReport::single(format!("{name} wrapper, n <= {n_max}"), outcome)
    };
    vec![
        check("(sigma,tau)-derivation", &st_spec, &|n| {
            sigma_tau_leibniz(&d, &sigma, &tau, &st_hyp, n)
        }),
        check("generalized (sigma,tau)-derivation", &gen_spec, &|n| {
            generalized_sigma_tau_leibniz(&big, &d, &sigma, &tau, &gen_hyp, n)
        }),
        check("ternary derivation", &ter_spec, &|n| Ok(ternary_leibniz(&d1, &d2, &d3, n))),
    ]
}

/// Closed-form `δ^n` equals n-fold application inside the ⊗-ring.
pub fn delta_closed_form_symbolic(cases: usize, n_max: u64, seed: u64, exec: Execution) -> CheckReport {
    CheckReport::run(format!("delta closed form in the otimes-ring, n <= {n_max}"), cases, exec, |i| {
        let mut rng = case_rng(seed, TAG_DELTA_SYM, i);
        let b1 = random_pairpoly(&mut rng, 2, 2, 3);
        let b2 = random_pairpoly(&mut rng, 2, 2, 3);
        let x = random_pairpoly(&mut rng, 2, 2, 3);
        let delta = DeltaOperator::new(b1.clone(), b2.clone());
        let iterates = delta.iterates(&x, n_max);
        for n in 0..=n_max {
            expect_eq(&delta.power_closed(&x, n), &iterates[n as usize], || {
                let mut v = poly_inputs(&[("b1", &b1), ("b2", &b2), ("x", &x)]);
                v.push(("n".into(), n.to_string()));
                v
            })?;
        }
        Ok(())
    })
}

/// `δ_{1⊗,1⊗}` is zero and `δ_{B,0}` is left multiplication, as sanity
/// anchors for the ⊗-ring instance.
pub fn delta_degenerate_cases() -> CheckReport {
    let one = PairPoly::otimes_identity();
    let x = "2 * p(a) * q(b)\n-1 * I(a) * r(b)\n".parse::<PairPoly>().expect("literal");
    let commutator = DeltaOperator::inner(one.clone());
    let left = DeltaOperator::new(x.clone(), PairPoly::zero());
    let outcome = expect_eq(&commutator.apply(&x), &PairPoly::zero(), Vec::new)
        .and_then(|_| expect_eq(&left.power_closed(&one, 3), &x.otimes_pow(3), Vec::new))
        .and_then(|_| {
            let unit_eval = DeltaOperator::new(x.clone(), one.clone()).apply(&one);
            expect_eq(&unit_eval, &x.pair_add(&one.scalar_mul(&-Scalar::one())), Vec::new)
        });
    CheckReport::single("delta degenerate cases in the otimes-ring", outcome)
}
