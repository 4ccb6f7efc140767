//! Closed forms for `f^n(ab)` and the brute-force distribution they are
//! checked against.

use crate::delta::DeltaOperator;
use crate::error::Result;
use crate::pair_poly::{PairPoly, PairTerm};
use crate::ring::powers;
use crate::scalar::{binomial, sign, Scalar};
use crate::spec::DerivationSpec;
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};

use num_traits::One;

/// Collected expansion together with the number of terms produced before
/// like terms were merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub poly: PairPoly,
    pub raw_terms: u64,
}

/// Fully distributes `(X1 + X2)^{⊗n}` with no reordering.
///
/// Term `k` of a raw product picks summand `i_k`, and contributes
/// `g_{i1}∘…∘g_{in}(a) · h_{i1}∘…∘h_{in}(b)`, i.e. the step
/// `f^{n+1}(ab) = f^n(ab) ⊗ f(ab)` appends on the right. Terms are generated
/// depth-first and counted as they are merged, so raw terms are never stored.
pub fn iterate_expand(spec: &DerivationSpec, n: u64) -> Expansion {
    let mut poly = PairPoly::zero();
    let mut raw_terms = 0u64;
    let mut a_word = Vec::with_capacity(n as usize);
    let mut b_word = Vec::with_capacity(n as usize);
    distribute(spec, n, &mut a_word, &mut b_word, &mut |a, b| {
        raw_terms += 1;
        poly.add_term(PairTerm::new(
            Scalar::one(),
            OpWord::new(a.iter().cloned()),
            OpWord::new(b.iter().cloned()),
        ));
    });
    Expansion { poly, raw_terms }
}

/// The uncollected list of raw product terms, in generation order.
pub fn iterate_expand_raw(spec: &DerivationSpec, n: u64) -> Vec<PairTerm> {
    let mut out = Vec::new();
    let mut a_word = Vec::new();
    let mut b_word = Vec::new();
    distribute(spec, n, &mut a_word, &mut b_word, &mut |a, b| {
        out.push(PairTerm::new(
            Scalar::one(),
            OpWord::new(a.iter().cloned()),
            OpWord::new(b.iter().cloned()),
        ));
    });
    out
}

fn distribute(
    spec: &DerivationSpec,
    remaining: u64,
    a_word: &mut Vec<OpSymbol>,
    b_word: &mut Vec<OpSymbol>,
    emit: &mut dyn FnMut(&[OpSymbol], &[OpSymbol]),
) {
    if remaining == 0 {
        emit(a_word, b_word);
        return;
    }
    for (g, h) in &spec.summands {
        a_word.push(g.clone());
        b_word.push(h.clone());
        distribute(spec, remaining - 1, a_word, b_word, emit);
        a_word.pop();
        b_word.pop();
    }
}

/// `Σ_k C(n,k) g1^{n−k}∘g2^k(a) · h1^{n−k}∘h2^k(b)`.
///
/// Requires `[g1, g2] = [h1, h2] = 0` to be declared. Words are returned in
/// this grouped form, not sorted by name; compare against other expansions
/// through [`PairPoly::normalize_commutative`].
pub fn leibniz_commutative(spec: &DerivationSpec, n: u64) -> Result<PairPoly> {
    spec.hyp.require(spec.g1(), spec.g2())?;
    spec.hyp.require(spec.h1(), spec.h2())?;
    Ok(grouped_binomial_sum(spec, n))
}

fn grouped_binomial_sum(spec: &DerivationSpec, n: u64) -> PairPoly {
    let mut out = PairPoly::zero();
    for k in 0..=n {
        let rest = (n - k) as usize;
        let a_word = OpWord::power(spec.g1(), rest).compose(&OpWord::power(spec.g2(), k as usize));
        let b_word = OpWord::power(spec.h1(), rest).compose(&OpWord::power(spec.h2(), k as usize));
        out.add_term(PairTerm::new(binomial(n, k), a_word, b_word));
    }
    out
}

/// The spec of a `(σ,τ)`-derivation `d(ab) = d(a)σ(b) + τ(a)d(b)`.
pub fn sigma_tau_spec(
    d: &OpSymbol,
    sigma: &OpSymbol,
    tau: &OpSymbol,
    hyp: &CommutationHypotheses,
) -> DerivationSpec {
    DerivationSpec::new(
        d.clone(),
        (d.clone(), sigma.clone()),
        (tau.clone(), d.clone()),
        hyp.clone(),
    )
}

/// `d^n(ab) = Σ_k C(n,k) d^{n−k}τ^k(a) · σ^{n−k}d^k(b)` under `[τ,d] = [σ,d] = 0`.
pub fn sigma_tau_leibniz(
    d: &OpSymbol,
    sigma: &OpSymbol,
    tau: &OpSymbol,
    hyp: &CommutationHypotheses,
    n: u64,
) -> Result<PairPoly> {
    leibniz_commutative(&sigma_tau_spec(d, sigma, tau, hyp), n)
}

/// The spec of a generalized `(σ,τ)`-derivation `Δ(ab) = Δ(a)σ(b) + τ(a)d(b)`.
pub fn generalized_sigma_tau_spec(
    big_delta: &OpSymbol,
    d: &OpSymbol,
    sigma: &OpSymbol,
    tau: &OpSymbol,
    hyp: &CommutationHypotheses,
) -> DerivationSpec {
    DerivationSpec::new(
        big_delta.clone(),
        (big_delta.clone(), sigma.clone()),
        (tau.clone(), d.clone()),
        hyp.clone(),
    )
}

/// `Δ^n(ab) = Σ_k C(n,k) Δ^{n−k}τ^k(a) · σ^{n−k}d^k(b)` under `[τ,Δ] = [σ,d] = 0`.
pub fn generalized_sigma_tau_leibniz(
    big_delta: &OpSymbol,
    d: &OpSymbol,
    sigma: &OpSymbol,
    tau: &OpSymbol,
    hyp: &CommutationHypotheses,
    n: u64,
) -> Result<PairPoly> {
    leibniz_commutative(&generalized_sigma_tau_spec(big_delta, d, sigma, tau, hyp), n)
}

/// The spec of a ternary derivation `d1(ab) = d2(a)b + a·d3(b)`.
pub fn ternary_spec(d1: &OpSymbol, d2: &OpSymbol, d3: &OpSymbol) -> DerivationSpec {
    DerivationSpec::new(
        d1.clone(),
        (d2.clone(), OpSymbol::identity()),
        (OpSymbol::identity(), d3.clone()),
        CommutationHypotheses::new(),
    )
}

/// `d1^n(ab) = Σ_k C(n,k) d2^{n−k}(a) · d3^k(b)`; no hypotheses needed.
pub fn ternary_leibniz(d1: &OpSymbol, d2: &OpSymbol, d3: &OpSymbol, n: u64) -> PairPoly {
    grouped_binomial_sum(&ternary_spec(d1, d2, d3), n)
}

/// `f^n(ab) = Σ_k C(n,k) δ^{n−k}(1⊗) ⊗ X2^k` with `δ = δ_{X1+X2, X2}` acting
/// on the ⊗-ring. Valid for every spec, commuting or not.
pub fn general_leibniz_noncommutative(spec: &DerivationSpec, n: u64) -> PairPoly {
    let x2 = spec.summand(1);
    let delta = DeltaOperator::new(spec.defining_sum(), x2.clone());
    let iterates = delta.iterates(&PairPoly::otimes_identity(), n);
    let x2_pows = powers(&x2, n);
    let mut out = PairPoly::zero();
    for k in 0..=n {
        let term = iterates[(n - k) as usize].pair_otimes(&x2_pows[k as usize]);
        out = out.pair_add(&term.scalar_mul(&binomial(n, k)));
    }
    out
}

/// The expanded double-sum form
/// `Σ_k Σ_{j≤n−k} C(n,k) C(n−k,j) (−1)^j (X1+X2)^{n−k−j} ⊗ X2^{j+k}`.
pub fn general_leibniz_double_sum(spec: &DerivationSpec, n: u64) -> PairPoly {
    let sum_pows = powers(&spec.defining_sum(), n);
    let x2_pows = powers(&spec.summand(1), n);
    let mut out = PairPoly::zero();
    for k in 0..=n {
        for j in 0..=(n - k) {
            let coeff = binomial(n, k) * binomial(n - k, j) * sign(j);
            let term = sum_pows[(n - k - j) as usize].pair_otimes(&x2_pows[(j + k) as usize]);
            out = out.pair_add(&term.scalar_mul(&coeff));
        }
    }
    out
}
