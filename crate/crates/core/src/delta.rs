//! Inner generalized derivations `x ↦ B1·x − x·B2` over any unital ring, and
//! the binomial identities built from their powers.

use crate::ring::{powers, Ring};
use crate::scalar::{binomial, sign};

/// `δ(x) = left·x − x·right`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaOperator<R> {
    pub left: R,
    pub right: R,
}

impl<R: Ring> DeltaOperator<R> {
    pub fn new(left: R, right: R) -> Self {
        DeltaOperator { left, right }
    }

    /// The inner derivation `x ↦ b·x − x·b`.
    pub fn inner(b: R) -> Self {
        DeltaOperator::new(b.clone(), b)
    }

    pub fn apply(&self, x: &R) -> R {
        self.left.mul(x).sub(&x.mul(&self.right))
    }

    /// `δ^n(x)` by applying `δ` n times.
    pub fn power_iterated(&self, x: &R, n: u64) -> R {
        let mut acc = x.clone();
        for _ in 0..n {
            acc = self.apply(&acc);
        }
        acc
    }

    /// `[δ^0(x), δ^1(x), …, δ^n(x)]`.
    pub fn iterates(&self, x: &R, n: u64) -> Vec<R> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(x.clone());
        for i in 1..=n as usize {
            let next = self.apply(&out[i - 1]);
            out.push(next);
        }
        out
    }

    /// `δ^n(x) = Σ_k (−1)^k C(n,k) left^{n−k} · x · right^k`.
    pub fn power_closed(&self, x: &R, n: u64) -> R {
        let left = powers(&self.left, n);
        let right = powers(&self.right, n);
        let mut acc = x.zero_like();
        for k in 0..=n {
            let coeff = sign(k) * binomial(n, k);
            let term = left[(n - k) as usize].mul(x).mul(&right[k as usize]);
            acc = acc.add(&term.scale(&coeff));
        }
        acc
    }
}

/// `Σ_k C(n,k) δ_{a,b}^{n−k}(1) · b^k`, which equals `a^n` in any unital ring.
pub fn power_via_delta<R: Ring>(a: &R, b: &R, n: u64) -> R {
    let delta = DeltaOperator::new(a.clone(), b.clone());
    let iterates = delta.iterates(&a.one_like(), n);
    let b_pows = powers(b, n);
    let mut acc = a.zero_like();
    for k in 0..=n {
        let term = iterates[(n - k) as usize].mul(&b_pows[k as usize]);
        acc = acc.add(&term.scale(&binomial(n, k)));
    }
    acc
}

/// Double-sum form
/// `Σ_k Σ_{j≤n−k} C(n,k) C(n−k,j) (−1)^j (a+b)^{n−k−j} c^{j+k}`,
/// which equals `(a+b)^n` for every `c` (with `c^0 = 1`, also when `c = 0`).
pub fn noncomm_binomial<R: Ring>(a: &R, b: &R, c: &R, n: u64) -> R {
    let sum_pows = powers(&a.add(b), n);
    let c_pows = powers(c, n);
    let mut acc = a.zero_like();
    for k in 0..=n {
        for j in 0..=(n - k) {
            let coeff = binomial(n, k) * binomial(n - k, j) * sign(j);
            let term = sum_pows[(n - k - j) as usize].mul(&c_pows[(j + k) as usize]);
            acc = acc.add(&term.scale(&coeff));
        }
    }
    acc
}

/// Single-sum form `Σ_k C(n,k) δ_{a+b,c}^{n−k}(1) c^k`.
pub fn noncomm_binomial_via_delta<R: Ring>(a: &R, b: &R, c: &R, n: u64) -> R {
    power_via_delta(&a.add(b), c, n)
}
