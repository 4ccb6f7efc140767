//! The unital-ring interface shared by the ⊗-ring and the concrete algebras.

use std::fmt::Debug;

use crate::scalar::Scalar;

/// An associative unital ring with exact equality.
///
/// Elements know enough about their ring (matrix size, truncation degree) to
/// produce its zero and unit, so no separate ring handle is needed. Mixing
/// elements of different rings is a caller bug and panics.
pub trait Ring: Clone + PartialEq + Debug {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    /// `self^n` by repeated multiplication, `self^0` being the unit.
    fn pow(&self, n: u64) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn is_zero(&self) -> bool {
        *self == self.zero_like()
    }
}

/// `[x^0, x^1, …, x^n]`.
pub fn powers<R: Ring>(x: &R, n: u64) -> Vec<R> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(x.one_like());
    for i in 1..=n as usize {
        let next = out[i - 1].mul(x);
        out.push(next);
    }
    out
}
