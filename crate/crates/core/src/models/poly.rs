use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Element of `Q[x]/(x^m)`: coefficients of `1, x, …, x^{m−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    coeffs: Vec<Scalar>,
}

impl TruncPoly {
    pub fn zero(modulus: usize) -> Self {
        TruncPoly {
            coeffs: vec![Scalar::zero(); modulus],
        }
    }

    pub fn one(modulus: usize) -> Self {
        Self::monomial(modulus, 0)
    }

    /// `x^k`, which is zero when `k ≥ m`.
    pub fn monomial(modulus: usize, k: usize) -> Self {
        let mut p = Self::zero(modulus);
        if k < modulus {
            p.coeffs[k] = Scalar::one();
        }
        p
    }

    /// Pads or truncates `coeffs` to length `modulus`.
    pub fn from_coeffs(modulus: usize, mut coeffs: Vec<Scalar>) -> Self {
        coeffs.resize(modulus, Scalar::zero());
        TruncPoly { coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Degree of the stored representative; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus(), other.modulus(), "truncation degree mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        TruncPoly {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        TruncPoly {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    /// Product modulo `x^m`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let m = self.modulus();
        let mut out = vec![Scalar::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncPoly { coeffs: out }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal `d/dx`; the top coefficient's derivative lands in degree `m−2`.
    pub fn derivative(&self) -> Self {
        let m = self.modulus();
        let mut out = vec![Scalar::zero(); m];
        for k in 1..m {
            out[k - 1] = &self.coeffs[k] * Scalar::from_integer(k.into());
        }
        TruncPoly { coeffs: out }
    }

    /// Power-series inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let m = self.modulus();
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let mut inv = vec![Scalar::zero(); m];
        inv[0] = Scalar::one() / &c0;
        for k in 1..m {
            let mut acc = Scalar::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc / &c0;
        }
        Some(TruncPoly { coeffs: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(m: usize, c: &[i64]) -> TruncPoly {
        TruncPoly::from_coeffs(m, c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn truncated_product() {
        // (1 + x)(1 + x^2) = 1 + x + x^2 + x^3, cut at x^3.
        assert_eq!(p(3, &[1, 1]).mul(&p(3, &[1, 0, 1])), p(3, &[1, 1, 1]));
        assert_eq!(TruncPoly::monomial(4, 2).mul(&TruncPoly::monomial(4, 2)), TruncPoly::zero(4));
    }

    #[test]
    fn derivative_of_fifth_power() {
        let x5 = TruncPoly::monomial(6, 5);
        assert_eq!(x5.derivative().derivative(), p(6, &[0, 0, 0, 20]));
    }

    #[test]
    fn series_inverse() {
        let u = p(5, &[2, 1, 0, 3]);
        assert_eq!(u.mul(&u.inverse().unwrap()), TruncPoly::one(5));
        assert!(p(5, &[0, 1]).inverse().is_none());
    }
}
