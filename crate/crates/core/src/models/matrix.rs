use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Dense square matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        RationalMatrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::one();
        }
        m
    }

    /// Panics unless `rows` is square and non-empty.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let dim = rows.len();
        assert!(dim > 0, "empty matrix");
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        RationalMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { dim, entries }
    }

    /// The matrix unit `E_ij`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(dim);
        m.entries[i * dim + j] = Scalar::one();
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.dim;
        let mut entries = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        RationalMatrix { dim: n, entries }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut work: Vec<Vec<Scalar>> = self.rows().map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<Scalar>> = RationalMatrix::identity(n).rows().map(|r| r.to_vec()).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            let p = work[col][col].clone();
            for j in 0..n {
                work[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for j in 0..n {
                    let w = &work[col][j] * &factor;
                    work[r][j] -= w;
                    let v = &inv[col][j] * &factor;
                    inv[r][j] -= v;
                }
            }
        }
        Some(RationalMatrix::from_rows(inv))
    }
}
