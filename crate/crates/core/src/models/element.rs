//! The two concrete algebra families and their elements.

use std::fmt;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use super::matrix::RationalMatrix;
use super::poly::TruncPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::{int, parse_scalar, Scalar};

pub const MATRIX_DIMS: std::ops::RangeInclusive<usize> = 2..=6;
pub const TRUNCATION_DEGREES: std::ops::RangeInclusive<usize> = 2..=12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConcreteRing {
    /// `dim × dim` rational matrices.
    Matrix(usize),
    /// `Q[x]/(x^m)`.
    PolyTrunc(usize),
}

/// How random elements are drawn: integer entries in `[-range, range]`, each
/// nonzero with probability `density`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sampler {
    pub range: i64,
    pub density: f64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler {
            range: 3,
            density: 1.0,
        }
    }
}

impl Sampler {
    fn entry(&self, rng: &mut ChaCha8Rng) -> Scalar {
        if self.density < 1.0 && !rng.gen_bool(self.density.clamp(0.0, 1.0)) {
            return int(0);
        }
        int(rng.gen_range(-self.range..=self.range))
    }
}

impl ConcreteRing {
    pub fn matrix(dim: usize) -> Result<Self> {
        if MATRIX_DIMS.contains(&dim) {
            Ok(ConcreteRing::Matrix(dim))
        } else {
            Err(Error::Model(format!("matrix dimension must be in 2..=6, got {dim}")))
        }
    }

    pub fn poly_trunc(modulus: usize) -> Result<Self> {
        if TRUNCATION_DEGREES.contains(&modulus) {
            Ok(ConcreteRing::PolyTrunc(modulus))
        } else {
            Err(Error::Model(format!("truncation degree must be in 2..=12, got {modulus}")))
        }
    }

    pub fn zero(&self) -> Element {
        match *self {
            ConcreteRing::Matrix(n) => Element::Matrix(RationalMatrix::zero(n)),
            ConcreteRing::PolyTrunc(m) => Element::Poly(TruncPoly::zero(m)),
        }
    }

    pub fn one(&self) -> Element {
        match *self {
            ConcreteRing::Matrix(n) => Element::Matrix(RationalMatrix::identity(n)),
            ConcreteRing::PolyTrunc(m) => Element::Poly(TruncPoly::one(m)),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.ring() == *self
    }

    /// Rational-linear basis: matrix units or monomials.
    pub fn basis(&self) -> Vec<Element> {
        match *self {
            ConcreteRing::Matrix(n) => (0..n)
                .flat_map(|i| (0..n).map(move |j| Element::Matrix(RationalMatrix::unit(n, i, j))))
                .collect(),
            ConcreteRing::PolyTrunc(m) => {
                (0..m).map(|k| Element::Poly(TruncPoly::monomial(m, k))).collect()
            }
        }
    }

    /// Basis pairs `(e, e')` used for exhaustive bilinear checks. For
    /// truncated polynomials only product-safe pairs are kept, see
    /// [`ConcreteRing::random_pair`].
    pub fn basis_pairs(&self) -> Vec<(Element, Element)> {
        let basis = self.basis();
        let mut out = Vec::new();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                if let ConcreteRing::PolyTrunc(m) = *self {
                    if i + j >= m {
                        continue;
                    }
                }
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    pub fn random(&self, rng: &mut ChaCha8Rng, sampler: &Sampler) -> Element {
        match *self {
            ConcreteRing::Matrix(n) => {
                Element::Matrix(RationalMatrix::from_fn(n, |_, _| sampler.entry(rng)))
            }
            ConcreteRing::PolyTrunc(m) => Element::Poly(random_poly(m, m, rng, sampler)),
        }
    }

    /// A random `(a, b)` pair for checking identities about `f(ab)`.
    ///
    /// In `Q[x]/(x^m)` both factors have degree at most `(m−1)/2`, so `a·b`
    /// never wraps past `x^m`. Degree-lowering maps such as `d/dx` are only
    /// derivations of the quotient on such products.
    pub fn random_pair(&self, rng: &mut ChaCha8Rng, sampler: &Sampler) -> (Element, Element) {
        match *self {
            ConcreteRing::Matrix(_) => (self.random(rng, sampler), self.random(rng, sampler)),
            ConcreteRing::PolyTrunc(m) => {
                let terms = (m - 1) / 2 + 1;
                (
                    Element::Poly(random_poly(m, terms, rng, sampler)),
                    Element::Poly(random_poly(m, terms, rng, sampler)),
                )
            }
        }
    }

    /// Parses an element literal: `[[1,2],[3,4]]` for matrices (row-major)
    /// or `[c0,c1,…]` for truncated polynomials (lowest degree first).
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let value = parse_nested(text)?;
        match (*self, value) {
            (ConcreteRing::Matrix(n), Nested::List(rows)) => {
                if rows.len() != n {
                    return Err(Error::Model(format!("expected {n} rows, found {}", rows.len())));
                }
                let mut out = Vec::with_capacity(n);
                for row in rows {
                    let Nested::List(cells) = row else {
                        return Err(Error::Model("matrix rows must be bracketed lists".into()));
                    };
                    if cells.len() != n {
                        return Err(Error::Model(format!(
                            "expected {n} entries per row, found {}",
                            cells.len()
                        )));
                    }
                    out.push(
                        cells
                            .into_iter()
                            .map(|c| match c {
                                Nested::Scalar(s) => Ok(s),
                                Nested::List(_) => {
                                    Err(Error::Model("matrix entries must be numbers".into()))
                                }
                            })
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                Ok(Element::Matrix(RationalMatrix::from_rows(out)))
            }
            (ConcreteRing::PolyTrunc(m), Nested::List(cells)) => {
                if cells.len() > m {
                    return Err(Error::Model(format!(
                        "at most {m} coefficients allowed, found {}",
                        cells.len()
                    )));
                }
                let coeffs = cells
                    .into_iter()
                    .map(|c| match c {
                        Nested::Scalar(s) => Ok(s),
                        Nested::List(_) => {
                            Err(Error::Model("polynomial coefficients must be numbers".into()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Element::Poly(TruncPoly::from_coeffs(m, coeffs)))
            }
            (_, Nested::Scalar(_)) => Err(Error::Model("element literals must be bracketed".into())),
        }
    }
}

fn random_poly(modulus: usize, terms: usize, rng: &mut ChaCha8Rng, sampler: &Sampler) -> TruncPoly {
    let coeffs = (0..terms).map(|_| sampler.entry(rng)).collect();
    TruncPoly::from_coeffs(modulus, coeffs)
}

impl fmt::Display for ConcreteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConcreteRing::Matrix(n) => write!(f, "matrix {n}"),
            ConcreteRing::PolyTrunc(m) => write!(f, "polytrunc {m}"),
        }
    }
}

enum Nested {
    Scalar(Scalar),
    List(Vec<Nested>),
}

fn parse_nested(text: &str) -> Result<Nested> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let value = parse_value(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::Model(format!("trailing input in literal {text:?}")));
    }
    Ok(value)
}

fn parse_value(chars: &[char], pos: &mut usize) -> Result<Nested> {
    if chars.get(*pos) == Some(&'[') {
        *pos += 1;
        let mut items = Vec::new();
        if chars.get(*pos) == Some(&']') {
            *pos += 1;
            return Ok(Nested::List(items));
        }
        loop {
            items.push(parse_value(chars, pos)?);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(']') => {
                    *pos += 1;
                    return Ok(Nested::List(items));
                }
                _ => return Err(Error::Model("unbalanced brackets in literal".into())),
            }
        }
    }
    let start = *pos;
    while *pos < chars.len() && !matches!(chars[*pos], ',' | ']' | '[') {
        *pos += 1;
    }
    let token: String = chars[start..*pos].iter().collect();
    parse_scalar(&token)
        .map(Nested::Scalar)
        .ok_or_else(|| Error::Model(format!("bad number {token:?} in literal")))
}

/// An element of one of the [`ConcreteRing`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Matrix(RationalMatrix),
    Poly(TruncPoly),
}

impl Element {
    pub fn ring(&self) -> ConcreteRing {
        match self {
            Element::Matrix(m) => ConcreteRing::Matrix(m.dim()),
            Element::Poly(p) => ConcreteRing::PolyTrunc(p.modulus()),
        }
    }

    pub fn inverse(&self) -> Option<Element> {
        match self {
            Element::Matrix(m) => m.inverse().map(Element::Matrix),
            Element::Poly(p) => p.inverse().map(Element::Poly),
        }
    }

    pub fn as_poly(&self) -> Option<&TruncPoly> {
        match self {
            Element::Poly(p) => Some(p),
            Element::Matrix(_) => None,
        }
    }
}

fn mismatch(a: &Element, b: &Element) -> ! {
    panic!("mixed ring elements: {} vs {}", a.ring(), b.ring())
}

impl Ring for Element {
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.add(b)),
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.add(b)),
            _ => mismatch(self, other),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.sub(b)),
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.sub(b)),
            _ => mismatch(self, other),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.mul(b)),
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.mul(b)),
            _ => mismatch(self, other),
        }
    }

    fn scale(&self, c: &Scalar) -> Self {
        match self {
            Element::Matrix(a) => Element::Matrix(a.scale(c)),
            Element::Poly(a) => Element::Poly(a.scale(c)),
        }
    }

    fn zero_like(&self) -> Self {
        self.ring().zero()
    }

    fn one_like(&self) -> Self {
        self.ring().one()
    }
}

/// Literal syntax, the inverse of [`ConcreteRing::parse_element`].
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix(m) => {
                f.write_str("[")?;
                for (i, row) in m.rows().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write_list(f, row)?;
                }
                f.write_str("]")
            }
            Element::Poly(p) => write_list(f, p.coeffs()),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Scalar]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}
