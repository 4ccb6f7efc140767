//! The formal ⊗-algebra of pair-terms `c · U(a)·V(b)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::{parse_scalar, Scalar};
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};

/// `coeff · a_word(a) · b_word(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTerm {
    pub coeff: Scalar,
    pub a_word: OpWord,
    pub b_word: OpWord,
}

impl PairTerm {
    pub fn new(coeff: Scalar, a_word: OpWord, b_word: OpWord) -> Self {
        PairTerm {
            coeff,
            a_word,
            b_word,
        }
    }

    /// `1 · g(a)·h(b)`.
    pub fn unit_pair(g: &OpSymbol, h: &OpSymbol) -> Self {
        PairTerm::new(Scalar::one(), OpWord::single(g), OpWord::single(h))
    }

    /// Term-level ⊗: coefficients multiply, each slot composes.
    pub fn otimes(&self, other: &PairTerm) -> PairTerm {
        PairTerm {
            coeff: &self.coeff * &other.coeff,
            a_word: self.a_word.compose(&other.a_word),
            b_word: self.b_word.compose(&other.b_word),
        }
    }
}

impl fmt::Display for PairTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}(a) * {}(b)", self.coeff, self.a_word, self.b_word)
    }
}

/// A finite formal sum of pair-terms with like terms collected.
///
/// Keys are `(a_word, b_word)`; zero coefficients are never stored, so two
/// polynomials are equal exactly when their canonical forms are equal.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PairPoly {
    terms: BTreeMap<(OpWord, OpWord), Scalar>,
}

impl PairPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ⊗-unit `I(a)·I(b) = ab`.
    pub fn otimes_identity() -> Self {
        Self::from_term(PairTerm::new(Scalar::one(), OpWord::empty(), OpWord::empty()))
    }

    pub fn from_term(term: PairTerm) -> Self {
        let mut p = Self::zero();
        p.add_term(term);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = PairTerm>) -> Self {
        let mut p = Self::zero();
        for t in terms {
            p.add_term(t);
        }
        p
    }

    /// Adds a term in place, dropping the key if the sum cancels.
    pub fn add_term(&mut self, term: PairTerm) {
        if term.coeff.is_zero() {
            return;
        }
        match self.terms.entry((term.a_word, term.b_word)) {
            Entry::Vacant(v) => {
                v.insert(term.coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += term.coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &PairPoly, c: &Scalar) {
        for ((u, v), coeff) in &other.terms {
            self.add_term(PairTerm::new(coeff * c, u.clone(), v.clone()));
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = PairTerm> + '_ {
        self.terms
            .iter()
            .map(|((u, v), c)| PairTerm::new(c.clone(), u.clone(), v.clone()))
    }

    pub fn coeff(&self, a_word: &OpWord, b_word: &OpWord) -> Scalar {
        self.terms
            .get(&(a_word.clone(), b_word.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coefficient_sum(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, c| acc + c)
    }

    pub fn pair_add(&self, other: &PairPoly) -> PairPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn negate(&self) -> PairPoly {
        self.scalar_mul(&-Scalar::one())
    }

    pub fn scalar_mul(&self, c: &Scalar) -> PairPoly {
        if c.is_zero() {
            return PairPoly::zero();
        }
        PairPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Bilinear extension of the term-level ⊗.
    pub fn pair_otimes(&self, other: &PairPoly) -> PairPoly {
        let mut out = PairPoly::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                out.add_term(PairTerm::new(c1 * c2, u1.compose(u2), v1.compose(v2)));
            }
        }
        out
    }

    /// n-fold ⊗ power; the zeroth power is the ⊗-unit.
    pub fn otimes_pow(&self, n: u64) -> PairPoly {
        let mut acc = PairPoly::otimes_identity();
        for _ in 0..n {
            acc = acc.pair_otimes(self);
        }
        acc
    }

    /// Sorts every word by symbol name, which is only sound when all symbols
    /// sharing a word pairwise commute under `hyp`.
    pub fn normalize_commutative(&self, hyp: &CommutationHypotheses) -> Result<PairPoly> {
        let mut out = PairPoly::zero();
        for ((u, v), c) in &self.terms {
            check_commuting(u, hyp)?;
            check_commuting(v, hyp)?;
            out.add_term(PairTerm::new(c.clone(), u.sorted(), v.sorted()));
        }
        Ok(out)
    }

    /// Canonical text, one term per line. The empty sum prints as `0`.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        if self.is_empty() {
            out.push_str("0\n");
        }
        for t in self.terms() {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

fn check_commuting(word: &OpWord, hyp: &CommutationHypotheses) -> Result<()> {
    let symbols = word.symbols();
    for (i, s) in symbols.iter().enumerate() {
        for t in &symbols[i + 1..] {
            if !hyp.commute(s, t) {
                let (left, right) = if s < t { (s, t) } else { (t, s) };
                return Err(Error::NonCommutingWord {
                    word: word.to_string(),
                    left: left.clone(),
                    right: right.clone(),
                });
            }
        }
    }
    Ok(())
}

impl fmt::Display for PairPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for PairPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

/// Parses the canonical line format back into a polynomial. Blank lines are
/// skipped and duplicate keys are collected.
impl FromStr for PairPoly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut out = PairPoly::zero();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line == "0" {
                continue;
            }
            let parts: Vec<&str> = line.split('*').map(str::trim).collect();
            let [coeff, a_part, b_part] = parts.as_slice() else {
                return Err(Error::syntax(line_no, "expected `<coeff> * <word>(a) * <word>(b)`"));
            };
            let coeff = parse_scalar(coeff)
                .ok_or_else(|| Error::syntax(line_no, format!("bad coefficient {coeff:?}")))?;
            let a_word = parse_slot(a_part, "(a)", line_no)?;
            let b_word = parse_slot(b_part, "(b)", line_no)?;
            out.add_term(PairTerm::new(coeff, a_word, b_word));
        }
        Ok(out)
    }
}

fn parse_slot(text: &str, suffix: &str, line: usize) -> Result<OpWord> {
    let word = text
        .strip_suffix(suffix)
        .ok_or_else(|| Error::syntax(line, format!("expected a word followed by {suffix}")))?;
    OpWord::parse(word).map_err(|e| Error::syntax(line, e.to_string()))
}

impl Ring for PairPoly {
    fn add(&self, other: &Self) -> Self {
        self.pair_add(other)
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    fn mul(&self, other: &Self) -> Self {
        self.pair_otimes(other)
    }

    fn scale(&self, c: &Scalar) -> Self {
        self.scalar_mul(c)
    }

    fn zero_like(&self) -> Self {
        PairPoly::zero()
    }

    fn one_like(&self) -> Self {
        PairPoly::otimes_identity()
    }

    fn pow(&self, n: u64) -> Self {
        self.otimes_pow(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(names: &[&str]) -> OpWord {
        OpWord::from_names(names).unwrap()
    }

    fn term(c: i64, a: &[&str], b: &[&str]) -> PairTerm {
        PairTerm::new(int(c), w(a), w(b))
    }

    fn poly(terms: &[(i64, &[&str], &[&str])]) -> PairPoly {
        PairPoly::from_terms(terms.iter().map(|(c, a, b)| term(*c, a, b)))
    }

    fn sym(name: &str) -> OpSymbol {
        OpSymbol::new(name).unwrap()
    }

    #[test]
    fn otimes_composes_slots() {
        let x1 = poly(&[(1, &["g1"], &["h1"])]);
        let x2 = poly(&[(1, &["g2"], &["h2"])]);
        assert_eq!(x1.pair_otimes(&x2), poly(&[(1, &["g1", "g2"], &["h1", "h2"])]));

        let x = poly(&[(1, &["d"], &["sigma"])]);
        let y = poly(&[(1, &["tau"], &["d"])]);
        assert_eq!(x.pair_otimes(&y), poly(&[(1, &["d", "tau"], &["sigma", "d"])]));
    }

    #[test]
    fn unit_laws() {
        let one = PairPoly::otimes_identity();
        assert_eq!(one.to_canonical_string(), "1 * I(a) * I(b)\n");
        assert_eq!(one.pair_otimes(&one), one);
        assert_eq!(one.otimes_pow(5), one);
        let p = poly(&[(3, &["g1"], &[]), (-2, &["g2", "g1"], &["h1"])]);
        assert_eq!(one.pair_otimes(&p), p);
        assert_eq!(p.pair_otimes(&one), p);
    }

    #[test]
    fn powers() {
        let x1 = poly(&[(1, &["g1"], &["h1"])]);
        assert_eq!(
            x1.otimes_pow(3),
            poly(&[(1, &["g1", "g1", "g1"], &["h1", "h1", "h1"])])
        );
        assert_eq!(x1.otimes_pow(0), PairPoly::otimes_identity());
        // (2·ε(a)h2(b))^2: coefficients 2·2, words h2∘h2.
        let p = poly(&[(2, &[], &["h2"])]);
        assert_eq!(p.otimes_pow(2), poly(&[(4, &[], &["h2", "h2"])]));
    }

    #[test]
    fn linear_structure() {
        let p = poly(&[(1, &["g1"], &["h1"]), (5, &[], &["h2"])]);
        assert!(p.pair_add(&p.negate()).is_empty());
        assert!(p.scalar_mul(&int(0)).is_empty());
        let x1 = poly(&[(1, &["g1"], &["h1"])]);
        assert_eq!(x1.pair_add(&x1), poly(&[(2, &["g1"], &["h1"])]));
    }

    #[test]
    fn normalize_sorts_under_hypotheses() {
        let mut hyp = CommutationHypotheses::new();
        hyp.declare(sym("g1"), sym("g2"));
        hyp.declare(sym("h1"), sym("h2"));
        let p = poly(&[(1, &["g2", "g1"], &["h2", "h1"])]);
        assert_eq!(
            p.normalize_commutative(&hyp).unwrap(),
            poly(&[(1, &["g1", "g2"], &["h1", "h2"])])
        );
        let sorted = poly(&[(1, &["g1", "g2"], &["h1"]), (2, &["g1"], &[])]);
        assert_eq!(sorted.normalize_commutative(&hyp).unwrap(), sorted);
    }

    #[test]
    fn normalize_rejects_non_commuting() {
        let p = poly(&[(1, &["g2", "g1"], &[])]);
        let err = p.normalize_commutative(&CommutationHypotheses::new()).unwrap_err();
        assert!(matches!(err, Error::NonCommutingWord { .. }), "{err}");
    }

    #[test]
    fn canonical_text_and_parse() {
        let p = poly(&[(3, &["g1", "g2"], &["h1", "h2"]), (-1, &[], &["h2"])]);
        let text = p.to_canonical_string();
        assert_eq!(text, "-1 * I(a) * h2(b)\n3 * g1.g2(a) * h1.h2(b)\n");
        assert_eq!(text.parse::<PairPoly>().unwrap(), p);
        assert_eq!(PairPoly::zero().to_canonical_string(), "0\n");
        assert!("0\n".parse::<PairPoly>().unwrap().is_empty());
        assert!("3 * g1(a)".parse::<PairPoly>().is_err());
        assert!("x * g1(a) * I(b)".parse::<PairPoly>().is_err());
    }
}
