//! Operator symbols, composition words and commutation hypotheses.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Name of the distinguished identity mapping.
pub const IDENTITY: &str = "I";

/// A named mapping `A → A`, e.g. `g1`, `sigma`, `d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpSymbol(Arc<str>);

impl OpSymbol {
    /// Identifiers are non-empty runs of letters, digits and `_` that do not
    /// start with a digit.
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(OpSymbol(Arc::from(name)))
        } else {
            Err(Error::InvalidSymbol(name.to_string()))
        }
    }

    pub fn identity() -> Self {
        OpSymbol(Arc::from(IDENTITY))
    }

    pub fn is_identity(&self) -> bool {
        &*self.0 == IDENTITY
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A composition `s1∘s2∘…∘sm`: `s_m` is applied first, `s1` last.
///
/// The empty word is the identity mapping; `I` never appears inside a word.
/// Ordering is lexicographic by symbol name with prefixes first, which gives
/// the canonical display order of [`crate::PairPoly`].
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpWord(Vec<OpSymbol>);

impl OpWord {
    pub fn empty() -> Self {
        OpWord(Vec::new())
    }

    pub fn new(symbols: impl IntoIterator<Item = OpSymbol>) -> Self {
        OpWord(symbols.into_iter().filter(|s| !s.is_identity()).collect())
    }

    pub fn single(symbol: &OpSymbol) -> Self {
        OpWord::new([symbol.clone()])
    }

    /// `symbol` composed with itself `times` times.
    pub fn power(symbol: &OpSymbol, times: usize) -> Self {
        OpWord::new(std::iter::repeat_n(symbol.clone(), times))
    }

    /// Builds a word from names; for tests and parsers.
    pub fn from_names(names: &[&str]) -> Result<Self> {
        let symbols = names
            .iter()
            .map(|n| OpSymbol::new(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(OpWord::new(symbols))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OpWord) -> OpWord {
        let mut symbols = Vec::with_capacity(self.0.len() + other.0.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        OpWord(symbols)
    }

    pub fn symbols(&self) -> &[OpSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn sorted(&self) -> OpWord {
        let mut symbols = self.0.clone();
        symbols.sort();
        OpWord(symbols)
    }

    /// Parses the dotted text form; `I` is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == IDENTITY {
            return Ok(OpWord::empty());
        }
        let symbols = text
            .split('.')
            .map(OpSymbol::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(OpWord::new(symbols))
    }
}

/// Words print as `g1.g2.g1`; the empty word prints as `I`.
impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(IDENTITY);
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

impl fmt::Debug for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Unordered pairs of symbols declared to commute under composition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutationHypotheses {
    pairs: BTreeSet<(OpSymbol, OpSymbol)>,
}

impl CommutationHypotheses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a OpSymbol, &'a OpSymbol)>) -> Self {
        let mut hyp = Self::new();
        for (s, t) in pairs {
            hyp.declare(s.clone(), t.clone());
        }
        hyp
    }

    /// Declaring a pair involving `I` or a symbol with itself is a no-op.
    pub fn declare(&mut self, s: OpSymbol, t: OpSymbol) {
        if s.is_identity() || t.is_identity() || s == t {
            return;
        }
        let pair = if s < t { (s, t) } else { (t, s) };
        self.pairs.insert(pair);
    }

    pub fn commute(&self, s: &OpSymbol, t: &OpSymbol) -> bool {
        if s.is_identity() || t.is_identity() || s == t {
            return true;
        }
        let pair = if s < t {
            (s.clone(), t.clone())
        } else {
            (t.clone(), s.clone())
        };
        self.pairs.contains(&pair)
    }

    pub fn require(&self, s: &OpSymbol, t: &OpSymbol) -> Result<()> {
        if self.commute(s, t) {
            Ok(())
        } else {
            Err(Error::MissingHypothesis {
                left: s.clone(),
                right: t.clone(),
            })
        }
    }

    /// Declared pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (&OpSymbol, &OpSymbol)> {
        self.pairs.iter().map(|(s, t)| (s, t))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn union(&self, other: &CommutationHypotheses) -> CommutationHypotheses {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().cloned());
        CommutationHypotheses { pairs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> OpSymbol {
        OpSymbol::new(name).unwrap()
    }

    #[test]
    fn identity_is_stripped() {
        let w = OpWord::new([sym("g1"), OpSymbol::identity(), sym("g2")]);
        assert_eq!(w, OpWord::from_names(&["g1", "g2"]).unwrap());
        assert!(OpWord::new([OpSymbol::identity()]).is_empty());
    }

    #[test]
    fn compose_concatenates() {
        let g1 = OpWord::from_names(&["g1"]).unwrap();
        let g2 = OpWord::from_names(&["g2"]).unwrap();
        assert_eq!(g1.compose(&g2).to_string(), "g1.g2");
        let dd = OpWord::from_names(&["d", "d"]).unwrap();
        assert_eq!(OpWord::empty().compose(&dd), dd);
        assert_eq!(dd.compose(&OpWord::empty()), dd);
        let g1g2 = OpWord::from_names(&["g1", "g2"]).unwrap();
        assert_eq!(g1g2.compose(&g1).to_string(), "g1.g2.g1");
    }

    #[test]
    fn prefix_sorts_first() {
        let short = OpWord::from_names(&["a"]).unwrap();
        let long = OpWord::from_names(&["a", "a"]).unwrap();
        let other = OpWord::from_names(&["b"]).unwrap();
        assert!(OpWord::empty() < short);
        assert!(short < long);
        assert!(long < other);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(OpSymbol::new("").is_err());
        assert!(OpSymbol::new("1x").is_err());
        assert!(OpSymbol::new("a.b").is_err());
        assert!(OpSymbol::new("σ").is_ok());
        assert!(OpSymbol::new("Delta_2").is_ok());
    }

    #[test]
    fn text_round_trip() {
        for text in ["I", "g1", "g1.g2.g1", "σ.d"] {
            assert_eq!(OpWord::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn hypotheses_are_unordered() {
        let mut hyp = CommutationHypotheses::new();
        hyp.declare(sym("h2"), sym("h1"));
        assert!(hyp.commute(&sym("h1"), &sym("h2")));
        assert!(hyp.commute(&sym("h2"), &sym("h1")));
        assert!(!hyp.commute(&sym("g1"), &sym("g2")));
        assert!(hyp.commute(&OpSymbol::identity(), &sym("g2")));
        hyp.declare(OpSymbol::identity(), sym("x"));
        assert_eq!(hyp.pairs().count(), 1);
    }
}
