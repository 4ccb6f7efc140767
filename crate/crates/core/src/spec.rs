//! Derivation specs: `f(ab) = g1(a)h1(b) + g2(a)h2(b)` plus declared
//! commutation hypotheses, and their line-based file format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pair_poly::{PairPoly, PairTerm};
use crate::symbol::{CommutationHypotheses, OpSymbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpec {
    pub f_name: OpSymbol,
    /// `[(g1, h1), (g2, h2)]`.
    pub summands: [(OpSymbol, OpSymbol); 2],
    pub hyp: CommutationHypotheses,
}

impl DerivationSpec {
    pub fn new(
        f_name: OpSymbol,
        first: (OpSymbol, OpSymbol),
        second: (OpSymbol, OpSymbol),
        hyp: CommutationHypotheses,
    ) -> Self {
        DerivationSpec {
            f_name,
            summands: [first, second],
            hyp,
        }
    }

    /// Convenience constructor from names; `I` is accepted everywhere.
    pub fn from_names(f: &str, g1: &str, h1: &str, g2: &str, h2: &str) -> Result<Self> {
        Ok(DerivationSpec::new(
            OpSymbol::new(f)?,
            (OpSymbol::new(g1)?, OpSymbol::new(h1)?),
            (OpSymbol::new(g2)?, OpSymbol::new(h2)?),
            CommutationHypotheses::new(),
        ))
    }

    pub fn with_commuting(mut self, s: &str, t: &str) -> Result<Self> {
        self.hyp.declare(OpSymbol::new(s)?, OpSymbol::new(t)?);
        Ok(self)
    }

    pub fn g1(&self) -> &OpSymbol {
        &self.summands[0].0
    }

    pub fn h1(&self) -> &OpSymbol {
        &self.summands[0].1
    }

    pub fn g2(&self) -> &OpSymbol {
        &self.summands[1].0
    }

    pub fn h2(&self) -> &OpSymbol {
        &self.summands[1].1
    }

    /// `X_i = g_i(a)·h_i(b)` for `i ∈ {1, 2}`.
    pub fn summand_term(&self, i: usize) -> PairTerm {
        let (g, h) = &self.summands[i];
        PairTerm::unit_pair(g, h)
    }

    pub fn summand(&self, i: usize) -> PairPoly {
        PairPoly::from_term(self.summand_term(i))
    }

    /// `f(ab) = X1 + X2` as a ⊗-ring element.
    pub fn defining_sum(&self) -> PairPoly {
        self.summand(0).pair_add(&self.summand(1))
    }

    /// Whether `[g1, g2] = [h1, h2] = 0` holds by declaration.
    pub fn has_commutative_hypotheses(&self) -> bool {
        self.hyp.commute(self.g1(), self.g2()) && self.hyp.commute(self.h1(), self.h2())
    }

    /// Every symbol the spec mentions except `I`, deduplicated and sorted.
    pub fn symbols(&self) -> Vec<OpSymbol> {
        let mut out: Vec<OpSymbol> = std::iter::once(&self.f_name)
            .chain(self.summands.iter().flat_map(|(g, h)| [g, h]))
            .chain(self.hyp.pairs().flat_map(|(s, t)| [s, t]))
            .filter(|s| !s.is_identity())
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Parses the spec file format:
    ///
    /// ```text
    /// # comment
    /// derivation f
    /// summand g1 h1
    /// summand g2 h2
    /// commute g1 g2
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut f_name: Option<OpSymbol> = None;
        let mut summands = Vec::new();
        let mut hyp = CommutationHypotheses::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            let words: Vec<&str> = line.split_whitespace().collect();
            let Some((&keyword, args)) = words.split_first() else {
                continue;
            };
            let symbols = args
                .iter()
                .map(|a| OpSymbol::new(a).map_err(|e| Error::syntax(line_no, e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            match (keyword, symbols.as_slice()) {
                ("derivation", [f]) => {
                    if f.is_identity() {
                        return Err(Error::syntax(line_no, "the derivation cannot be named I"));
                    }
                    if f_name.replace(f.clone()).is_some() {
                        return Err(Error::syntax(line_no, "duplicate `derivation` line"));
                    }
                }
                ("summand", [g, h]) => summands.push((g.clone(), h.clone())),
                ("commute", [s, t]) => hyp.declare(s.clone(), t.clone()),
                ("derivation", _) => {
                    return Err(Error::syntax(line_no, "usage: derivation <name>"));
                }
                ("summand", _) => return Err(Error::syntax(line_no, "usage: summand <g> <h>")),
                ("commute", _) => return Err(Error::syntax(line_no, "usage: commute <s> <t>")),
                (other, _) => {
                    return Err(Error::syntax(line_no, format!("unknown keyword {other:?}")));
                }
            }
        }
        let f_name = f_name.ok_or_else(|| Error::syntax(0, "missing `derivation` line"))?;
        let [first, second]: [(OpSymbol, OpSymbol); 2] = summands
            .try_into()
            .map_err(|s: Vec<_>| Error::Arity(s.len()))?;
        Ok(DerivationSpec::new(f_name, first, second, hyp))
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

impl FromStr for DerivationSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DerivationSpec::parse(s)
    }
}

/// Prints in the spec file format.
impl fmt::Display for DerivationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "derivation {}", self.f_name)?;
        for (g, h) in &self.summands {
            writeln!(f, "summand {g} {h}")?;
        }
        for (s, t) in self.hyp.pairs() {
            writeln!(f, "commute {s} {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generic_spec() {
        let spec = DerivationSpec::parse(
            "# generic\nderivation f\nsummand g1 h1\nsummand g2 h2  # second\n",
        )
        .unwrap();
        assert_eq!(spec, DerivationSpec::from_names("f", "g1", "h1", "g2", "h2").unwrap());
        assert!(spec.hyp.is_empty());
    }

    #[test]
    fn parses_sigma_tau_spec() {
        let spec = DerivationSpec::parse(
            "derivation d\nsummand d s\nsummand t d\ncommute d s\ncommute d t\n",
        )
        .unwrap();
        let sym = |n| OpSymbol::new(n).unwrap();
        assert!(spec.hyp.commute(&sym("s"), &sym("d")));
        assert!(spec.hyp.commute(&sym("t"), &sym("d")));
        assert!(spec.has_commutative_hypotheses());
        assert_eq!(DerivationSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn arity_errors() {
        let three = "derivation f\nsummand a b\nsummand c d\nsummand e g\n";
        assert_eq!(DerivationSpec::parse(three).unwrap_err(), Error::Arity(3));
        let one = "derivation f\nsummand a b\n";
        assert_eq!(DerivationSpec::parse(one).unwrap_err(), Error::Arity(1));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = DerivationSpec::parse("derivation f\nsumand a b\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err}");
        let err = DerivationSpec::parse("derivation f\nsummand a\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err}");
        let err = DerivationSpec::parse("derivation f\nsummand a b.c\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err}");
        assert!(DerivationSpec::parse("summand a b\nsummand c d\n").is_err());
    }
}
