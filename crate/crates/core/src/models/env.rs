//! Binding formal symbols to concrete maps, and evaluating formal sums.

use std::collections::BTreeMap;

use super::element::{ConcreteRing, Element};
use super::maps::ConcreteMap;
use crate::error::{Error, Result};
use crate::pair_poly::PairPoly;
use crate::ring::Ring;
use crate::spec::DerivationSpec;
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};

/// Model-side names for the roles `f, g1, h1, g2, h2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleAssignment {
    pub f: OpSymbol,
    pub summands: [(OpSymbol, OpSymbol); 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapEnv {
    pub ring: ConcreteRing,
    assignments: BTreeMap<OpSymbol, ConcreteMap>,
    pub f_realization: ConcreteMap,
    /// Commutation pairs the model itself claims.
    pub hyp: CommutationHypotheses,
    pub roles: Option<RoleAssignment>,
}

impl MapEnv {
    pub fn new(ring: ConcreteRing, f_realization: ConcreteMap) -> Result<Self> {
        f_realization.check_ring(ring)?;
        Ok(MapEnv {
            ring,
            assignments: BTreeMap::new(),
            f_realization,
            hyp: CommutationHypotheses::new(),
            roles: None,
        })
    }

    /// Binds `symbol`; `I` is reserved and always the identity.
    pub fn assign(&mut self, symbol: OpSymbol, map: ConcreteMap) -> Result<()> {
        if symbol.is_identity() {
            return Err(Error::Model("the identity symbol I cannot be reassigned".into()));
        }
        map.check_ring(self.ring)?;
        self.assignments.insert(symbol, map);
        Ok(())
    }

    pub fn with(mut self, name: &str, map: ConcreteMap) -> Result<Self> {
        self.assign(OpSymbol::new(name)?, map)?;
        Ok(self)
    }

    pub fn lookup(&self, symbol: &OpSymbol) -> Result<&ConcreteMap> {
        if symbol.is_identity() {
            return Ok(&ConcreteMap::Identity);
        }
        self.assignments
            .get(symbol)
            .ok_or_else(|| Error::UnboundSymbol(symbol.clone()))
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&OpSymbol, &ConcreteMap)> {
        self.assignments.iter()
    }

    /// Applies the word's maps right to left.
    pub fn eval_word(&self, word: &OpWord, x: &Element) -> Result<Element> {
        let mut acc = x.clone();
        for s in word.symbols().iter().rev() {
            acc = self.lookup(s)?.apply(&acc);
        }
        Ok(acc)
    }

    /// `Σ coeff · U(a) · V(b)`.
    pub fn eval_pairpoly(&self, p: &PairPoly, a: &Element, b: &Element) -> Result<Element> {
        let mut acc = self.ring.zero();
        for t in p.terms() {
            let ua = self.eval_word(&t.a_word, a)?;
            let vb = self.eval_word(&t.b_word, b)?;
            acc = acc.add(&ua.mul(&vb).scale(&t.coeff));
        }
        Ok(acc)
    }

    /// `f^n(a·b)` by applying the concrete `f` n times.
    pub fn brute_force_power(&self, n: u64, a: &Element, b: &Element) -> Element {
        let mut acc = a.mul(b);
        for _ in 0..n {
            acc = self.f_realization.apply(&acc);
        }
        acc
    }

    /// Returns an environment in which the spec's own symbol names resolve.
    ///
    /// Without a role assignment, symbols are matched by name. With one, each
    /// spec role is aliased to the model's map for that role; a spec `I` must
    /// meet a model `I` and no spec symbol may be bound to two different maps.
    pub fn bind(&self, spec: &DerivationSpec) -> Result<MapEnv> {
        let mut out = self.clone();
        if let Some(roles) = &self.roles {
            let pairs = [
                (&spec.f_name, &roles.f),
                (spec.g1(), &roles.summands[0].0),
                (spec.h1(), &roles.summands[0].1),
                (spec.g2(), &roles.summands[1].0),
                (spec.h2(), &roles.summands[1].1),
            ];
            let mut bound: BTreeMap<OpSymbol, ConcreteMap> = BTreeMap::new();
            for (spec_sym, model_sym) in pairs {
                if spec_sym.is_identity() != model_sym.is_identity() {
                    return Err(Error::Model(format!(
                        "spec symbol {spec_sym} is matched with model map {model_sym}"
                    )));
                }
                if spec_sym.is_identity() {
                    continue;
                }
                let map = self.lookup(model_sym)?.clone();
                if let Some(prev) = bound.get(spec_sym) {
                    if *prev != map {
                        return Err(Error::Model(format!(
                            "spec symbol {spec_sym} is bound to two different maps"
                        )));
                    }
                }
                bound.insert(spec_sym.clone(), map);
            }
            for (s, m) in bound {
                out.assignments.insert(s, m);
            }
        }
        for (g, h) in &spec.summands {
            out.lookup(g)?;
            out.lookup(h)?;
        }
        for (s, t) in spec.hyp.pairs() {
            out.lookup(s)?;
            out.lookup(t)?;
        }
        Ok(out)
    }
}
