//! Concrete rational-linear maps on a [`ConcreteRing`].

use super::element::{ConcreteRing, Element};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub enum ConcreteMap {
    Identity,
    /// `x ↦ c·x`
    LeftMul(Element),
    /// `x ↦ x·c`
    RightMul(Element),
    /// `x ↦ c·x − x·c`
    InnerDer(Element),
    /// `x ↦ b1·x − x·b2`
    InnerGenDer(Element, Element),
    /// `x ↦ u·x·u⁻¹`; build with [`ConcreteMap::conj`].
    ConjEndo { u: Element, u_inv: Element },
    /// `d/dx` on truncated polynomials.
    FormalDiff,
    /// `[m1, m2, …]` is `m1∘m2∘…`, the last map applied first.
    Compose(Vec<ConcreteMap>),
}

impl ConcreteMap {
    /// Conjugation by `u`, rejecting non-invertible `u`.
    pub fn conj(u: Element) -> Result<Self> {
        let u_inv = u
            .inverse()
            .ok_or_else(|| Error::NotInvertible(u.to_string()))?;
        Ok(ConcreteMap::ConjEndo { u, u_inv })
    }

    /// Checks that every element the map carries lives in `ring` and that
    /// `FormalDiff` is only used on polynomials.
    pub fn check_ring(&self, ring: ConcreteRing) -> Result<()> {
        let elem = |x: &Element| {
            if ring.contains(x) {
                Ok(())
            } else {
                Err(Error::RingMismatch(format!("element {x} is not in ring {ring}")))
            }
        };
        match self {
            ConcreteMap::Identity => Ok(()),
            ConcreteMap::LeftMul(c) | ConcreteMap::RightMul(c) | ConcreteMap::InnerDer(c) => elem(c),
            ConcreteMap::InnerGenDer(b1, b2) => elem(b1).and(elem(b2)),
            ConcreteMap::ConjEndo { u, u_inv } => elem(u).and(elem(u_inv)),
            ConcreteMap::FormalDiff => match ring {
                ConcreteRing::PolyTrunc(_) => Ok(()),
                ConcreteRing::Matrix(_) => Err(Error::RingMismatch(
                    "d/dx is only defined on truncated polynomial rings".into(),
                )),
            },
            ConcreteMap::Compose(maps) => maps.iter().try_for_each(|m| m.check_ring(ring)),
        }
    }

    /// Panics if `x` lives in a different ring than the map's data; run
    /// [`ConcreteMap::check_ring`] first.
    pub fn apply(&self, x: &Element) -> Element {
        match self {
            ConcreteMap::Identity => x.clone(),
            ConcreteMap::LeftMul(c) => c.mul(x),
            ConcreteMap::RightMul(c) => x.mul(c),
            ConcreteMap::InnerDer(c) => c.mul(x).sub(&x.mul(c)),
            ConcreteMap::InnerGenDer(b1, b2) => b1.mul(x).sub(&x.mul(b2)),
            ConcreteMap::ConjEndo { u, u_inv } => u.mul(x).mul(u_inv),
            ConcreteMap::FormalDiff => match x {
                Element::Poly(p) => Element::Poly(p.derivative()),
                Element::Matrix(_) => panic!("d/dx applied to a matrix"),
            },
            ConcreteMap::Compose(maps) => maps
                .iter()
                .rev()
                .fold(x.clone(), |acc, m| m.apply(&acc)),
        }
    }
}
