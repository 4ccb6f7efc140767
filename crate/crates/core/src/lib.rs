//! Exact symbolic engine for n-th powers of generalized derivations.
//!
//! A map `f` with `f(ab) = g1(a)h1(b) + g2(a)h2(b)` is modelled formally as
//! the sum `X1 + X2` of two pair-terms in the ⊗-ring of [`PairPoly`]s. Powers
//! of `f` become ⊗-powers of that sum, which this crate expands three ways:
//!
//! * [`expansions::iterate_expand`]: plain distribution, the ground truth;
//! * [`expansions::leibniz_commutative`]: the binomial closed form, valid when
//!   the summand maps commute;
//! * [`expansions::general_leibniz_noncommutative`]: the closed form built from
//!   powers of the inner generalized derivation `x ↦ B1·x − x·B2`, valid with
//!   no commutation hypotheses at all.
//!
//! The [`models`] module realizes the formal symbols as concrete linear maps
//! on exact matrix and truncated-polynomial algebras, so every symbolic
//! identity can also be checked numerically against brute-force iteration.

pub mod delta;
pub mod error;
pub mod expansions;
pub mod models;
pub mod pair_poly;
pub mod par;
pub mod ring;
pub mod scalar;
pub mod spec;
pub mod symbol;
pub mod verify;

pub use delta::DeltaOperator;
pub use error::{Error, Result};
pub use expansions::Expansion;
pub use pair_poly::{PairPoly, PairTerm};
pub use par::Execution;
pub use ring::Ring;
pub use scalar::{binomial, Scalar};
pub use spec::DerivationSpec;
pub use symbol::{CommutationHypotheses, OpSymbol, OpWord};
