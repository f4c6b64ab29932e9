//! Exact uniform random subproducts on finite groups.
//!
//! A *mixing sequence* for a finite group `G` is a list of pairs
//! `(g_i, p_i)` such that the random product `g_1^{e_1} ... g_k^{e_k}`, with
//! independent `e_i ~ Bernoulli(p_i)`, is exactly uniform on `G`. This crate
//! builds such sequences for many families of groups, verifies arbitrary
//! candidates by exact convolution, decides the odd-quotient obstruction,
//! mixes explicit matrix representations, and certifies grid-relative minimal
//! lengths by exhaustive search.
//!
//! Layout:
//! - [`group`]: the [`FiniteGroup`] abstraction, closures and quotients.
//! - [`field`]: finite fields, matrix groups and projective actions.
//! - [`engine`]: probabilities, distributions, exact folds and sampling.
//! - [`construct`]: certified constructors and composers.
//! - [`structure`]: `U(G)`, involution series and odd-quotient witnesses.
//! - [`rep`]: explicit representations and representation mixing.
//! - [`search`]: iterative-deepening search over probability grids.
//! - [`document`]: JSON documents for groups, sequences and reports.

pub mod construct;
pub mod document;
pub mod engine;
pub mod error;
pub mod field;
pub mod group;
pub mod real;
pub mod rep;
pub mod search;
pub mod structure;

pub use engine::probability::{Mode, Probability};
pub use engine::sequence::{Claim, MixingSequence, MixingStep};
pub use error::{MixError, Result};
pub use group::{Element, FiniteGroup};
pub use real::Real;

/// Default cap on the number of elements any operation will enumerate.
pub const DEFAULT_ENUM_BOUND: u128 = 10_000_000;
