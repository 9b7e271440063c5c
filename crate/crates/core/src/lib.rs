//! Exact-arithmetic verification engine for floor-function series,
//! generating-function transforms and binomial-sum identities.
//!
//! The crate is organised in layers:
//!
//! - [`rat`]: arbitrary-precision rationals (re-exported from `num-rational`)
//!   plus parsing/formatting helpers shared by the registries and reports.
//! - [`seq`]: integer/rational special sequences (Fibonacci, Lucas, gibonacci,
//!   harmonic numbers, binomial coefficients) with negative-index support.
//! - [`exact`]: the field tower ℚ ⊂ ℚ(√5) ⊂ ℚ(√5, i) with exact arithmetic,
//!   golden-ratio powers and embeddings into rigorous intervals.
//! - [`interval`]: midpoint–radius interval arithmetic over exact rationals.
//! - [`transcendental`]: rigorous enclosures of log, Li_m, ζ, arctan, cos, π.
//! - [`gf`]: truncated formal power series over ℚ(√5), rational-function
//!   expansion and the floor/binomial transforms.
//! - [`registry`]: shared parameter/verdict plumbing for the identity catalogs.
//! - [`catalog`]: the verification registries G01–G14, S01–S41 and B01–B30.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod gf;
pub mod interval;
pub mod rat;
pub mod registry;
pub mod seq;
pub mod transcendental;

pub use error::Error;
pub use exact::{QSqrt5, QSqrt5i};
pub use interval::Interval;
pub use rat::Rational;
pub use registry::{Params, Policy, Status, Verdict};
