//! High-precision verification engine for infinite series that combine the
//! Riemann zeta function at integer arguments with Fibonacci and Lucas
//! numbers.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`] — big integers, rationals, the field ℚ(√5), Fibonacci/Lucas
//!   numbers and Bernoulli numbers. Generic over the integer type.
//! * [`real`] — [`BigReal`], an MPFR-backed arbitrary-precision real, with a
//!   [`PrecisionPolicy`] describing target and guard digits.
//! * [`special`] — ζ(s)−1, digamma, log-gamma, Euler's γ.
//! * [`series`] — direct summation of the zeta/Fibonacci families with
//!   geometric tail bounds, and rational series reduced to digamma values.
//! * [`closed_form`] — expression trees for right-hand sides.
//! * [`catalog`] — the registry of identities.
//! * [`verifier`] — evaluates both sides and produces reports.

pub mod catalog;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod real;
pub mod series;
pub mod special;
pub mod verifier;

pub use error::{Error, Result, Side};
pub use real::{BigReal, PrecisionPolicy};

/// Arbitrary-precision signed integer used by the exact layer.
pub type BigInt = num_bigint::BigInt;
/// Exact rational number in lowest terms.
pub type Rational = num_rational::BigRational;
/// Element `a + b·√5` of ℚ(√5) with big rational coordinates.
pub type QuadElem = exact::Quad<BigInt>;
/// Machine-width field element, handy for small exact computations.
pub type QuadElem64 = exact::Quad<i64>;
