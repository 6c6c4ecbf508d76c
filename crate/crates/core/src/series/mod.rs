//! Series evaluation.
//!
//! * zeta/Fibonacci families by direct summation with a rigorous geometric
//!   tail bound,
//! * rational series Σ P(n)/Q(n) by exact partial fractions over ℚ(√5)
//!   reduced to digamma values,
//! * literal partial sums used as an independent oracle,
//! * the generating functions of ζ(s)−1 behind the closed forms.

mod gf;
mod oracle;
mod rational;
mod zeta_fib;

pub use gf::{gf_eval, GfKind, GfValues};
pub use oracle::{partial_sum_oracle, PartialSum};
pub use rational::{partial_fraction_residues, sum_rational_series, RationalSeriesSpec};
pub use zeta_fib::{sum_zeta_fib, sum_zeta_fib_truncated, SeriesFamily, SeriesResult, SeriesSpec, Weight};

use crate::BigReal;

/// 64-bit working precision for bound arithmetic; results are inflated by
/// [`BOUND_SLACK`] to absorb rounding.
pub(crate) const BOUND_BITS: u32 = 64;
pub(crate) const BOUND_SLACK: f64 = 1.0 + 1e-9;

pub(crate) fn inflate(b: BigReal) -> BigReal {
    b * BigReal::from_f64(BOUND_SLACK, BOUND_BITS)
}
