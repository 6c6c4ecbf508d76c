//! Exact arithmetic: ℚ(√5), Fibonacci/Lucas numbers and Bernoulli numbers.
//!
//! Everything here is generic over the integer type through `num-traits`;
//! the crate root fixes the big-integer instantiations used downstream.

mod bernoulli;
mod fibonacci;
mod quad;

pub use bernoulli::{bernoulli, bernoulli_table};
pub use fibonacci::{alpha_power, fib_lucas, fib_lucas_pair, IndexStepper, Sequence};
pub use quad::{quad_conjugate, Quad};
