//! Exact Bernoulli numbers, Faulhaber polynomials and polynomial solutions
//! of the difference equation `f(x) + x^k = f(x + 1)`.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any value. See the crate's `examples/` directory for one
//! runnable program per capability.

pub mod bench;
pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod faulhaber;
pub mod feqsolver;
pub mod identities;
pub mod poly;
pub mod series;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_series, Convention};
pub use error::{Error, Result};
pub use exactnum::{binomial, Integer, Rational};
pub use poly::Polynomial;
