use thiserror::Error;

use crate::bernoulli::Convention;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("binomial coefficient requested for negative n = {0}")]
    NegativeBinomialTop(i64),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("power series with zero constant term has no reciprocal")]
    NonInvertibleSeries,

    /// The variant closed form only holds for positive exponents.
    #[error("the B- variant of Faulhaber's formula requires p > 0 (got p = {0})")]
    VariantNeedsPositivePower(usize),

    /// A closed-form sum of powers evaluated to a non-integer. This is a bug
    /// in the Bernoulli tables, never a property of the input.
    #[error("internal consistency failure: F({n}, {p}) evaluated to non-integral {value}")]
    NonIntegralSum { n: String, p: usize, value: String },

    #[error("solution of the {solved} problem cannot be read with the {requested} convention")]
    ConventionMismatch {
        solved: Convention,
        requested: Convention,
    },

    #[error("benchmark methods disagree at n = {n}: naive = {naive}, closed form = {closed}")]
    BenchMismatch {
        n: String,
        naive: String,
        closed: String,
    },

    #[error("benchmark needs {0}")]
    BenchArgument(&'static str),
}
