use std::fmt;

/// Which side of an identity produced an evaluation error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Lhs => f.write_str("left-hand"),
            Side::Rhs => f.write_str("right-hand"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the domain of a function, or too close to a pole.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("term budget of {max_terms} exhausted before the tail bound closed ({context})")]
    BudgetExceeded { max_terms: usize, context: String },

    #[error("denominator too close to zero in {context}")]
    DivisionNearZero { context: String },

    #[error("repeated root {root} in rational series denominator")]
    RepeatedRoot { root: String },

    #[error("degree gap too small: numerator degree {numerator}, denominator degree {denominator} (need a gap of at least 2)")]
    DegreeError { numerator: usize, denominator: usize },

    #[error("Bernoulli number requested at odd index {0}")]
    OddBernoulli(usize),

    #[error("unknown identity id `{0}`")]
    UnknownId(String),

    #[error("parameter {param} is outside the domain of {id} ({domain})")]
    ParamOutOfDomain {
        id: String,
        param: String,
        domain: String,
    },

    #[error("invalid precision policy: {0}")]
    InvalidPolicy(String),

    #[error("{side} side of {id} failed: {source}")]
    Evaluation {
        id: String,
        side: Side,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }
}
