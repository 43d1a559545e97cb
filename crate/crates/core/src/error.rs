use thiserror::Error;

use crate::verify::PairProperty;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,

    #[error("duplicate label `{0}` in ground set")]
    DuplicateLabel(String),

    #[error("label `{0}` is empty or contains a reserved character (whitespace, '(', ')' or '+')")]
    InvalidLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("subset is over a ground set of size {found}, expected {expected}")]
    GroundSetMismatch { expected: usize, found: usize },

    #[error("element index {index} out of range for ground set of size {n}")]
    ElementOutOfRange { index: usize, n: usize },

    #[error("element {0} must lie outside the given subset")]
    NotOutside(usize),

    #[error("pair elements must be distinct (got {0} twice)")]
    InvalidPair(usize),

    #[error("element {index} is not live in a contracted ground set of size {live}")]
    StaleElement { index: usize, live: usize },

    #[error("ground set of size {n} is too small, at least {min} elements are required")]
    TooSmall { n: usize, min: usize },

    #[error("ground set of size {n} exceeds the exhaustive-enumeration limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("alpha = {0} is outside [-1, 1]; the last pair of such an ordering need not be contractible")]
    AlphaOutOfRange(f64),

    #[error("no {property} counterexample exists for alpha = {alpha}: {reason}")]
    NoCounterexample {
        property: PairProperty,
        alpha: f64,
        reason: &'static str,
    },

    #[error("edge weight {0} is negative or not finite")]
    InvalidWeight(f64),

    #[error("self-loop on element {0}")]
    SelfLoop(String),

    #[error("invalid function definition: {0}")]
    InvalidFunction(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
