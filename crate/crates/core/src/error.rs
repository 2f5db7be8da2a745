use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("matching of size {given} is not maximum (maximum is {maximum})")]
    NotMaximum { given: usize, maximum: usize },

    /// A structural fact that is a theorem for maximum matchings did not hold.
    /// This always indicates a bug or a caller passing a non-maximum matching.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("no trial met the budget {budget}: best cover has {best} of {total} edges")]
    BudgetNotMet {
        budget: String,
        best: usize,
        total: usize,
    },
}

impl Error {
    pub(crate) fn capacity(what: &'static str, actual: u128, limit: u128) -> Self {
        Error::Capacity {
            what,
            actual,
            limit,
        }
    }
}
