use thiserror::Error;

/// Error taxonomy shared by every module of the crate.
///
/// `Hypothesis` is not a failure of the library: it marks inputs on which a
/// bound theorem simply does not apply (wrong height, non-Cohen-Macaulay
/// quotient). Callers that sweep corpora treat it as a first-class report
/// state rather than an error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, col, msg: msg.into() }
    }
}
