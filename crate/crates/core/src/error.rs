use thiserror::Error;

/// Errors produced by constructions, parsers and analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The block count and boundary shift share a factor; the resulting
    /// codes are outside the analyzed family.
    #[error("commensurate case unanalyzed: gcd(c={c}, chi={chi}) != 1")]
    Commensurate { c: usize, chi: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("symmetry decomposition integrity failure: {0}")]
    Decomposition(String),

    /// A built code failed its commutation check. Always a construction bug.
    #[error("stabilizers do not commute: {0}")]
    NonCommuting(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
