use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("empty code: the generator matrix has no nonzero row")]
    EmptyCode,

    #[error("parameter out of range: {0}")]
    Parameter(String),

    /// A computation was refused because an input exceeds a configured bound.
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    Capability {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("format error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Format { line: Option<usize>, msg: String },

    /// An input does not satisfy the precondition of a construction.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("structure violation: {0}")]
    Structure(String),
}

impl Error {
    pub(crate) fn format(line: Option<usize>, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
