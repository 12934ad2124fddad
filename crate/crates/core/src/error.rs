use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings or fields, or an argument is out of range.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A structure failed one of its defining axioms.
    #[error("validation failed ({axiom}): {detail}")]
    Validation { axiom: String, detail: String },

    #[error("reference to unknown {kind} `{name}`")]
    Unresolved { kind: String, name: String },

    #[error("iteration did not stabilise within {rounds} rounds")]
    RoundCap { rounds: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn validation(axiom: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Validation {
            axiom: axiom.into(),
            detail: detail.into(),
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Input(_) => "E_INPUT",
            Error::Parse { .. } => "E_PARSE",
            Error::Validation { .. } => "E_VALIDATION",
            Error::Unresolved { .. } => "E_UNRESOLVED",
            Error::RoundCap { .. } => "E_ROUND_CAP",
            Error::Internal(_) => "E_INTERNAL",
        }
    }

    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation { .. } => 1,
            Error::Input(_) | Error::Parse { .. } | Error::Unresolved { .. } => 2,
            Error::RoundCap { .. } | Error::Internal(_) => 3,
        }
    }
}
