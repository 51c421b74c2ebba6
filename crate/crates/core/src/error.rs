use thiserror::Error;

/// Errors raised by the simulator, the circuit compilers and the analysis layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A register width or matrix dimension outside the supported range.
    #[error("size error: {0}")]
    Size(String),

    /// A qubit index that is out of range, repeated, or used as both control and target.
    #[error("index error: {0}")]
    Index(String),

    /// Two operands with incompatible widths.
    #[error("shape error: expected {expected} qubits, found {found}")]
    Shape { expected: usize, found: usize },

    /// An invalid problem statement (marked set, iteration count, shot count, ...).
    #[error("invalid spec: {0}")]
    Spec(String),

    /// A malformed line in the circuit text format.
    #[error("parse error at line {line} near `{token}`: {message}")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },

    /// A broken internal invariant; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
