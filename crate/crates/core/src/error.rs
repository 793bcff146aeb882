use thiserror::Error;

/// Errors produced by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid degree {text:?}: {reason}")]
    Degree { text: String, reason: String },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("element subset must be nonempty")]
    EmptySubset,

    #[error("element {element} is outside the carrier of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("degree out of range at element {element}: {detail}")]
    DegreeOutOfRange { element: usize, detail: String },

    #[error("magma has no left identity")]
    NoLeftIdentity,

    #[error("magma is not left invertive: {0}")]
    NotLeftInvertive(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid target expression at offset {offset}: {message}")]
    Target { offset: usize, message: String },

    #[error("invalid task: {0}")]
    InvalidTask(String),

    #[error("malformed subset JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
