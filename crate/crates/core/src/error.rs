use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance with {n} vertices exceeds the exact-solver limit of {limit}")]
    InstanceTooLarge { n: usize, limit: usize },

    #[error("exact separator search exceeded its budget of {budget} candidate sets")]
    ExactBudgetExceeded { budget: u64 },

    #[error("no balanced separator found within the size budget")]
    NoSeparator,

    #[error("invalid balance parameter {0}; must lie in [1/2, 1)")]
    InvalidBalance(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("round budget of {budget} exceeded")]
    RoundBudgetExceeded { budget: usize },

    #[error("vertex set does not cover edge ({0}, {1})")]
    NotACover(usize, usize),

    #[error("missing value for vertex {0}")]
    MissingValue(usize),

    #[error("history is inconsistent with every staircase function")]
    InconsistentHistory,

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
