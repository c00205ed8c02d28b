use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped by how a caller is expected to react: domain
/// errors mean the request itself was invalid, budget exhaustion means an
/// exact answer could not be produced within the node limit, and invariant
/// violations mean a checked mathematical property failed to hold.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("invalid vertex {vertex}: expected a value in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge:?} has {got} distinct vertices, expected {expected}")]
    EdgeSize {
        edge: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("family has matching number above {s}; witness matching {witness:?}")]
    MatchingTooLarge { s: usize, witness: Vec<Vec<usize>> },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
