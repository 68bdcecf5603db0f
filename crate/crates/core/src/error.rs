use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph on {n} vertices exceeds the {cap}-vertex capacity")]
    Capacity { n: usize, cap: usize },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shift {shift} is not valid; valid odd shifts are {valid:?}")]
    InvalidShift { shift: usize, valid: Vec<usize> },

    #[error("search budget exhausted after {expansions} expansions")]
    BudgetExceeded { expansions: u64 },

    /// A structural guarantee of the construction did not hold. Only reachable
    /// with an invalid antimorphism.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    /// The constructed model failed verification. This is a bug certificate.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
