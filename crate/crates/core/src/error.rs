use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("duplicate entry {0} in word")]
    DuplicateEntry(i64),

    #[error("cannot parse pattern {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// An input that was required to avoid `pattern` contains it; `positions`
    /// are the 1-indexed positions (or columns, for fillings) of one occurrence.
    #[error("input contains forbidden pattern {pattern} at positions {positions:?}")]
    PatternPresent {
        pattern: Permutation,
        positions: Vec<usize>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid diagram or transversal: {0}")]
    InvalidFilling(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillating(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("{name} with max n = {requested} exceeds the feasible limit {limit} ({estimate})")]
    Infeasible {
        name: String,
        requested: u32,
        limit: u32,
        estimate: String,
    },

    #[error("unknown verification target {0:?}")]
    UnknownTarget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
