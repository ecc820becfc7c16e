use thiserror::Error;

use crate::entspace::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} is outside the supported range [2, 20]")]
    GroundSetSize(usize),

    #[error("subset {mask} is not contained in the ground set {{1..{n}}}")]
    MaskOutOfRange { mask: SubsetMask, n: usize },

    #[error("ground-set mismatch: n={left} vs n={right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("generation of {predicted} inequalities exceeds the budget of {budget}")]
    BudgetExceeded { predicted: String, budget: u64 },

    #[error("generator index {index} out of range ({len} generators)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed problem: {0}")]
    MalformedProblem(String),

    #[error("network contains a cycle through `{0}`")]
    CyclicNetwork(String),

    #[error("network references undefined id `{0}`")]
    DanglingReference(String),

    #[error("sink `{sink}` demands source `{source_id}` which it cannot reach")]
    UnreachableDemand { sink: String, source_id: String },

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}
