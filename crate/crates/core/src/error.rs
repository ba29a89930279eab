use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {0} outside supported range 1..={1}")]
    GroundSetSize(u32, u32),

    #[error("element label {0} outside ground set [{1}]")]
    ElementOutOfRange(u32, u32),

    #[error("operands live on different ground sets ({0} vs {1})")]
    GroundMismatch(u32, u32),

    #[error("circuit family violates the circuit axioms: {0}")]
    InvalidCircuits(String),

    #[error("{0:?} is not a flat of the matroid")]
    NotAFlat(Vec<u32>),

    #[error("matroid is not simple: {0}")]
    NotSimple(String),

    #[error("matroid has rank {0}, expected rank <= {1}")]
    RankTooLarge(u32, u32),

    #[error("graph has a cycle, expected a forest")]
    NotAForest,

    #[error("configuration is not forest-like")]
    NotForestLike,

    #[error("collection is not valid: {0}")]
    InvalidCollection(String),

    #[error("edge {0:?} has size {1}, larger than ambient dimension {2}")]
    EdgeTooLarge(Vec<u32>, usize, u32),

    #[error("{0} is not a member of the clutter")]
    NotAMember(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("search budget exhausted after {explored} states (partial result)")]
    BudgetExhausted { explored: usize },

    #[error("retry budget exhausted: {0} (inconclusive, not a proof of non-realizability)")]
    RetryBudgetExhausted(String),

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("degenerate input planes: {0}")]
    DegeneratePlanes(String),

    #[error("line is not present in the configuration")]
    LineAbsent,
}

pub type Result<T> = std::result::Result<T, Error>;
