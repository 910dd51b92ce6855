use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Search-style operations keep a strict separation between a *negative
/// answer* (returned as a value, e.g. `SphereOutcome::No`) and an *inability
/// to answer* (`CapExceeded` / `BudgetExhausted`). A budget or cap error is
/// never reported as "No".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopoError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("`{0}` and `{1}` are not adjacent")]
    NotAnEdge(String, String),

    #[error("vertices `{0}` and `{1}` are already adjacent")]
    AlreadyAdjacent(String, String),

    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("vertex `{0}` is not part of the host space")]
    StrayVertex(String),

    #[error("operation undefined on the empty space")]
    EmptySpace,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("{{{0}, {1}}} is not a simple pair")]
    PairNotSimple(String, String),

    #[error("split parts do not cover the rim of `{0}`")]
    CoverViolated(String),

    #[error("split leaves cross-adjacency between `{0}` and `{1}`")]
    CrossAdjacency(String, String),

    #[error("no valid split exists on this space")]
    NoValidSplit,

    #[error("certificate start key does not match the space")]
    StartKeyMismatch,

    #[error("certificate end key does not match the replayed space")]
    EndKeyMismatch,

    #[error("step {index} failed precondition: {reason}")]
    StepPrecondition { index: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cut set must be a nonempty proper subset of the space")]
    NotAProperSubset,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
