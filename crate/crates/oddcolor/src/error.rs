use thiserror::Error;

/// Errors shared across the crate.
///
/// Hypothesis violations, parse failures and search-budget exhaustion are
/// kept as distinct variants so callers (in particular the CLI) can map
/// them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {u} {v} is not an edge of the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("subgraphs belong to different parent graphs")]
    ParentMismatch,

    #[error("parity set has odd cardinality {0}")]
    OddParitySet(usize),

    #[error("{op}: requires {requirement}")]
    Hypothesis {
        op: &'static str,
        requirement: String,
    },

    #[error("graph is the four-spoke wheel, which admits no odd 3-edge-coloring")]
    WheelW4,

    #[error("search budget of {0} node extensions exceeded")]
    BudgetExceeded(usize),

    #[error("sampling budget exhausted for profile {0}")]
    SamplingExhausted(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("coloring is not total: {0}")]
    PartialColoring(String),

    #[error("internal invariant failed in {op}: {detail}")]
    Internal {
        op: &'static str,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn hypothesis(op: &'static str, requirement: impl Into<String>) -> Self {
        Error::Hypothesis {
            op,
            requirement: requirement.into(),
        }
    }

    pub(crate) fn internal(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Internal {
            op,
            detail: detail.into(),
        }
    }
}
