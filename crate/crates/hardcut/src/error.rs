//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parity: d*m must be even (m={m}, d={d})")]
    InvalidParity { m: usize, d: usize },

    #[error("too few vertices: a simple {d}-regular graph needs m >= {}, got m={m}", d + 1)]
    TooFewVertices { m: usize, d: usize },

    #[error("generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },

    #[error("graph too large for exhaustive enumeration: {vertex_count} vertices (limit {limit})")]
    TooLarge { vertex_count: usize, limit: usize },

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    NotConnected,

    #[error("eigensolver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("graph is not 3-regular")]
    NotThreeRegular,

    #[error("radius must be positive, got {0}")]
    NonpositiveRadius(f64),

    #[error("cap height {h} out of range [0, {}] for radius {r}", 2.0 * r)]
    HeightOutOfRange { r: f64, h: f64 },

    #[error("scale must be a positive integer, got {0}")]
    NonpositiveN(i64),

    #[error("volume must be nonnegative, got {0}")]
    NegativeVolume(f64),

    #[error("epsilon must lie in (0, 1/100), got {0}")]
    EpsilonOutOfRange(f64),

    #[error("expansion constant must be positive, got {0}")]
    NonpositiveExpansion(f64),

    #[error("normalization target volume must be positive, got {0}")]
    NonpositiveTarget(f64),

    #[error("cut must be a proper nonempty vertex subset")]
    EmptyOrFullCut,

    #[error("cut is not balanced for its epsilon")]
    UnbalancedCut,

    #[error("per-cell areas are required for this cut and are missing")]
    MissingAreas,

    #[error("case split violated: {0}")]
    CaseSplitViolation(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("no balanced cut exists for this epsilon")]
    NoBalancedCut,

    #[error("start cut is not balanced")]
    UnbalancedStart,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable token, used in CSV error columns and diagnostics.
    pub fn token(&self) -> &'static str {
        match self {
            Error::InvalidParity { .. } => "INVALID_PARITY",
            Error::TooFewVertices { .. } => "TOO_FEW_VERTICES",
            Error::GenerationExhausted { .. } => "GENERATION_EXHAUSTED",
            Error::TooLarge { .. } => "TOO_LARGE",
            Error::NotRegular => "NOT_REGULAR",
            Error::NotConnected => "NOT_CONNECTED",
            Error::NoConvergence { .. } => "NO_CONVERGENCE",
            Error::NotThreeRegular => "NOT_THREE_REGULAR",
            Error::NonpositiveRadius(_) => "NONPOSITIVE_RADIUS",
            Error::HeightOutOfRange { .. } => "HEIGHT_OUT_OF_RANGE",
            Error::NonpositiveN(_) => "NONPOSITIVE_N",
            Error::NegativeVolume(_) => "NEGATIVE_VOLUME",
            Error::EpsilonOutOfRange(_) => "EPSILON_OUT_OF_RANGE",
            Error::NonpositiveExpansion(_) => "NONPOSITIVE_EXPANSION",
            Error::NonpositiveTarget(_) => "NONPOSITIVE_TARGET",
            Error::EmptyOrFullCut => "EMPTY_OR_FULL_CUT",
            Error::UnbalancedCut => "UNBALANCED_CUT",
            Error::MissingAreas => "MISSING_AREAS",
            Error::CaseSplitViolation(_) => "CASE_SPLIT_VIOLATION",
            Error::InvalidCut(_) => "INVALID_CUT",
            Error::NoBalancedCut => "NO_BALANCED_CUT",
            Error::UnbalancedStart => "UNBALANCED_START",
            Error::InvalidGraph(_) => "INVALID_GRAPH",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::Parse(_) => "PARSE_ERROR",
            Error::Io(_) => "IO_ERROR",
        }
    }
}
