use thiserror::Error;

/// Every failure the library reports. Variants carry enough context to be
/// shown to a user unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("path is not composable at arrow `{0}`")]
    NotComposable(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("matrix for arrow `{arrow}` has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        arrow: String,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("unsupported regime: {0}")]
    Regime(String),
    #[error("stability parameter does not satisfy sum(theta_i * alpha_i) = 0 (got {0})")]
    ThetaNotBalanced(i64),
    #[error("relation {index} is not binomial: {detail}")]
    NotBinomial { index: usize, detail: String },
    #[error("degree bound {bound} exceeded before the generator set was certified complete")]
    DegreeBoundExceeded { bound: u32 },
    #[error("chart {0} is not smooth affine space: {1}")]
    UnresolvedChart(usize, String),
    #[error("charts do not overlap: {0}")]
    NoOverlap(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error("graph is not a doubled quiver: {0}")]
    NotDoubled(String),
    #[error("graph is not of ADE type: {0}")]
    NotAde(String),
}

pub type Result<T> = std::result::Result<T, Error>;
