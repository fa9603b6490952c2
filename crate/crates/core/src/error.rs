use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {n} is outside the supported range 0..={max}")]
    DimensionOutOfRange { n: usize, max: usize },

    #[error("vertex index {index} out of range for dimension {n}")]
    VertexOutOfRange { index: u32, n: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("element does not stabilize the vertex set")]
    NotStabilizing,

    #[error("non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("missing substitution for z{0}")]
    MissingSubstitution(u32),

    #[error("missing fixed-point count for power {0}")]
    MissingFixedPointCount(u32),

    #[error("inconsistent fixed-point counts: m_{order} = {value}")]
    InconsistentFixedPoints { order: u32, value: String },

    #[error("hyperplane has no nonzero coefficient")]
    ZeroHyperplane,

    #[error("hyperplane {0} is not spanned by cube vertices")]
    NotSpanned(String),

    #[error("negative branch requested for a hyperplane with delta = 0")]
    NegativeBranchUnavailable,

    #[error("no built-in hyperplane list for n = {n} with at least {min_vertices} vertices")]
    UnsupportedRepresentatives { n: usize, min_vertices: usize },

    #[error("k = {k} is outside the {regime} regime for n = {n}")]
    OutOfRegime {
        n: usize,
        k: usize,
        regime: &'static str,
    },

    #[error("external value F_{n}({k}) = {external} conflicts with computed value {computed}")]
    ExternalConflict {
        n: usize,
        k: usize,
        external: String,
        computed: String,
    },

    #[error("{0} is not among the representatives")]
    UnknownHyperplane(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("empty vertex set")]
    EmptySet,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
