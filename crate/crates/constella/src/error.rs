use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for universe of size {m}")]
    VertexOutOfRange { index: usize, m: usize },

    #[error("vertex universe size {m} exceeds the hard cap of {cap}")]
    UniverseTooLarge { m: usize, cap: usize },

    #[error("dual undefined for the full simplex")]
    DualOfFullSimplex,

    #[error("link requires a face, but {face} is not a face")]
    LinkOfNonFace { face: String },

    #[error("wedge multiplicities must be positive (entry {index} is zero)")]
    ZeroMultiplicity { index: usize },

    #[error("dimension mismatch: expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("point {index} is not an extreme point: it is the convex combination {witness}")]
    NotExtreme { index: usize, witness: String },

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("polytope needs at least dim+1 = {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("vertex count {m} exceeds the configured cap {cap} for this operation")]
    CapExceeded { m: usize, cap: usize },

    #[error("degree {p} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { p: isize, dim: isize },

    #[error("direction vector for {label} is zero")]
    ZeroDirection { label: String },

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid rational literal {literal:?}")]
    BadRational { literal: String },

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
