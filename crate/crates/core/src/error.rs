use thiserror::Error;

use crate::filtration::Simplex;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point cloud")]
    EmptyPointCloud,
    #[error("point {point} has a non-finite coordinate")]
    NonFiniteCoordinate { point: usize },
    #[error("point {point} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        point: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("empty cover")]
    EmptyCover,

    #[error("invalid simplex {0}: vertices must be strictly increasing")]
    InvalidSimplex(String),
    #[error("simplex {simplex} is missing its face {face}")]
    MissingFace { simplex: Simplex, face: Simplex },
    #[error("face {face} (birth {face_birth}) is born after its coface {simplex} (birth {birth})")]
    FaceBornLater {
        simplex: Simplex,
        face: Simplex,
        birth: f64,
        face_birth: f64,
    },
    #[error("simplex {0} appears more than once")]
    DuplicateSimplex(Simplex),
    #[error("simplex {simplex} has invalid birth {birth}")]
    InvalidBirth { simplex: Simplex, birth: f64 },
    #[error("line {line}: {reason}: {content:?}")]
    MalformedLine {
        line: usize,
        content: String,
        reason: String,
    },

    #[error("chain references simplex index {index}, outside the complex ({len} simplices)")]
    UnknownSimplex { index: usize, len: usize },
    #[error("chain entry {index} has dimension {found}, expected degree {expected}")]
    WrongDegree {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("element {element} is not a cycle at {scale}")]
    NotACycle { element: usize, scale: f64 },
    #[error("element {element} uses simplices born after {scale}")]
    BornAfter { element: usize, scale: f64 },

    #[error("independent set has no irreducible cover")]
    IndependentSet,
    #[error("element {0} lies in no irreducible subset of the given set")]
    NoIrreducibleContaining(usize),
    #[error("set {set:?} is not irreducible at scale {scale}")]
    NotIrreducible { set: Vec<usize>, scale: f64 },
    #[error("ground set of {size} elements exceeds the exhaustive search limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },

    #[error("scale {from} is larger than {to}")]
    ScaleOrder { from: f64, to: f64 },
    #[error("unknown generator {id} at scale {scale}")]
    UnknownGenerator { id: usize, scale: f64 },
    #[error("generator {id} is a zero class at scale {scale}")]
    ZeroClass { id: usize, scale: f64 },
    #[error("ultrametric violated on triple ({a}, {b}, {c}): internal error")]
    UltrametricViolation { a: usize, b: usize, c: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
