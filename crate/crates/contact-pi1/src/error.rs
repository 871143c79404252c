use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type. Index payloads are 0-based positions into the
/// caller's input order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector is zero")]
    ZeroVector,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("vector is not primitive (content {content})")]
    NotPrimitive { content: BigInt },

    #[error("ambient dimension must be at least 2 (got {dim})")]
    AmbientTooSmall { dim: usize },

    #[error("vector {index} has length {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },

    #[error("normal {index} is zero")]
    ZeroNormal { index: usize },

    #[error("normals {first} and {second} coincide after primitivization")]
    DuplicateNormal { first: usize, second: usize },

    #[error("normal {index} does not support a facet of the cone")]
    RedundantFacet { index: usize },

    #[error("cone is not strictly convex")]
    NotStrictlyConvex,

    #[error("no interior vector found in the dual cone")]
    InteriorVectorNotFound,

    #[error("candidate Reeb vector pairs nonpositively with ray {ray}")]
    ReebNotPositiveOnCone { ray: String },

    #[error("cone is not good; see validation diagnostics")]
    NotGood,

    #[error("input requires a bundle class (a, b, c) and none was supplied")]
    MissingBundleClass,

    #[error("halfspaces {first} and {second} coincide after primitivization")]
    DuplicateHalfspace { first: usize, second: usize },

    #[error("halfspace {index} does not support a facet of the polytope")]
    RedundantHalfspace { index: usize },

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("vertex {vertex} lies on more than ambient-dimension many facets; polytope is not simple")]
    NotSimple { vertex: String },

    #[error("functional is not generic: vertices {first} and {second} take the same value")]
    NotGeneric { first: String, second: String },

    #[error("polytope has a non-integral vertex: {vertex}")]
    NotIntegral { vertex: String },

    #[error("polytope is not Delzant; see diagnostics")]
    NotDelzant,

    #[error("halfspace {index} has a non-integer offset")]
    NonIntegerOffset { index: usize },

    #[error("no applicable fundamental-group method for this input: {reason}")]
    NoApplicableMethod { reason: String },

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
