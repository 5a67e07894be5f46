use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("points do not span a full-dimensional polytope")]
    NotFullDimensional,
    #[error("dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("point {0} lies outside the polytope")]
    PointOutsidePolytope(String),
    #[error("vector {0} is not in the support of the fan")]
    NotInSupport(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("scalar {0} cannot be absorbed by a rational group element")]
    UnabsorbableScalar(String),
    #[error("character is trivial on the group")]
    TrivialCharacter,
    #[error("group elements must have nonzero entries")]
    ZeroScalar,
    #[error("group element entries must be constants")]
    NonConstantEntry,
    #[error("tuples are not equivalent under the group")]
    NotEquivalent,
    #[error("ratio of entry {0} is not a constant")]
    NonConstantRatio(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("fan is not a refinement of the normal fan")]
    NotARefinement,
    #[error("no preimage: {0}")]
    NoPreimage(String),
    #[error("scalars of the preimage are not rational: {0}")]
    NeedsAlgebraicScalars(String),
    #[error("system has too few monomial components to determine the orders of the entries")]
    NotMonomialSystem,
    #[error("component {0} needs multivariate factorization; supply factor hints")]
    MultiParameterUnsupported(usize),
    #[error("hints do not factor component {0} completely")]
    IncompleteHints(usize),
    #[error("target tuple is empty or entirely zero")]
    ZeroTarget,
    #[error("malformed input: {0}")]
    Input(String),
}
