//! Classification machinery for division gradings on simple real
//! associative algebras: quadratic forms on finite abelian 2-groups,
//! twisted group algebras, Clifford algebras, graded matrix algebras,
//! involutions, and the transfer to Lie algebras of skew elements.
//! All arithmetic is exact (rationals and Gaussian rationals).

use thiserror::Error;

pub mod assoc;
pub mod clifford;
pub mod group;
pub mod linalg;
pub mod quad;
pub mod scalar;
pub mod twisted;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("not a quadratic form: {0}")]
    NotAQuadraticForm(String),
    #[error("forms must share a polarization: {0}")]
    SamePolarizationRequired(String),
    #[error("forms are identical: {0}")]
    IdenticalForms(String),
    #[error("cocycle verification failed: {0}")]
    CocycleVerificationFailed(String),
    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),
    #[error("degenerate bicharacter: {0}")]
    DegenerateBicharacter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unrecognized structure: {0}")]
    UnrecognizedStructure(String),
    #[error("invalid embedding: {0}")]
    EmbeddingInvalid(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("not a division grading: {0}")]
    NotADivisionGrading(String),
    #[error("not an involution: {0}")]
    NotAnInvolution(String),
    #[error("polarization mismatch: {0}")]
    PolarizationMismatch(String),
    #[error("not a second-kind involution: {0}")]
    NotSecondKind(String),
    #[error("signature is not a perfect square: {0}")]
    NonSquareSignature(String),
    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),
    #[error("internal disagreement between independent routes: {0}")]
    InternalDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
