use thiserror::Error;

use crate::exactlin::ScalarParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown Cartan type `{0}`")]
    UnknownCartanType(String),
    #[error("rank {rank} exceeds the enumeration cap of {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("center form is not a nondegenerate symmetric rational matrix")]
    DegenerateCenterForm,
    #[error("not a parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("not a scalar-product preserving root isometry: {0}")]
    InvalidIsometry(String),
    #[error("missing xi scalar for simple root {0}")]
    MissingScalar(usize),
    #[error("xi scalar for simple root {0} is zero")]
    ZeroScalar(usize),
    #[error("xi fails to preserve the invariant form at root {0}")]
    FormViolation(usize),
    #[error("xi fails to be a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("no characteristic of the nilpotent lies in the fixed Cartan subalgebra")]
    NoCartanCharacteristic,
    #[error("map does not preserve the subalgebra it is restricted to")]
    NotEndomorphism,
    #[error("element is not in the required subspace: {0}")]
    NotInSubspace(String),
    #[error("dim z = {z} differs from dim z' = {z_prime}; no Lagrangian l0 exists")]
    CenterDimensionMismatch { z: usize, z_prime: usize },
    #[error("l0 is not a Lagrangian subspace of z x z': {0}")]
    InvalidL0(String),
    #[error("subspace is not a Lagrangian subalgebra: {0}")]
    NotLagrangian(String),
    #[error("could not conjugate the projections into standard parabolic position")]
    NonStandardProjection,
    #[error("operation requires an exact-form automorphism")]
    NotExact,
    #[error("no rational isometry z -> z' could be constructed")]
    NoIsometry,
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
