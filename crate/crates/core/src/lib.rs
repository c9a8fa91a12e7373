//! Exact construction, verification and classification of Lagrangian
//! subalgebras of `g × g` for complex reductive Lie algebras `g`.
//!
//! Linear algebra is generic over [`exactlin::Field`]; the concrete fields
//! are [`Q`] and the tower [`K`] `= ℚ(i)(√d)`.

pub mod cli;
pub mod double;
pub mod error;
pub mod exactlin;
pub mod geom;
pub mod integrab;
pub mod lagrange;
pub mod liealg;
pub mod rootsys;

pub use error::{Error, Result};

pub type Q = num_rational::BigRational;
pub type K = exactlin::Scalar;
pub type QMatrix = exactlin::Matrix<Q>;
pub type KMatrix = exactlin::Matrix<K>;
pub type QSubspace = exactlin::Subspace<Q>;
pub type KSubspace = exactlin::Subspace<K>;
