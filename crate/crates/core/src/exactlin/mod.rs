//! Exact scalar fields, dense linear algebra and integer lattices.

mod field;
mod lattice;
mod matrix;
mod scalar;
mod subspace;

pub use field::Field;
pub use lattice::{hnf, integer_left_kernel, IntegerLattice};
pub use matrix::{axpy, dot, is_zero_vec, vec_scale, vec_sub, Matrix};
pub use scalar::{FieldSpec, Scalar, ScalarParseError};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced row-echelon form and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    m.rref()
}

/// Basis of `span(a) ∩ span(b)`.
pub fn subspace_meet<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> crate::Result<Subspace<F>> {
    a.meet(b)
}
