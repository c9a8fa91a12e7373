use super::field::Field;
use super::matrix::{axpy, Matrix};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The stored basis is canonical, so two subspaces are equal exactly when
/// their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient: m.cols(), basis: Matrix::from_rows(m.cols(), rows), pivots }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        Self::from_matrix(&Matrix::from_rows(ambient, vectors.into_iter().collect()))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![F::zero(); self.ambient];
        for (k, c) in coords.iter().enumerate() {
            axpy(&mut rebuilt, c, self.basis.row(k));
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.ambient == self.ambient && (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Intersection, computed from the kernel of `[a; -b]ᵀ`.
    pub fn meet(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis.scale(&-F::one()));
        let relations = stacked.transpose().kernel();
        let vectors = (0..relations.rows()).map(|r| {
            let mut v = vec![F::zero(); self.ambient];
            for k in 0..da {
                axpy(&mut v, &relations[(r, k)], self.basis.row(k));
            }
            v
        });
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// `{u : u·v = 0 for all v}` under the coordinate pairing.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace::from_matrix(&self.basis.kernel())
    }

    /// Image under `v ↦ m·v`.
    pub fn image(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(m.rows(), (0..self.dim()).map(|i| m.mul_vec(self.basis.row(i))))
    }
}

impl Subspace<num_rational::BigRational> {
    /// The same subspace over an extension field.
    pub fn lift<G: Field>(&self) -> Subspace<G> {
        Subspace { ambient: self.ambient, basis: self.basis.lift(), pivots: self.pivots.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::from_int(0); n];
        v[i] = Scalar::from_int(1);
        v
    }

    #[test]
    fn meet_of_coordinate_lines() {
        let a = Subspace::span(3, vec![e(3, 0)]);
        let b = Subspace::span(3, vec![e(3, 1)]);
        assert_eq!(a.meet(&a).unwrap(), a);
        assert_eq!(a.meet(&b).unwrap().dim(), 0);
    }

    #[test]
    fn meet_dimension_mismatch() {
        let a = Subspace::<Scalar>::full(2);
        let b = Subspace::<Scalar>::full(3);
        assert!(matches!(a.meet(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn annihilator_is_involutive() {
        let v = vec![Scalar::from_int(1), "1+1*i".parse().unwrap(), Scalar::from_int(0)];
        let s = Subspace::span(3, vec![v]);
        assert_eq!(s.annihilator().annihilator(), s);
        assert_eq!(s.annihilator().dim(), 2);
    }
}
