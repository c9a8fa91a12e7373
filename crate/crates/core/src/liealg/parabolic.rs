use num_rational::BigRational;

use super::LieAlgebra;
use crate::exactlin::{dot, int, Matrix, Subspace};
use crate::rootsys::{ParabolicSubset, RootSet};

/// The semisimple subalgebra generated by a closed symmetric root set `A`,
/// with its Cartan part `h̃ = span{α∨ : α ∈ A}` and the orthogonal projections
/// of the full Cartan onto `h̃` and onto its complement `z`.
#[derive(Clone, Debug)]
pub struct SemisimplePart {
    roots: RootSet,
    base: Vec<usize>,
    coroots: Vec<Vec<BigRational>>,
    gram_inv: Matrix<BigRational>,
    dim: usize,
    cartan: std::ops::Range<usize>,
}

impl SemisimplePart {
    pub fn new(g: &LieAlgebra, roots: &RootSet) -> Self {
        let base = g.root_system().simple_system_of(roots);
        let coroots: Vec<Vec<BigRational>> = base.iter().map(|&d| g.coroot_vector(d)).collect();
        let gram = Matrix::from_rows(
            base.len(),
            coroots.iter().map(|u| coroots.iter().map(|v| g.form(u, v)).collect()).collect(),
        );
        let gram_inv = gram.inverse().expect("form is nondegenerate on h̃");
        SemisimplePart { roots: roots.clone(), base, coroots, gram_inv, dim: g.dim(), cartan: g.cartan_range() }
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    /// Simple roots of `A` (positive with respect to the global order).
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// `α∨` for `α` in the base, as elements of `g`.
    pub fn base_coroots(&self) -> &[Vec<BigRational>] {
        &self.coroots
    }

    /// Coefficients over the base coroots of the orthogonal projection of the
    /// Cartan part of `v` onto `h̃`.
    pub fn h_tilde_coeffs(&self, g: &LieAlgebra, v: &[BigRational]) -> Vec<BigRational> {
        let hv = g.cartan_projection(v);
        let rhs: Vec<BigRational> = self.coroots.iter().map(|c| g.form(c, &hv)).collect();
        self.gram_inv.mul_vec(&rhs)
    }

    fn h_tilde_part(&self, g: &LieAlgebra, v: &[BigRational]) -> Vec<BigRational> {
        let t = self.h_tilde_coeffs(g, v);
        let mut out = vec![int(0); self.dim];
        for (tk, c) in t.iter().zip(&self.coroots) {
            crate::exactlin::axpy(&mut out, tk, c);
        }
        out
    }

    pub fn h_tilde(&self) -> Subspace<BigRational> {
        Subspace::span(self.dim, self.coroots.clone())
    }

    /// `z`: the orthogonal complement of `h̃` in the Cartan subalgebra (center included).
    pub fn z(&self, g: &LieAlgebra) -> Subspace<BigRational> {
        Subspace::span(
            self.dim,
            self.cartan.clone().map(|k| {
                let b = g.basis_vector::<BigRational>(k);
                crate::exactlin::vec_sub(&b, &self.h_tilde_part(g, &b))
            }),
        )
    }

    /// `a = h̃ ⊕ span{e_α : α ∈ A}`.
    pub fn subalgebra(&self, g: &LieAlgebra) -> Subspace<BigRational> {
        Subspace::span(self.dim, self.coroots.iter().cloned().chain(self.roots.iter().map(|a| g.root_vector(a))))
    }

    /// Projection onto `a` killing `z` and all root spaces outside `A`.
    pub fn projection(&self, g: &LieAlgebra) -> Matrix<BigRational> {
        let cols = (0..self.dim)
            .map(|k| {
                if self.cartan.contains(&k) {
                    self.h_tilde_part(g, &g.basis_vector(k))
                } else if self.roots.contains(k) {
                    g.basis_vector(k)
                } else {
                    vec![int(0); self.dim]
                }
            })
            .collect();
        Matrix::from_cols(self.dim, cols)
    }

    /// Projection onto `z` killing `h̃` and all root spaces.
    pub fn z_projection(&self, g: &LieAlgebra) -> Matrix<BigRational> {
        let cols = (0..self.dim)
            .map(|k| {
                if self.cartan.contains(&k) {
                    let b = g.basis_vector(k);
                    crate::exactlin::vec_sub(&b, &self.h_tilde_part(g, &b))
                } else {
                    vec![int(0); self.dim]
                }
            })
            .collect();
        Matrix::from_cols(self.dim, cols)
    }
}

/// `p = h ⊕ ⊕_{α∈P} g_α` with its decomposition data.
#[derive(Clone, Debug)]
pub struct ParabolicSubalgebra {
    pub subset: ParabolicSubset,
    pub p: Subspace<BigRational>,
    pub levi: SemisimplePart,
    pub a: Subspace<BigRational>,
    pub h_tilde: Subspace<BigRational>,
    pub z: Subspace<BigRational>,
    pub proj_a: Matrix<BigRational>,
    pub proj_z: Matrix<BigRational>,
}

pub fn parabolic_subalgebra(g: &LieAlgebra, subset: &ParabolicSubset) -> ParabolicSubalgebra {
    let levi = SemisimplePart::new(g, subset.levi());
    let p = Subspace::span(g.dim(), subset.members().iter().chain(g.cartan_range()).map(|k| g.basis_vector(k)));
    ParabolicSubalgebra {
        subset: subset.clone(),
        p,
        a: levi.subalgebra(g),
        h_tilde: levi.h_tilde(),
        z: levi.z(g),
        proj_a: levi.projection(g),
        proj_z: levi.z_projection(g),
        levi,
    }
}

impl ParabolicSubalgebra {
    /// `z → p/[p, p]` is an isomorphism: `z ∩ [p, p] = 0` and `z + [p, p] = p`.
    pub fn quotient_is_z(&self, g: &LieAlgebra) -> bool {
        let dp = g.derived(&self.p);
        let meet = dp.meet(&self.z).expect("same ambient");
        let sum = dp.sum(&self.z).expect("same ambient");
        meet.dim() == 0 && sum == self.p
    }
}

/// `u = h ⊕ ⊕_{α∈U} g_α` for a closed symmetric root set `U`.
pub fn levi_subalgebra(g: &LieAlgebra, u: &RootSet) -> Subspace<BigRational> {
    Subspace::span(g.dim(), u.iter().chain(g.cartan_range()).map(|k| g.basis_vector(k)))
}

/// Orthogonality test used by callers checking `z ⟂ h̃`.
pub fn orthogonal(g: &LieAlgebra, a: &Subspace<BigRational>, b: &Subspace<BigRational>) -> bool {
    let gram = g.gram_matrix();
    a.basis_vectors().iter().all(|u| {
        let gu = gram.transpose().mul_vec(u);
        b.basis_vectors().iter().all(|v| num_traits::Zero::is_zero(&dot(&gu, v)))
    })
}
