use num_rational::BigRational;
use num_traits::Zero;

use crate::exactlin::{int, Field, Matrix, Scalar, Subspace};
use crate::liealg::{AlgebraMap, LieAlgebra};
use crate::rootsys::{RootIsometry, RootSystem};

use super::cartan_double_form;

/// `dim {v ∈ ⟨A⟩ : σv = v}`.
pub fn dim_xi(rs: &RootSystem, sigma: &RootIsometry) -> usize {
    let base = rs.simple_system_of(sigma.source());
    let rows: Vec<Vec<BigRational>> = base
        .iter()
        .map(|&d| {
            let s = rs.root(sigma.apply(d).expect("base root lies in A"));
            s.iter().zip(rs.root(d)).map(|(a, b)| int(a - b)).collect()
        })
        .collect();
    base.len() - Matrix::from_rows(rs.rank(), rows).rank()
}

/// Number of free ξ-scalars left after the infinitesimal torus action:
/// `|Δ_A|` minus the rank of `H ↦ ((ad_H ξ − ξ ad_H)(e_δ))_{σδ}`.
pub fn dim_xi_linearized(g: &LieAlgebra, sigma: &RootIsometry, xi: &AlgebraMap<Scalar>) -> usize {
    let base = g.root_system().simple_system_of(sigma.source());
    let commutators: Vec<Matrix<Scalar>> = g
        .cartan_range()
        .map(|k| {
            let ad: Matrix<Scalar> = g.ad_basis(k).lift();
            ad.mul(&xi.matrix).sub(&xi.matrix.mul(&ad))
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = base
        .iter()
        .map(|&d| {
            let target = g.root_index(sigma.apply(d).expect("base root lies in A"));
            let col = g.root_index(d);
            commutators.iter().map(|m| m[(target, col)].clone()).collect()
        })
        .collect();
    base.len() - Matrix::from_rows(commutators.len(), rows).rank()
}

/// `n(n − 1)/2`.
pub fn dim_lambda(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Dimension of the space of first-order deformations `φ : l₀ → C` keeping
/// `l₀` isotropic, with `C` a complement of `l₀` in `w`. Both subspaces are
/// in `h × h` Cartan coordinates.
pub fn lagrangian_tangent_dim(g: &LieAlgebra, w: &Subspace<Scalar>, l0: &Subspace<Scalar>) -> usize {
    let a = l0.basis_vectors();
    let mut span = l0.clone();
    let mut c = Vec::new();
    for v in w.basis_vectors() {
        if !span.contains(&v) {
            span = Subspace::span(w.ambient(), span.basis_vectors().into_iter().chain([v.clone()]));
            c.push(v);
        }
    }
    let (n, m) = (a.len(), c.len());
    let b: Vec<Vec<Scalar>> = a.iter().map(|ai| c.iter().map(|ck| cartan_double_form(g, ai, ck)).collect()).collect();
    // unknown φ(a_i) = Σ_k x_{ik} c_k, variable index i·m + k
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = vec![Scalar::zero(); n * m];
            for k in 0..m {
                row[j * m + k] = row[j * m + k].add_ref(&b[i][k]);
                row[i * m + k] = row[i * m + k].add_ref(&b[j][k]);
            }
            rows.push(row);
        }
    }
    n * m - Matrix::from_rows(n * m, rows).rank()
}
