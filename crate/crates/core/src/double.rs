//! The double `g × g` with the form `⟨(x₁,y₁),(x₂,y₂)⟩ = ⟨x₁,x₂⟩ − ⟨y₁,y₂⟩`,
//! Lagrangian verification, the Sklyanin r-matrix and the classical
//! Yang–Baxter equation.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{int, rat, Field, Matrix, Subspace};
use crate::liealg::LieAlgebra;

/// Splits a vector of `g × g` into its two components.
pub fn split<F: Clone>(g: &LieAlgebra, v: &[F]) -> (Vec<F>, Vec<F>) {
    (v[..g.dim()].to_vec(), v[g.dim()..].to_vec())
}

pub fn join<F: Clone>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().chain(y).cloned().collect()
}

pub fn double_form<F: Field>(g: &LieAlgebra, u: &[F], v: &[F]) -> Result<F> {
    for w in [u, v] {
        if w.len() != 2 * g.dim() {
            return Err(Error::DimensionMismatch { expected: 2 * g.dim(), found: w.len() });
        }
    }
    let (x1, y1) = split(g, u);
    let (x2, y2) = split(g, v);
    Ok(g.form(&x1, &x2) - g.form(&y1, &y2))
}

pub fn double_bracket<F: Field>(g: &LieAlgebra, u: &[F], v: &[F]) -> Vec<F> {
    let (x1, y1) = split(g, u);
    let (x2, y2) = split(g, v);
    join(&g.bracket(&x1, &x2), &g.bracket(&y1, &y2))
}

/// A subspace of `g × g` with an exact canonical basis.
pub type DoubleSubspace<F> = Subspace<F>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LagrangianVerdict {
    pub isotropic: bool,
    pub dim: usize,
    pub closed: bool,
    pub lagrangian: bool,
}

pub fn verify_lagrangian<F: Field>(g: &LieAlgebra, s: &DoubleSubspace<F>) -> LagrangianVerdict {
    assert_eq!(s.ambient(), 2 * g.dim(), "subspace of the wrong double");
    let b = s.basis_vectors();
    let isotropic =
        (0..b.len()).all(|i| (i..b.len()).all(|j| double_form(g, &b[i], &b[j]).expect("same ambient").is_zero()));
    let closed = (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&double_bracket(g, &b[i], &b[j]))));
    let dim = s.dim();
    LagrangianVerdict { isotropic, dim, closed, lagrangian: isotropic && closed && dim == g.dim() }
}

pub fn diagonal<F: Field>(g: &LieAlgebra) -> DoubleSubspace<F> {
    Subspace::span(2 * g.dim(), (0..g.dim()).map(|k| join(&g.basis_vector::<F>(k), &g.basis_vector(k))))
}

/// `m = {(x, y) ∈ b₋ × b₊ : x_h + y_h = 0}`.
pub fn manin_complement<F: Field>(g: &LieAlgebra) -> DoubleSubspace<F> {
    let rs = g.root_system();
    let zero = vec![F::zero(); g.dim()];
    let mut vs = Vec::new();
    for a in 0..rs.num_roots() {
        let e = g.root_vector::<F>(a);
        vs.push(if rs.is_positive(a) { join(&zero, &e) } else { join(&e, &zero) });
    }
    for k in g.cartan_range() {
        let h = g.basis_vector::<F>(k);
        vs.push(join(&h, &h.iter().map(|c| -c.clone()).collect::<Vec<_>>()));
    }
    Subspace::span(2 * g.dim(), vs)
}

/// `{x ∈ g : (x, x) ∈ s}`.
pub fn diag_intersection<F: Field>(g: &LieAlgebra, s: &DoubleSubspace<F>) -> Subspace<F> {
    let meet = s.meet(&diagonal(g)).expect("same ambient");
    Subspace::span(g.dim(), meet.basis_vectors().into_iter().map(|v| v[..g.dim()].to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManinVerdict {
    pub diagonal: LagrangianVerdict,
    pub complement: LagrangianVerdict,
    pub intersection_zero: bool,
    pub sum_is_everything: bool,
}

impl ManinVerdict {
    pub fn passed(&self) -> bool {
        self.diagonal.lagrangian && self.complement.lagrangian && self.intersection_zero && self.sum_is_everything
    }
}

pub fn manin_pair_check<F: Field>(g: &LieAlgebra, a: &DoubleSubspace<F>, b: &DoubleSubspace<F>) -> ManinVerdict {
    ManinVerdict {
        diagonal: verify_lagrangian(g, a),
        complement: verify_lagrangian(g, b),
        intersection_zero: a.meet(b).expect("same ambient").dim() == 0,
        sum_is_everything: a.sum(b).expect("same ambient").dim() == 2 * g.dim(),
    }
}

pub fn manin_triple_check(g: &LieAlgebra) -> ManinVerdict {
    manin_pair_check::<BigRational>(g, &diagonal(g), &manin_complement(g))
}

/// An element of `g ⊗ g` given by its coefficient matrix `r^{μν}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RTensor {
    pub r: Matrix<BigRational>,
}

impl RTensor {
    pub fn symmetric(&self) -> Matrix<BigRational> {
        self.r.add(&self.r.transpose()).scale(&rat(1, 2))
    }

    pub fn alternating(&self) -> Matrix<BigRational> {
        self.r.sub(&self.r.transpose()).scale(&rat(1, 2))
    }
}

/// The Casimir tensor `t` of the invariant form (inverse Gram matrix).
pub fn casimir(g: &LieAlgebra) -> Matrix<BigRational> {
    g.gram_matrix().inverse().expect("nondegenerate invariant form")
}

/// `r = ½ t₀ + t₁` with `t₀ ∈ h ⊗ h` and `t₁ ∈ n₊ ⊗ n₋`.
pub fn sklyanin_r(g: &LieAlgebra) -> RTensor {
    let t = casimir(g);
    let rs = g.root_system();
    let dim = g.dim();
    let mut r = Matrix::zeros(dim, dim);
    let half = rat(1, 2);
    for mu in 0..dim {
        for nu in 0..dim {
            let v = &t[(mu, nu)];
            if v.is_zero() {
                continue;
            }
            let cartan = g.cartan_range();
            if cartan.contains(&mu) && cartan.contains(&nu) {
                r[(mu, nu)] = v * &half;
            } else if mu < rs.num_roots() && nu < rs.num_roots() && rs.is_positive(mu) && !rs.is_positive(nu) {
                r[(mu, nu)] = v.clone();
            }
        }
    }
    RTensor { r }
}

/// Nonzero coefficients of `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn cybe_residual(g: &LieAlgebra, r: &RTensor) -> BTreeMap<(usize, usize, usize), BigRational> {
    let dim = g.dim();
    let entries: Vec<(usize, usize, BigRational)> = (0..dim)
        .flat_map(|a| (0..dim).map(move |b| (a, b)))
        .filter(|&(a, b)| !r.r[(a, b)].is_zero())
        .map(|(a, b)| (a, b, r.r[(a, b)].clone()))
        .collect();
    let mut out: BTreeMap<(usize, usize, usize), BigRational> = BTreeMap::new();
    let mut add = |key: (usize, usize, usize), v: BigRational| {
        let e = out.entry(key).or_insert_with(BigRational::zero);
        *e += v;
    };
    for (a, b, x) in &entries {
        for (c, d, y) in &entries {
            let xy = x * y;
            for &(k, s) in g.basis_bracket(*a, *c) {
                add((k, *b, *d), &xy * int(s));
            }
            for &(k, s) in g.basis_bracket(*b, *c) {
                add((*a, k, *d), &xy * int(s));
            }
            for &(k, s) in g.basis_bracket(*b, *d) {
                add((*a, *c, k), &xy * int(s));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Nonzero entries of `(ad x ⊗ 1 + 1 ⊗ ad x)(s)` over all basis vectors `x`.
pub fn invariance_residual(g: &LieAlgebra, s: &Matrix<BigRational>) -> usize {
    (0..g.dim())
        .map(|k| {
            let ad = g.ad_basis(k);
            let m = ad.mul(s).add(&s.mul(&ad.transpose()));
            (0..g.dim()).flat_map(|i| (0..g.dim()).map(move |j| (i, j))).filter(|&(i, j)| !m[(i, j)].is_zero()).count()
        })
        .sum()
}
