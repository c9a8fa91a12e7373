//! Admissible quadruples, the Lagrangian subalgebras they define, the inverse
//! decomposition, orbit labels, and the parameter-space dimensions.

mod catalog;
mod conjugacy;
mod decompose;
mod dims;
mod l0;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

pub use catalog::{enumerate_orbit_labels, CatalogEntry, Family, CATALOG_RANK_CAP};
pub use conjugacy::{torus_conjugate, weyl_conjugate};
pub use decompose::{decompose_l, Decomposition};
pub use dims::{dim_lambda, dim_xi, dim_xi_linearized, lagrangian_tangent_dim};
pub use l0::{family_sign, isometry_samples, l0_graph, witt_isometry};

use crate::double::{diag_intersection, join, verify_lagrangian, DoubleSubspace, LagrangianVerdict};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, Field, Matrix, Scalar, Subspace};
use crate::liealg::{
    build_xi, exp_ad, fixed_subalgebra, jacobson_morozov_characteristic, levi_subalgebra, parabolic_subalgebra,
    AlgebraMap, LieAlgebra, NilpotentDatum, ParabolicSubalgebra,
};
use crate::rootsys::{levi_of_sigma, preserves_simple_system, ParabolicSubset, RootIsometry, RootSet};

/// Parameter form `(P, P′, σ, ξ-scalars, x, l₀)` of an admissible quadruple.
///
/// `l0` rows live in `h × h` Cartan coordinates (simple coroots, then center,
/// for each factor) and must span a Lagrangian subspace of `z × z′`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple {
    pub p: RootSet,
    pub p_prime: RootSet,
    pub sigma: BTreeMap<usize, usize>,
    pub xi_scalars: BTreeMap<usize, Scalar>,
    pub x: Vec<Scalar>,
    pub l0: Vec<Vec<Scalar>>,
}

/// A validated quadruple with all derived data.
#[derive(Clone, Debug)]
pub struct Admissible {
    pub par: ParabolicSubalgebra,
    pub par_prime: ParabolicSubalgebra,
    pub sigma: RootIsometry,
    pub sigma_preserves_simple_system: bool,
    pub xi: AlgebraMap<Scalar>,
    pub nilpotent: NilpotentDatum<Scalar>,
    /// `θ ∘ π_a` with `θ = ξ · exp(ad x)`.
    pub theta: Matrix<Scalar>,
    pub l0: Subspace<Scalar>,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub admissible: Admissible,
    pub l: DoubleSubspace<Scalar>,
    pub verdict: LagrangianVerdict,
}

impl Construction {
    /// `l ∩ g_diag = 0`.
    pub fn diag_transverse(&self, g: &LieAlgebra) -> bool {
        diag_intersection(g, &self.l).dim() == 0
    }
}

/// Checks every admissibility condition and derives `θ`.
pub fn validate(g: &LieAlgebra, q: &Quadruple) -> Result<Admissible> {
    let rs = g.root_system();
    let par = parabolic_subalgebra(g, &ParabolicSubset::new(rs, q.p.clone())?);
    let par_prime = parabolic_subalgebra(g, &ParabolicSubset::new(rs, q.p_prime.clone())?);
    if par.z.dim() != par_prime.z.dim() {
        return Err(Error::CenterDimensionMismatch { z: par.z.dim(), z_prime: par_prime.z.dim() });
    }
    let sigma = RootIsometry::new(rs, par.subset.levi().clone(), par_prime.subset.levi().clone(), q.sigma.clone())?;
    let sigma_preserves_simple_system = preserves_simple_system(rs, &sigma)?;
    let xi = build_xi(g, &sigma, &q.xi_scalars)?;

    if q.x.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: q.x.len() });
    }
    let u = levi_subalgebra(g, &levi_of_sigma(&sigma)).lift::<Scalar>();
    let fixed = fixed_subalgebra(g, &xi, &u)?;
    if !fixed.fixed.contains(&q.x) {
        return Err(Error::NotInSubspace("x is not in the ξ-fixed part of [u, u]".into()));
    }
    let nilpotent = jacobson_morozov_characteristic(g, &q.x, Some(&fixed.fixed))?;
    let exp = exp_ad(g, &q.x)?;
    let theta = xi.matrix.mul(&exp.matrix).mul(&par.proj_a.lift());

    let l0 = validate_l0(g, &par, &par_prime, &q.l0)?;
    Ok(Admissible { par, par_prime, sigma, sigma_preserves_simple_system, xi, nilpotent, theta, l0 })
}

/// Form on `h × h` in Cartan coordinates: `⟨a, a′⟩ − ⟨b, b′⟩`.
pub(crate) fn cartan_double_form<F: Field>(g: &LieAlgebra, u: &[F], v: &[F]) -> F {
    let hl = g.cartan_dim();
    let lift = |w: &[F]| g.from_cartan_coords(w);
    g.form(&lift(&u[..hl]), &lift(&v[..hl])) - g.form(&lift(&u[hl..]), &lift(&v[hl..]))
}

fn validate_l0(
    g: &LieAlgebra,
    par: &ParabolicSubalgebra,
    par_prime: &ParabolicSubalgebra,
    rows: &[Vec<Scalar>],
) -> Result<Subspace<Scalar>> {
    let (nz, nz_prime) = (par.z.dim(), par_prime.z.dim());
    if nz != nz_prime {
        return Err(Error::CenterDimensionMismatch { z: nz, z_prime: nz_prime });
    }
    let hl = g.cartan_dim();
    if let Some(r) = rows.iter().find(|r| r.len() != 2 * hl) {
        return Err(Error::DimensionMismatch { expected: 2 * hl, found: r.len() });
    }
    let l0 = Subspace::span(2 * hl, rows.iter().cloned());
    let (z, z_prime) = (par.z.lift::<Scalar>(), par_prime.z.lift::<Scalar>());
    for r in l0.basis_vectors() {
        if !z.contains(&g.from_cartan_coords(&r[..hl])) || !z_prime.contains(&g.from_cartan_coords(&r[hl..])) {
            return Err(Error::InvalidL0("a vector does not lie in z × z'".into()));
        }
    }
    let b = l0.basis_vectors();
    if !(0..b.len()).all(|i| (i..b.len()).all(|j| cartan_double_form(g, &b[i], &b[j]).is_zero())) {
        return Err(Error::InvalidL0("not isotropic".into()));
    }
    if l0.dim() != nz {
        return Err(Error::InvalidL0(format!("dimension {} differs from dim z = {nz}", l0.dim())));
    }
    Ok(l0)
}

/// `{(x, y) ∈ p × p′ : θ(x_a) = y_{a′}, (x_z, y_{z′}) ∈ l₀}` as one kernel
/// computation. `theta` is `θ ∘ π_a` and `l0` is given in Cartan coordinates.
pub fn assemble_l(
    g: &LieAlgebra,
    par: &ParabolicSubalgebra,
    par_prime: &ParabolicSubalgebra,
    theta: &Matrix<Scalar>,
    l0: &Subspace<Scalar>,
) -> DoubleSubspace<Scalar> {
    let dim = g.dim();
    let hl = g.cartan_dim();
    let ann = l0.annihilator().basis_vectors();
    let (pz, pz_prime) = (par.proj_z.lift::<Scalar>(), par_prime.proj_z.lift::<Scalar>());
    let pa_prime = par_prime.proj_a.lift::<Scalar>();
    let bp = par.p.lift::<Scalar>().basis_vectors();
    let bq = par_prime.p.lift::<Scalar>().basis_vectors();

    let constraint = |w: &[Scalar], zc: &[Scalar], first: bool| -> Scalar {
        let range = if first { 0..hl } else { hl..2 * hl };
        let mut acc = Scalar::zero();
        for (wk, ck) in w[range].iter().zip(zc) {
            if !wk.is_zero() && !ck.is_zero() {
                acc = acc.add_ref(&wk.mul_ref(ck));
            }
        }
        acc
    };
    let mut cols = Vec::with_capacity(bp.len() + bq.len());
    for b in &bp {
        let mut col = theta.mul_vec(b);
        let zc = g.cartan_coords(&pz.mul_vec(b));
        col.extend(ann.iter().map(|w| constraint(w, &zc, true)));
        cols.push(col);
    }
    for b in &bq {
        let mut col: Vec<Scalar> = pa_prime.mul_vec(b).into_iter().map(|c| -c).collect();
        let zc = g.cartan_coords(&pz_prime.mul_vec(b));
        col.extend(ann.iter().map(|w| constraint(w, &zc, false)));
        cols.push(col);
    }
    let kernel = Matrix::from_cols(dim + ann.len(), cols).kernel();
    Subspace::span(
        2 * dim,
        kernel.to_rows().into_iter().map(|t| {
            let mut x = vec![Scalar::zero(); dim];
            let mut y = vec![Scalar::zero(); dim];
            for (tk, b) in t[..bp.len()].iter().zip(&bp) {
                axpy(&mut x, tk, b);
            }
            for (tk, b) in t[bp.len()..].iter().zip(&bq) {
                axpy(&mut y, tk, b);
            }
            join(&x, &y)
        }),
    )
}

pub fn construct_l(g: &LieAlgebra, q: &Quadruple) -> Result<Construction> {
    let admissible = validate(g, q)?;
    let l = assemble_l(g, &admissible.par, &admissible.par_prime, &admissible.theta, &admissible.l0);
    let verdict = verify_lagrangian(g, &l);
    Ok(Construction { admissible, l, verdict })
}

/// Cartan coordinates of the characteristic as rationals (for labels).
pub fn characteristic(a: &Admissible) -> Vec<BigRational> {
    a.nilpotent.h.clone()
}

#[cfg(test)]
mod tests;
