use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::double::{split, verify_lagrangian, DoubleSubspace};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, Matrix, Scalar, Subspace};
use crate::liealg::{exp_ad, parabolic_subalgebra, LieAlgebra, ParabolicSubalgebra};
use crate::rootsys::{is_parabolic, ParabolicSubset, RootIsometry, RootSet};

/// Data recovered from a Lagrangian subalgebra.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub par: ParabolicSubalgebra,
    pub par_prime: ParabolicSubalgebra,
    /// `θ ∘ π_a`.
    pub theta: Matrix<Scalar>,
    /// `l₀` in `h × h` Cartan coordinates.
    pub l0: Subspace<Scalar>,
    /// `σ` and the ξ-scalars, when `θ` maps root vectors to root vectors.
    pub sigma: Option<RootIsometry>,
    pub xi_scalars: Option<BTreeMap<usize, Scalar>>,
    /// `c` with `(c, c)·s` standard, when `s` itself was not.
    pub conjugator: Option<Matrix<BigRational>>,
}

fn standard_subset(g: &LieAlgebra, q: &Subspace<Scalar>) -> Option<RootSet> {
    if !g.cartan_range().all(|k| q.contains(&g.basis_vector(k))) {
        return None;
    }
    let roots: RootSet = (0..g.root_system().num_roots()).filter(|&a| q.contains(&g.root_vector(a))).collect();
    (q.dim() == g.cartan_dim() + roots.len() && is_parabolic(g.root_system(), &roots)).then_some(roots)
}

fn projections(g: &LieAlgebra, s: &DoubleSubspace<Scalar>) -> (Subspace<Scalar>, Subspace<Scalar>) {
    let rows = s.basis_vectors();
    let first = Subspace::span(g.dim(), rows.iter().map(|r| split(g, r).0));
    let second = Subspace::span(g.dim(), rows.iter().map(|r| split(g, r).1));
    (first, second)
}

fn conjugate(g: &LieAlgebra, s: &DoubleSubspace<Scalar>, c: &Matrix<BigRational>) -> DoubleSubspace<Scalar> {
    let c = c.lift::<Scalar>();
    Subspace::span(
        2 * g.dim(),
        s.basis_vectors().iter().map(|r| {
            let (x, y) = split(g, r);
            crate::double::join(&c.mul_vec(&x), &c.mul_vec(&y))
        }),
    )
}

/// Products of at most two `exp(ad ±e_α)`, in a fixed order.
fn conjugators(g: &LieAlgebra) -> Vec<Matrix<BigRational>> {
    let n = g.root_system().num_roots();
    let mut singles = Vec::new();
    for a in 0..n {
        for sign in [1i64, -1] {
            let x: Vec<BigRational> = g.root_vector::<BigRational>(a).iter().map(|c| c * crate::exactlin::int(sign)).collect();
            singles.push(exp_ad(g, &x).expect("root vectors are nilpotent").matrix);
        }
    }
    let mut out = singles.clone();
    for a in &singles {
        for b in &singles {
            out.push(a.mul(b));
        }
    }
    out
}

/// Recovers `(p, p′, θ, l₀)` from a Lagrangian subalgebra, conjugating it
/// first when a projection is not a standard parabolic subalgebra.
pub fn decompose_l(g: &LieAlgebra, s: &DoubleSubspace<Scalar>) -> Result<Decomposition> {
    if !verify_lagrangian(g, s).lagrangian {
        return Err(Error::NotLagrangian("input fails verify_lagrangian".into()));
    }
    let (pr1, pr2) = projections(g, s);
    if let (Some(p), Some(pp)) = (standard_subset(g, &pr1), standard_subset(g, &pr2)) {
        return decompose_standard(g, s, &p, &pp, None);
    }
    for c in conjugators(g) {
        let t = conjugate(g, s, &c);
        let (pr1, pr2) = projections(g, &t);
        if let (Some(p), Some(pp)) = (standard_subset(g, &pr1), standard_subset(g, &pr2)) {
            return decompose_standard(g, &t, &p, &pp, Some(c));
        }
    }
    Err(Error::NonStandardProjection)
}

fn decompose_standard(
    g: &LieAlgebra,
    s: &DoubleSubspace<Scalar>,
    p: &RootSet,
    pp: &RootSet,
    conjugator: Option<Matrix<BigRational>>,
) -> Result<Decomposition> {
    let rs = g.root_system();
    let dim = g.dim();
    let par = parabolic_subalgebra(g, &ParabolicSubset::new(rs, p.clone())?);
    let par_prime = parabolic_subalgebra(g, &ParabolicSubset::new(rs, pp.clone())?);
    let (pa, pz) = (par.proj_a.lift::<Scalar>(), par.proj_z.lift::<Scalar>());
    let (pa2, pz2) = (par_prime.proj_a.lift::<Scalar>(), par_prime.proj_z.lift::<Scalar>());
    let rows = s.basis_vectors();
    let xs: Vec<Vec<Scalar>> = rows.iter().map(|r| split(g, r).0).collect();
    let ys: Vec<Vec<Scalar>> = rows.iter().map(|r| split(g, r).1).collect();

    // θ(v) = π_{a′}(y) for any (x, y) ∈ l with π_a(x) = v
    let system = Matrix::from_cols(dim, xs.iter().map(|x| pa.mul_vec(x)).collect());
    let theta_of = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        let c = system.solve(v).ok_or_else(|| Error::NotLagrangian("π_a(l) does not cover a".into()))?;
        let mut out = vec![Scalar::zero(); dim];
        for (ck, y) in c.iter().zip(&ys) {
            axpy(&mut out, ck, &pa2.mul_vec(y));
        }
        Ok(out)
    };
    let mut cols = Vec::with_capacity(dim);
    for k in 0..dim {
        let b = g.basis_vector::<Scalar>(k);
        let v = pa.mul_vec(&b);
        cols.push(if v.iter().all(|c| c.is_zero()) { vec![Scalar::zero(); dim] } else { theta_of(&v)? });
    }
    let theta = Matrix::from_cols(dim, cols);

    let hl = g.cartan_dim();
    let l0 = Subspace::span(
        2 * hl,
        xs.iter().zip(&ys).map(|(x, y)| {
            let mut v = g.cartan_coords(&pz.mul_vec(x));
            v.extend(g.cartan_coords(&pz2.mul_vec(y)));
            v
        }),
    );

    let (sigma, xi_scalars) = monomial_data(g, &par, &par_prime, &theta);
    Ok(Decomposition { par, par_prime, theta, l0, sigma, xi_scalars, conjugator })
}

fn monomial_data(
    g: &LieAlgebra,
    par: &ParabolicSubalgebra,
    par_prime: &ParabolicSubalgebra,
    theta: &Matrix<Scalar>,
) -> (Option<RootIsometry>, Option<BTreeMap<usize, Scalar>>) {
    let rs = g.root_system();
    let mut map = BTreeMap::new();
    let mut coeff = BTreeMap::new();
    for a in par.subset.levi().iter() {
        let img = theta.col(a);
        let support: Vec<usize> = (0..g.dim()).filter(|&k| !img[k].is_zero()).collect();
        match support.as_slice() {
            [b] if *b < rs.num_roots() => {
                map.insert(a, *b);
                coeff.insert(a, img[*b].clone());
            }
            _ => return (None, None),
        }
    }
    let Ok(sigma) = RootIsometry::new(rs, par.subset.levi().clone(), par_prime.subset.levi().clone(), map) else {
        return (None, None);
    };
    let scalars = par.levi.base().iter().map(|&d| (d, coeff[&d].clone())).collect();
    (Some(sigma), Some(scalars))
}

impl Decomposition {
    /// `construct_l` on the recovered data, moved back by the conjugator.
    pub fn rebuild(&self, g: &LieAlgebra) -> DoubleSubspace<Scalar> {
        let l = super::assemble_l(g, &self.par, &self.par_prime, &self.theta, &self.l0);
        match &self.conjugator {
            None => l,
            Some(c) => conjugate(g, &l, &c.inverse().expect("group elements are invertible")),
        }
    }
}
