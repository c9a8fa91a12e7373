//! The space `X = Ḡ` in the adjoint representation with the bracket
//!
//! `{φ, ψ} = −r_alt(Dφ, Dψ) + r_sym(Dφ, Sψ)`, `D = ∂′ − ∂`, `S = ∂′ + ∂`,
//!
//! where `∂_a f(g) = d/dt f(exp(t ad_a) g)` and `∂′_a f(g) = d/dt f(g exp(t ad_a))`,
//! together with the subalgebras `l_g = {(g y, y)}` and their conjugates.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::double::{join, sklyanin_r, split, verify_lagrangian, DoubleSubspace};
use crate::error::{Error, Result};
use crate::exactlin::{rat, Matrix, Scalar, Subspace};
use crate::liealg::{exp_ad, weyl_representative, LieAlgebra};

pub const GEOM_RANK_CAP: usize = 2;
pub const FD_STEP: f64 = 1e-5;
pub const ANTISYMMETRY_TOL: f64 = 1e-9;
pub const JACOBI_TOL: f64 = 1e-6;

pub type CMatrix = DMatrix<Complex64>;

fn numeric(m: &Matrix<Scalar>) -> CMatrix {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let (re, im) = m[(i, j)].to_f64_pair();
        Complex64::new(re, im)
    })
}

/// A point of `X`: an automorphism in adjoint coordinates, with its exact
/// matrix when it was built from `exp(ad x)` factors and Weyl representatives.
#[derive(Clone, Debug)]
pub struct AutPoint {
    pub numeric: CMatrix,
    pub exact: Option<Matrix<Scalar>>,
}

impl AutPoint {
    pub fn from_exact(m: Matrix<Scalar>) -> Self {
        AutPoint { numeric: numeric(&m), exact: Some(m) }
    }

    pub fn identity(g: &LieAlgebra) -> Self {
        Self::from_exact(Matrix::identity(g.dim()))
    }

    /// `exp(ad x)` for nilpotent `x`.
    pub fn exp_nilpotent(g: &LieAlgebra, x: &[Scalar]) -> Result<Self> {
        Ok(Self::from_exact(exp_ad(g, x)?.matrix))
    }

    pub fn weyl(g: &LieAlgebra, word: &[usize]) -> Self {
        Self::from_exact(weyl_representative(g, word).matrix.lift())
    }

    /// `self · other`.
    pub fn compose(&self, other: &AutPoint) -> AutPoint {
        let exact = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Some(a.mul(b)),
            _ => None,
        };
        AutPoint { numeric: &self.numeric * &other.numeric, exact }
    }

    pub fn inverse(&self) -> Option<AutPoint> {
        match &self.exact {
            Some(m) => m.inverse().map(Self::from_exact),
            None => self.numeric.clone().try_inverse().map(|n| AutPoint { numeric: n, exact: None }),
        }
    }

    fn exact(&self) -> Result<&Matrix<Scalar>> {
        self.exact.as_ref().ok_or(Error::NotExact)
    }
}

/// The matrix-entry function `g ↦ g_{μν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoordFn {
    pub mu: usize,
    pub nu: usize,
}

/// Right and left derivative vectors `(∂_a f, ∂′_a f)` of a function at a point.
type Derivatives = (Vec<Complex64>, Vec<Complex64>);

/// Floating-point data of `g` needed to evaluate brackets on `X`.
pub struct GeomContext {
    dim: usize,
    ad: Vec<CMatrix>,
    r_alt: CMatrix,
    r_sym: CMatrix,
    shifts: Vec<[CMatrix; 2]>,
}

impl GeomContext {
    pub fn new(g: &LieAlgebra) -> Result<Self> {
        if g.rank() > GEOM_RANK_CAP {
            return Err(Error::RankCap { rank: g.rank(), cap: GEOM_RANK_CAP });
        }
        let dim = g.dim();
        let ad: Vec<CMatrix> = (0..dim).map(|k| numeric(&g.ad_basis(k).lift())).collect();
        let r = sklyanin_r(g);
        let r_alt = numeric(&r.alternating().lift());
        let r_sym = numeric(&r.symmetric().lift());
        let shifts = ad
            .iter()
            .map(|a| [(a * Complex64::new(FD_STEP, 0.0)).exp(), (a * Complex64::new(-FD_STEP, 0.0)).exp()])
            .collect();
        Ok(GeomContext { dim, ad, r_alt, r_sym, shifts })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn coord_derivatives(&self, f: CoordFn, p: &CMatrix) -> Derivatives {
        let right = self.ad.iter().map(|a| (0..self.dim).map(|k| a[(f.mu, k)] * p[(k, f.nu)]).sum()).collect();
        let left = self.ad.iter().map(|a| (0..self.dim).map(|k| p[(f.mu, k)] * a[(k, f.nu)]).sum()).collect();
        (right, left)
    }

    /// Central differences of an arbitrary function.
    fn fd_derivatives(&self, f: &dyn Fn(&CMatrix) -> Complex64, p: &CMatrix) -> Derivatives {
        let h2 = Complex64::new(2.0 * FD_STEP, 0.0);
        let right = self.shifts.iter().map(|[plus, minus]| (f(&(plus * p)) - f(&(minus * p))) / h2).collect();
        let left = self.shifts.iter().map(|[plus, minus]| (f(&(p * plus)) - f(&(p * minus))) / h2).collect();
        (right, left)
    }

    fn combine(&self, phi: &Derivatives, psi: &Derivatives) -> Complex64 {
        let d = |x: &Derivatives| -> Vec<Complex64> { x.1.iter().zip(&x.0).map(|(l, r)| l - r).collect() };
        let s = |x: &Derivatives| -> Vec<Complex64> { x.1.iter().zip(&x.0).map(|(l, r)| l + r).collect() };
        let (dphi, dpsi, spsi) = (d(phi), d(psi), s(psi));
        let mut total = Complex64::new(0.0, 0.0);
        for a in 0..self.dim {
            for b in 0..self.dim {
                total += -self.r_alt[(a, b)] * dphi[a] * dpsi[b] + self.r_sym[(a, b)] * dphi[a] * spsi[b];
            }
        }
        total
    }

    /// `{φ, ψ}(p)` for coordinate functions, in closed form.
    pub fn bracket_x(&self, phi: CoordFn, psi: CoordFn, p: &CMatrix) -> Complex64 {
        self.combine(&self.coord_derivatives(phi, p), &self.coord_derivatives(psi, p))
    }

    /// `{f, g}(p)` for arbitrary functions, derivatives by central differences.
    pub fn bracket_fd(&self, f: &dyn Fn(&CMatrix) -> Complex64, g: &dyn Fn(&CMatrix) -> Complex64, p: &CMatrix) -> Complex64 {
        self.combine(&self.fd_derivatives(f, p), &self.fd_derivatives(g, p))
    }

    /// `{φ, {ψ, χ}} + {ψ, {χ, φ}} + {χ, {φ, ψ}}` at `p`; inner brackets are
    /// closed form, outer derivatives of them are central differences.
    pub fn jacobiator(&self, phi: CoordFn, psi: CoordFn, chi: CoordFn, p: &CMatrix) -> Complex64 {
        let term = |a: CoordFn, b: CoordFn, c: CoordFn| {
            let inner = |q: &CMatrix| self.bracket_x(b, c, q);
            self.combine(&self.coord_derivatives(a, p), &self.fd_derivatives(&inner, p))
        };
        term(phi, psi, chi) + term(psi, chi, phi) + term(chi, phi, psi)
    }
}

/// `l_g = {(g y, y) : y ∈ g}`.
pub fn build_l_g(g: &LieAlgebra, p: &AutPoint) -> Result<DoubleSubspace<Scalar>> {
    let m = p.exact()?;
    let dim = g.dim();
    Ok(Subspace::span(2 * dim, (0..dim).map(|k| join(&m.col(k), &g.basis_vector::<Scalar>(k)))))
}

/// `(u, v) · s = {(u x, v y) : (x, y) ∈ s}`.
pub fn conjugate_subalgebra(
    g: &LieAlgebra,
    u: &AutPoint,
    v: &AutPoint,
    s: &DoubleSubspace<Scalar>,
) -> Result<DoubleSubspace<Scalar>> {
    let (mu, mv) = (u.exact()?, v.exact()?);
    Ok(Subspace::span(
        s.ambient(),
        s.basis_vectors().iter().map(|r| {
            let (x, y) = split(g, r);
            join(&mu.mul_vec(&x), &mv.mul_vec(&y))
        }),
    ))
}

/// A product of `factors` elements `exp(ad(t e_α))` with random roots and
/// random Gaussian rationals `t` with `|t| < 0.6`.
pub fn random_point(g: &LieAlgebra, rng: &mut ChaCha8Rng, factors: usize) -> AutPoint {
    let n = g.root_system().num_roots();
    let mut p = AutPoint::identity(g);
    for _ in 0..factors {
        let alpha = rng.gen_range(0..n);
        let t = Scalar::gaussian(rat(rng.gen_range(-2..=2), 4), rat(rng.gen_range(-1..=1), 4));
        let x: Vec<Scalar> = g.root_vector::<Scalar>(alpha).into_iter().map(|c| c * t.clone()).collect();
        p = p.compose(&AutPoint::exp_nilpotent(g, &x).expect("root vectors are nilpotent"));
    }
    p
}

/// Coordinate functions used for the Jacobi sweep.
pub fn panel(dim: usize) -> [CoordFn; 4] {
    let last = dim - 1;
    [
        CoordFn { mu: 0, nu: 0 },
        CoordFn { mu: 0, nu: 1 % dim },
        CoordFn { mu: last, nu: 0 },
        CoordFn { mu: 1 % dim, nu: last },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct GeomReport {
    pub points: usize,
    pub pairs_tested: usize,
    pub triples_tested: usize,
    pub max_antisymmetry_residual: f64,
    pub max_jacobi_residual: f64,
    pub max_identity_value: f64,
    pub l_g_checked: usize,
    pub l_g_lagrangian: usize,
    pub equivariance_checked: usize,
    pub equivariance_holds: usize,
}

impl GeomReport {
    pub fn passed(&self) -> bool {
        self.max_antisymmetry_residual < ANTISYMMETRY_TOL
            && self.max_jacobi_residual < JACOBI_TOL
            && self.max_identity_value < ANTISYMMETRY_TOL
            && self.l_g_lagrangian == self.l_g_checked
            && self.equivariance_holds == self.equivariance_checked
    }
}

/// Antisymmetry over all coordinate pairs and the Jacobiator over all panel
/// triples at `points` random points, plus exact checks of `l_g` and of
/// conjugation equivariance at `exact_points` of them.
pub fn geom_check(g: &LieAlgebra, seed: u64, points: usize, exact_points: usize) -> Result<GeomReport> {
    let ctx = GeomContext::new(g)?;
    let dim = ctx.dim();
    let coords: Vec<CoordFn> = (0..dim).flat_map(|mu| (0..dim).map(move |nu| CoordFn { mu, nu })).collect();
    let panel = panel(dim);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GeomReport {
        points,
        pairs_tested: 0,
        triples_tested: 0,
        max_antisymmetry_residual: 0.0,
        max_jacobi_residual: 0.0,
        max_identity_value: 0.0,
        l_g_checked: 0,
        l_g_lagrangian: 0,
        equivariance_checked: 0,
        equivariance_holds: 0,
    };
    let id = AutPoint::identity(g);
    for &a in &coords {
        for &b in &coords {
            report.max_identity_value = report.max_identity_value.max(ctx.bracket_x(a, b, &id.numeric).norm());
        }
    }
    for k in 0..points {
        let p = random_point(g, &mut rng, 3);
        for &a in &coords {
            for &b in &coords {
                let r = (ctx.bracket_x(a, b, &p.numeric) + ctx.bracket_x(b, a, &p.numeric)).norm();
                report.max_antisymmetry_residual = report.max_antisymmetry_residual.max(r);
                report.pairs_tested += 1;
            }
        }
        for &a in &panel {
            for &b in &panel {
                for &c in &panel {
                    let r = ctx.jacobiator(a, b, c, &p.numeric).norm();
                    report.max_jacobi_residual = report.max_jacobi_residual.max(r);
                    report.triples_tested += 1;
                }
            }
        }
        if k < exact_points {
            let l = build_l_g(g, &p)?;
            report.l_g_checked += 1;
            if verify_lagrangian(g, &l).lagrangian {
                report.l_g_lagrangian += 1;
            }
            let u = random_point(g, &mut rng, 2);
            let u_inv = u.inverse().expect("automorphisms are invertible");
            let lhs = build_l_g(g, &u.compose(&p).compose(&u_inv))?;
            let rhs = conjugate_subalgebra(g, &u, &u, &l)?;
            report.equivariance_checked += 1;
            if lhs == rhs {
                report.equivariance_holds += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
