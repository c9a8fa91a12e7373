//! Integrability of `l ∩ g_diag`: the subspace `V ⊂ h` and the two lattice
//! criteria (algebraic: `V` defined over `ℚ` in lattice coordinates; closed:
//! `V ∩ t` spanned by lattice vectors, `t` the real span of the lattice).
//!
//! The factor `2πi` of the exponential kernel is dropped throughout: all
//! statements are about rational structure, which is scale invariant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{hnf, int, integer_left_kernel, Matrix, Scalar, Subspace};
use crate::lagrange::Admissible;
use crate::liealg::{sigma_vee, LieAlgebra};

/// A full-rank lattice `ℒ ⊂ h` in Cartan coordinates (simple coroots, then
/// center), stored as the Hermite normal form of its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupForm {
    basis: Vec<Vec<BigRational>>,
}

fn lcm_of_denominators<'a>(entries: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    entries.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

fn to_integer_rows(rows: &[Vec<BigRational>], scale: &BigInt) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|c| (c * BigRational::from(scale.clone())).to_integer()).collect()).collect()
}

impl GroupForm {
    /// The lattice spanned by `rows`; fails unless the rows span `ℚ^{dim h}`.
    pub fn from_rows(g: &LieAlgebra, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let hl = g.cartan_dim();
        if let Some(r) = rows.iter().find(|r| r.len() != hl) {
            return Err(Error::DimensionMismatch { expected: hl, found: r.len() });
        }
        if Matrix::from_rows(hl, rows.clone()).rank() != hl {
            return Err(Error::Schema(format!("group lattice must have rank {hl}")));
        }
        let d = lcm_of_denominators(rows.iter().flatten());
        let lattice = hnf(hl, &to_integer_rows(&rows, &d));
        let dr = BigRational::from(d);
        let basis = lattice.basis().iter().map(|r| r.iter().map(|c| BigRational::from(c.clone()) / &dr).collect()).collect();
        Ok(GroupForm { basis })
    }

    /// Coroot lattice of `[g, g]` plus `center` (or `ℤ^c`) on the center.
    pub fn simply_connected(g: &LieAlgebra, center: Option<Vec<Vec<BigRational>>>) -> Result<Self> {
        let rank = g.rank();
        let mut rows: Vec<Vec<BigRational>> =
            (0..rank).map(|i| (0..g.cartan_dim()).map(|k| if k == i { int(1) } else { int(0) }).collect()).collect();
        rows.extend(Self::center_rows(g, center)?);
        Self::from_rows(g, rows)
    }

    /// Kernel lattice of the adjoint group: coweights of `[g, g]` plus
    /// `center` (or `ℤ^c`) on the center.
    pub fn adjoint(g: &LieAlgebra, center: Option<Vec<Vec<BigRational>>>) -> Result<Self> {
        let rs = g.root_system();
        let rank = g.rank();
        let hl = g.cartan_dim();
        let pairing = Matrix::from_rows(
            rank,
            (0..rank)
                .map(|j| {
                    (0..rank)
                        .map(|k| {
                            let mut e = vec![int(0); rank];
                            e[k] = int(1);
                            rs.eval_on_cartan(rs.simple(j), &e)
                        })
                        .collect()
                })
                .collect(),
        );
        let inv = pairing.inverse().expect("Cartan matrix is invertible");
        let mut rows: Vec<Vec<BigRational>> = (0..rank)
            .map(|i| {
                let mut r = inv.col(i);
                r.resize(hl, int(0));
                r
            })
            .collect();
        rows.extend(Self::center_rows(g, center)?);
        Self::from_rows(g, rows)
    }

    fn center_rows(g: &LieAlgebra, center: Option<Vec<Vec<BigRational>>>) -> Result<Vec<Vec<BigRational>>> {
        let (rank, c) = (g.rank(), g.center_dim());
        let center = center.unwrap_or_else(|| {
            (0..c).map(|i| (0..c).map(|k| if k == i { int(1) } else { int(0) }).collect()).collect()
        });
        center
            .into_iter()
            .map(|r| {
                if r.len() != c {
                    return Err(Error::DimensionMismatch { expected: c, found: r.len() });
                }
                let mut row = vec![int(0); rank];
                row.extend(r);
                Ok(row)
            })
            .collect()
    }

    /// Preset by name: `adjoint` or `simply-connected`.
    pub fn preset(g: &LieAlgebra, name: &str, center: Option<Vec<Vec<BigRational>>>) -> Result<Self> {
        match name {
            "adjoint" => Self::adjoint(g, center),
            "simply-connected" => Self::simply_connected(g, center),
            other => Err(Error::Schema(format!("unknown group form preset {other:?}"))),
        }
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    /// `W ∩ ℒ` for a subspace `W` defined over `ℚ`, in lattice coordinates (HNF).
    fn sublattice(&self, w: &Subspace<BigRational>) -> Vec<Vec<BigInt>> {
        let n = self.basis.len();
        let ann = w.annihilator().basis_vectors();
        let rows: Vec<Vec<BigRational>> =
            self.basis.iter().map(|b| ann.iter().map(|a| crate::exactlin::dot(b, a)).collect()).collect();
        let d = lcm_of_denominators(rows.iter().flatten());
        let kernel = integer_left_kernel(ann.len(), &to_integer_rows(&rows, &d));
        hnf(n, &kernel).basis().to_vec()
    }
}

/// Evidence attached to a lattice test.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// HNF basis, in lattice coordinates, of the sublattice spanning the subspace.
    Sublattice(Vec<Vec<BigInt>>),
    /// A basis vector (Cartan coordinates) with an irrational entry.
    Direction(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicTest {
    pub algebraic: bool,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedTest {
    pub closed: bool,
    /// `V ∩ t`.
    pub real_part: Subspace<Scalar>,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegrabilityVerdict {
    pub v: Subspace<Scalar>,
    pub algebraic: AlgebraicTest,
    pub closed: ClosedTest,
}

/// `Some(W)` when the reduced basis of `s` is rational.
fn rational_form(s: &Subspace<Scalar>) -> std::result::Result<Subspace<BigRational>, Vec<Scalar>> {
    let mut rows = Vec::with_capacity(s.dim());
    for v in s.basis_vectors() {
        match v.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>() {
            Some(r) => rows.push(r),
            None => return Err(v),
        }
    }
    Ok(Subspace::span(s.ambient(), rows))
}

fn lattice_test(s: &Subspace<Scalar>, gf: &GroupForm) -> (bool, Witness) {
    match rational_form(s) {
        Ok(w) => (true, Witness::Sublattice(gf.sublattice(&w))),
        Err(v) => (false, Witness::Direction(v)),
    }
}

/// `V = {x ∈ h : (x_z, x_{z′}) ∈ l₀, σ∨(x_h̃) = x_h̃′}` in Cartan coordinates.
pub fn compute_v(g: &LieAlgebra, a: &Admissible) -> Subspace<Scalar> {
    let hl = g.cartan_dim();
    let pz = a.par.proj_z.lift::<Scalar>();
    let pz2 = a.par_prime.proj_z.lift::<Scalar>();
    let sv = sigma_vee(g, &a.sigma).lift::<Scalar>();
    let ann = a.l0.annihilator().basis_vectors();
    let cols: Vec<Vec<Scalar>> = g
        .cartan_range()
        .map(|k| {
            let e = g.basis_vector::<Scalar>(k);
            let (z, z2) = (pz.mul_vec(&e), pz2.mul_vec(&e));
            let mut zz = g.cartan_coords(&z);
            zz.extend(g.cartan_coords(&z2));
            let mut col: Vec<Scalar> = ann.iter().map(|w| crate::exactlin::dot(w, &zz)).collect();
            let h_tilde = crate::exactlin::vec_sub(&e, &z);
            let h_tilde2 = crate::exactlin::vec_sub(&e, &z2);
            col.extend(g.cartan_coords(&crate::exactlin::vec_sub(&sv.mul_vec(&h_tilde), &h_tilde2)));
            col
        })
        .collect();
    let m = Matrix::from_cols(ann.len() + hl, cols);
    Subspace::from_matrix(&m.kernel())
}

/// Whether `V` is spanned by rational lattice vectors.
pub fn test_algebraic(v: &Subspace<Scalar>, gf: &GroupForm) -> AlgebraicTest {
    let (algebraic, witness) = lattice_test(v, gf);
    AlgebraicTest { algebraic, witness }
}

/// Whether `V ∩ t` is spanned by lattice vectors. The lattice has a rational
/// basis, so `t` is the real points of `h` in Cartan coordinates and
/// `V ∩ t` is cut out by the real and imaginary parts of `ann(V)`.
pub fn test_closed(v: &Subspace<Scalar>, gf: &GroupForm) -> ClosedTest {
    let n = v.ambient();
    let ann = v.annihilator().basis_vectors();
    let real_part = if ann.is_empty() {
        Subspace::full(n)
    } else {
        let rows: Vec<Vec<Scalar>> = ann
            .iter()
            .flat_map(|w| [w.iter().map(Scalar::re).collect::<Vec<_>>(), w.iter().map(Scalar::im).collect()])
            .collect();
        Subspace::from_matrix(&Matrix::from_rows(n, rows).kernel())
    };
    let (closed, witness) = lattice_test(&real_part, gf);
    ClosedTest { closed, real_part, witness }
}

pub fn integrability_verdict(g: &LieAlgebra, a: &Admissible, gf: &GroupForm) -> IntegrabilityVerdict {
    let v = compute_v(g, a);
    let algebraic = test_algebraic(&v, gf);
    let closed = test_closed(&v, gf);
    IntegrabilityVerdict { v, algebraic, closed }
}

impl IntegrabilityVerdict {
    pub fn is_algebraic(&self) -> bool {
        self.algebraic.algebraic
    }

    pub fn is_closed(&self) -> bool {
        self.closed.closed
    }
}

#[cfg(test)]
mod tests;
