use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;

use super::{LieAlgebra, SemisimplePart};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, int, is_zero_vec, Field, Matrix, Subspace};
use crate::rootsys::RootIsometry;

/// A linear map defined on a subspace of `g`, stored as a `dim g × dim g`
/// matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap<F> {
    pub domain: Subspace<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> AlgebraMap<F> {
    pub fn identity(dim: usize) -> Self {
        AlgebraMap { domain: Subspace::full(dim), matrix: Matrix::identity(dim) }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`, defined on the domain of `other`.
    pub fn compose(&self, other: &AlgebraMap<F>) -> AlgebraMap<F> {
        AlgebraMap { domain: other.domain.clone(), matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn is_homomorphism(&self, g: &LieAlgebra) -> bool {
        let b = self.domain.basis_vectors();
        let img: Vec<Vec<F>> = b.iter().map(|v| self.apply(v)).collect();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.apply(&g.bracket(&b[i], &b[j])) == g.bracket(&img[i], &img[j])))
    }

    pub fn is_isometry(&self, g: &LieAlgebra) -> bool {
        let b = self.domain.basis_vectors();
        let img: Vec<Vec<F>> = b.iter().map(|v| self.apply(v)).collect();
        (0..b.len()).all(|i| (i..b.len()).all(|j| g.form(&b[i], &b[j]) == g.form(&img[i], &img[j])))
    }

    /// Image of the domain.
    pub fn image(&self) -> Subspace<F> {
        self.domain.image(&self.matrix)
    }
}


/// `σ∨ : h̃ → h̃′`, `α∨ ↦ σ(α)∨`, extended by zero on `z` and on root spaces.
pub fn sigma_vee(g: &LieAlgebra, sigma: &RootIsometry) -> Matrix<BigRational> {
    let part = SemisimplePart::new(g, sigma.source());
    let dim = g.dim();
    let images: Vec<Vec<BigRational>> =
        part.base().iter().map(|&d| g.coroot_vector(sigma.apply(d).expect("base root lies in A"))).collect();
    let cols = (0..dim)
        .map(|k| {
            let mut col = vec![int(0); dim];
            if g.cartan_range().contains(&k) {
                for (t, img) in part.h_tilde_coeffs(g, &g.basis_vector(k)).iter().zip(&images) {
                    axpy(&mut col, t, img);
                }
            }
            col
        })
        .collect();
    Matrix::from_cols(dim, cols)
}

/// The isomorphism `ξ : a → a′` with `ξ(e_δ) = c_δ e_{σδ}` on the simple roots of `A`.
///
/// Values on the other root vectors are forced by bracket compatibility:
/// `ξ(e_{δ+γ}) = c_δ c_γ N_{σδ,σγ}/N_{δ,γ} e_{σ(δ+γ)}` and `c_{-β} = 1/c_β`.
/// The returned matrix is `ξ ∘ π_a`.
pub fn build_xi<F: Field>(g: &LieAlgebra, sigma: &RootIsometry, scalars: &BTreeMap<usize, F>) -> Result<AlgebraMap<F>> {
    let rs = g.root_system();
    let part = SemisimplePart::new(g, sigma.source());
    for &k in scalars.keys() {
        if !part.base().contains(&k) {
            return Err(Error::Schema(format!("xi scalar given for root {k}, which is not a simple root of A")));
        }
    }
    let mut c: HashMap<usize, F> = HashMap::new();
    for &d in part.base() {
        let v = scalars.get(&d).ok_or(Error::MissingScalar(d))?;
        if v.is_zero() {
            return Err(Error::ZeroScalar(d));
        }
        c.insert(d, v.clone());
    }
    let positive: Vec<usize> = sigma.source().iter().filter(|&b| rs.is_positive(b)).collect();
    for &beta in &positive {
        if c.contains_key(&beta) {
            continue;
        }
        let (d, gam) = part
            .base()
            .iter()
            .find_map(|&d| rs.difference(beta, d).filter(|&x| rs.is_positive(x) && sigma.source().contains(x)).map(|x| (d, x)))
            .expect("non-simple positive root decomposes");
        let (sd, sg) = (sigma.apply(d).unwrap(), sigma.apply(gam).unwrap());
        let ratio = int(g.structure_constant(sd, sg)) / int(g.structure_constant(d, gam));
        let v = c[&d].mul_ref(&c[&gam]).mul_ref(&F::from(ratio));
        c.insert(beta, v);
    }
    for &beta in &positive {
        let inv = c[&beta].inv().expect("nonzero scalar");
        c.insert(rs.neg(beta), inv);
    }

    let dim = g.dim();
    let sv = sigma_vee(g, sigma).lift::<F>();
    let cols = (0..dim)
        .map(|k| {
            if g.cartan_range().contains(&k) {
                sv.col(k)
            } else if let Some(ck) = c.get(&k) {
                let mut col = vec![F::zero(); dim];
                col[sigma.apply(k).unwrap()] = ck.clone();
                col
            } else {
                vec![F::zero(); dim]
            }
        })
        .collect();
    let map = AlgebraMap { domain: part.subalgebra(g).lift(), matrix: Matrix::from_cols(dim, cols) };

    if let Some(alpha) = sigma.source().iter().find(|&a| {
        let (u, v) = (g.root_vector::<F>(a), g.root_vector::<F>(rs.neg(a)));
        g.form(&map.apply(&u), &map.apply(&v)) != g.form(&u, &v)
    }) {
        return Err(Error::FormViolation(alpha));
    }
    if !map.is_homomorphism(g) {
        return Err(Error::NotHomomorphism("bracket compatibility fails on a".into()));
    }
    if !map.is_isometry(g) {
        return Err(Error::NotHomomorphism("form is not preserved on h̃".into()));
    }
    Ok(map)
}

/// `exp(ad x) = Σ (ad x)^k / k!` for ad-nilpotent `x`.
pub fn exp_ad<F: Field>(g: &LieAlgebra, x: &[F]) -> Result<AlgebraMap<F>> {
    let ad = g.ad(x);
    let dim = g.dim();
    let mut total = Matrix::identity(dim);
    let mut term = Matrix::identity(dim);
    for k in 1..=dim + 1 {
        term = term.mul(&ad).scale(&F::from(int(1) / int(k as i64)));
        if term.is_zero() {
            return Ok(AlgebraMap { domain: Subspace::full(dim), matrix: total });
        }
        total = total.add(&term);
    }
    Err(Error::NotNilpotent)
}

/// The fixed points of `φ` on `[u, u]` and their Cartan part.
#[derive(Clone, Debug)]
pub struct FixedSubalgebra<F> {
    pub fixed: Subspace<F>,
    pub cartan: Subspace<F>,
}

pub fn fixed_subalgebra<F: Field>(g: &LieAlgebra, phi: &AlgebraMap<F>, u: &Subspace<F>) -> Result<FixedSubalgebra<F>> {
    for v in u.basis_vectors() {
        if !u.contains(&phi.apply(&v)) {
            return Err(Error::NotEndomorphism);
        }
    }
    let du = g.derived(u);
    let b = du.basis_vectors();
    let dim = g.dim();
    let cols: Vec<Vec<F>> =
        b.iter().map(|v| crate::exactlin::vec_sub(&phi.apply(v), v)).collect();
    let fixed = if b.is_empty() {
        Subspace::zero(dim)
    } else {
        let kernel = Matrix::from_cols(dim, cols).kernel();
        Subspace::span(
            dim,
            kernel.to_rows().into_iter().map(|t| {
                let mut v = vec![F::zero(); dim];
                for (tk, bk) in t.iter().zip(&b) {
                    axpy(&mut v, tk, bk);
                }
                v
            }),
        )
    };
    let cartan_space: Subspace<F> = Subspace::span(dim, g.cartan_range().map(|k| g.basis_vector(k)));
    let cartan = fixed.meet(&cartan_space)?;
    debug_assert!(fixed.basis_vectors().iter().all(|v| !is_zero_vec(v)));
    Ok(FixedSubalgebra { fixed, cartan })
}

/// `n_i = exp(ad e_i) exp(ad -f_i) exp(ad e_i)`, which maps `g_β` onto `g_{s_i β}`.
pub fn simple_reflection_representative(g: &LieAlgebra, i: usize) -> Matrix<BigRational> {
    let rs = g.root_system();
    let a = rs.simple(i);
    let e = exp_ad::<BigRational>(g, &g.root_vector(a)).expect("root vectors are nilpotent").matrix;
    let f: Vec<BigRational> = g.root_vector::<BigRational>(rs.neg(a)).iter().map(|c| -c.clone()).collect();
    let f = exp_ad::<BigRational>(g, &f).expect("root vectors are nilpotent").matrix;
    e.mul(&f).mul(&e)
}

/// Representative `n_{i1} ⋯ n_{ik}` of the Weyl element with the given word.
pub fn weyl_representative(g: &LieAlgebra, word: &[usize]) -> AlgebraMap<BigRational> {
    let mut m = Matrix::identity(g.dim());
    for &i in word {
        m = m.mul(&simple_reflection_representative(g, i));
    }
    AlgebraMap { domain: Subspace::full(g.dim()), matrix: m }
}
