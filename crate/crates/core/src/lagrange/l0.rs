use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{int, Matrix, Scalar, Subspace};
use crate::liealg::{LieAlgebra, SemisimplePart};
use crate::rootsys::RootIsometry;

fn cartan_gram(g: &LieAlgebra) -> Matrix<BigRational> {
    let hl = g.cartan_dim();
    let basis: Vec<Vec<BigRational>> = g.cartan_range().map(|k| g.basis_vector(k)).collect();
    Matrix::from_rows(hl, (0..hl).map(|i| (0..hl).map(|j| g.form(&basis[i], &basis[j])).collect()).collect())
}

/// An isometry of `h` (Cartan coordinates) extending `σ∨ : h̃ → h̃′`; it maps
/// `z` onto `z′`. Built as a product of reflections `s_{u−v}`.
pub fn witt_isometry(g: &LieAlgebra, sigma: &RootIsometry) -> Result<Matrix<BigRational>> {
    let hl = g.cartan_dim();
    let gram = cartan_gram(g);
    let part = SemisimplePart::new(g, sigma.source());
    let mut m = Matrix::identity(hl);
    for (&d, c) in part.base().iter().zip(part.base_coroots()) {
        let u = m.mul_vec(&g.cartan_coords(c));
        let v = g.cartan_coords(&g.coroot_vector::<BigRational>(sigma.apply(d).expect("base root lies in A")));
        if u == v {
            continue;
        }
        let diff: Vec<BigRational> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
        let gd = gram.mul_vec(&diff);
        let norm = crate::exactlin::dot(&diff, &gd);
        if norm.is_zero() {
            return Err(Error::NoIsometry);
        }
        // s(w) = w − 2 ⟨w, d⟩/⟨d, d⟩ d
        let factor = int(2) / norm;
        let refl = Matrix::from_rows(
            hl,
            (0..hl)
                .map(|i| (0..hl).map(|j| {
                    let delta = if i == j { BigRational::one() } else { BigRational::zero() };
                    delta - factor.clone() * diff[i].clone() * gd[j].clone()
                }).collect())
                .collect(),
        );
        m = refl.mul(&m);
    }
    Ok(m)
}

/// Cartan-coordinate basis of a subspace of `h` given in `g` coordinates.
pub(crate) fn cartan_basis(g: &LieAlgebra, s: &Subspace<BigRational>) -> Vec<Vec<BigRational>> {
    s.basis_vectors().iter().map(|v| g.cartan_coords(v)).collect()
}

/// Orthogonal maps `ψ` of `z` (matrices in the given basis of `z`, acting on
/// coordinate columns) together with `det ψ`: identity, a reflection, and for
/// `dim z ≥ 2` Cayley transforms of skew maps with the given parameters and
/// their compositions with the reflection.
pub fn isometry_samples(g: &LieAlgebra, z: &[Vec<BigRational>], params: &[BigRational]) -> Vec<(i32, Matrix<BigRational>)> {
    let n = z.len();
    if n == 0 {
        return vec![(1, Matrix::identity(0))];
    }
    let gram = cartan_gram(g);
    let gz = Matrix::from_rows(n, z.iter().map(|a| z.iter().map(|b| crate::exactlin::dot(a, &gram.mul_vec(b))).collect()).collect());
    let mut out = vec![(1, Matrix::identity(n))];
    // reflection in a non-isotropic vector of z
    let r = (0..n)
        .map(|k| {
            let mut e = vec![int(0); n];
            e[k] = int(1);
            e
        })
        .chain((0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| {
            let mut e = vec![int(0); n];
            e[a] = int(1);
            e[b] = int(1);
            e
        }))
        .find(|e| !crate::exactlin::dot(e, &gz.mul_vec(e)).is_zero())
        .expect("form on z is nondegenerate");
    let gr = gz.mul_vec(&r);
    let nr = crate::exactlin::dot(&r, &gr);
    let refl = Matrix::from_rows(
        n,
        (0..n)
            .map(|i| (0..n).map(|j| {
                let delta = if i == j { int(1) } else { int(0) };
                delta - int(2) * r[i].clone() * gr[j].clone() / nr.clone()
            }).collect())
            .collect(),
    );
    out.push((-1, refl.clone()));
    if n >= 2 {
        let gz_inv = gz.inverse().expect("nondegenerate");
        for q in params {
            let mut s = Matrix::zeros(n, n);
            s[(0, 1)] = q.clone();
            s[(1, 0)] = -q.clone();
            let k = gz_inv.mul(&s);
            let id = Matrix::identity(n);
            if let Some(inv) = id.add(&k).inverse() {
                let cay = id.sub(&k).mul(&inv);
                out.push((1, cay.clone()));
                out.push((-1, refl.mul(&cay)));
            }
        }
    }
    out
}

/// Rows of the graph `{(a, T ψ a) : a ∈ z}` in `h × h` Cartan coordinates.
pub fn l0_graph(z: &[Vec<BigRational>], t: &Matrix<BigRational>, psi: &Matrix<BigRational>) -> Vec<Vec<Scalar>> {
    let n = z.len();
    (0..n)
        .map(|j| {
            let mut img = vec![int(0); z.first().map_or(0, |v| v.len())];
            for i in 0..n {
                crate::exactlin::axpy(&mut img, &psi[(i, j)], &z[i]);
            }
            let b = t.mul_vec(&img);
            z[j].iter().chain(&b).map(|c| Scalar::from(c.clone())).collect()
        })
        .collect()
}

/// `det(T⁻¹ L)` when `l₀` is the graph of an isometry `L : z → z′`.
pub fn family_sign(
    z: &[Vec<BigRational>],
    t: &Matrix<BigRational>,
    l0: &Subspace<Scalar>,
) -> Option<i32> {
    let n = z.len();
    if n == 0 {
        return Some(1);
    }
    let hl = z[0].len();
    let rows = l0.basis_vectors();
    if rows.len() != n {
        return None;
    }
    let zs: Matrix<Scalar> = Matrix::from_cols(hl, z.iter().map(|v| v.iter().map(|c| Scalar::from(c.clone())).collect()).collect());
    let t_inv = t.inverse()?.lift::<Scalar>();
    let mut a_cols = Vec::new();
    let mut b_cols = Vec::new();
    for r in &rows {
        a_cols.push(zs.solve(&r[..hl])?);
        b_cols.push(zs.solve(&t_inv.mul_vec(&r[hl..]))?);
    }
    let a = Matrix::from_cols(n, a_cols);
    let b = Matrix::from_cols(n, b_cols);
    let det_a = a.determinant();
    if det_a.is_zero() {
        return None;
    }
    let d = b.determinant() / det_a;
    if d == Scalar::one() {
        Some(1)
    } else if d == -Scalar::one() {
        Some(-1)
    } else {
        None
    }
}

