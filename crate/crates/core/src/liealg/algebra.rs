use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::chevalley::chevalley_constants;
use crate::error::{Error, Result};
use crate::exactlin::{int, Field, Matrix, Subspace};
use crate::rootsys::RootSystem;

/// A reductive Lie algebra in a Chevalley basis.
///
/// Basis order: root vectors `e_α` in root-index order, then the simple
/// coroots `h_i`, then a basis `z_j` of the center. The invariant form has
/// `⟨e_α, e_{-α}⟩ = 2/(α, α)`, `⟨h_i, h_j⟩ = (α_i∨, α_j∨)` and the given
/// symmetric matrix on the center.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    center_form: Matrix<BigRational>,
    dim: usize,
    table: Vec<Vec<(usize, i64)>>,
    form: Vec<Vec<(usize, BigRational)>>,
    constants: HashMap<(usize, usize), i64>,
}

/// Builds `g = [g, g] ⊕ center` for a root system and a center form
/// (`None` means no center).
pub fn build_lie_algebra(rs: &RootSystem, center_form: Option<Matrix<BigRational>>) -> Result<LieAlgebra> {
    let center_form = center_form.unwrap_or_else(|| Matrix::zeros(0, 0));
    let c = center_form.rows();
    if center_form.cols() != c {
        return Err(Error::DimensionMismatch { expected: c, found: center_form.cols() });
    }
    if center_form != center_form.transpose() || center_form.rank() != c {
        return Err(Error::DegenerateCenterForm);
    }
    let n = rs.num_roots();
    let r = rs.rank();
    let dim = n + r + c;
    let constants = chevalley_constants(rs);

    let mut table = vec![Vec::new(); dim * dim];
    for a in 0..n {
        for b in 0..n {
            let entry = &mut table[a * dim + b];
            if b == rs.neg(a) {
                for (i, &k) in rs.coroot(a).iter().enumerate() {
                    if k != 0 {
                        entry.push((n + i, k));
                    }
                }
            } else if let Some(s) = rs.sum(a, b) {
                entry.push((s, constants[&(a, b)]));
            }
        }
        for i in 0..r {
            let k = rs.simple_pairing(a, i);
            if k != 0 {
                table[(n + i) * dim + a].push((a, k));
                table[a * dim + n + i].push((a, -k));
            }
        }
    }

    let mut form = vec![Vec::new(); dim];
    for a in 0..n {
        form[a].push((rs.neg(a), int(2) / rs.norm(a).clone()));
    }
    for i in 0..r {
        for j in 0..r {
            let v = int(4) * rs.gram()[i][j].clone() / (rs.gram()[i][i].clone() * rs.gram()[j][j].clone());
            if !v.is_zero() {
                form[n + i].push((n + j, v));
            }
        }
    }
    for i in 0..c {
        for j in 0..c {
            if !center_form[(i, j)].is_zero() {
                form[n + r + i].push((n + r + j, center_form[(i, j)].clone()));
            }
        }
    }
    Ok(LieAlgebra { rs: rs.clone(), center_form, dim, table, form, constants })
}

impl LieAlgebra {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn center_dim(&self) -> usize {
        self.center_form.rows()
    }

    pub fn center_form(&self) -> &Matrix<BigRational> {
        &self.center_form
    }

    /// Dimension of the full Cartan subalgebra, center included.
    pub fn cartan_dim(&self) -> usize {
        self.rank() + self.center_dim()
    }

    pub fn root_index(&self, alpha: usize) -> usize {
        alpha
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.rs.num_roots() + i
    }

    pub fn center_index(&self, j: usize) -> usize {
        self.rs.num_roots() + self.rank() + j
    }

    /// Basis indices of the Cartan subalgebra (simple coroots and center).
    pub fn cartan_range(&self) -> std::ops::Range<usize> {
        self.rs.num_roots()..self.dim
    }

    /// `N_{α,β}`, zero when `α + β` is not a root.
    pub fn structure_constant(&self, alpha: usize, beta: usize) -> i64 {
        self.constants.get(&(alpha, beta)).copied().unwrap_or(0)
    }

    pub fn basis_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (0..self.rs.num_roots())
            .map(|a| {
                let coords: Vec<String> = self.rs.root(a).iter().map(|c| c.to_string()).collect();
                format!("e({})", coords.join(","))
            })
            .collect();
        names.extend((1..=self.rank()).map(|i| format!("h{i}")));
        names.extend((1..=self.center_dim()).map(|j| format!("z{j}")));
        names
    }

    pub fn basis_vector<F: Field>(&self, k: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[k] = F::one();
        v
    }

    /// Bracket of basis vectors as a sparse integer combination.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim + j]
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let t = self.basis_bracket(i, j);
                if t.is_empty() {
                    continue;
                }
                let p = xi.mul_ref(yj);
                for &(k, c) in t {
                    out[k] = out[k].add_ref(&p.mul_ref(&F::from(int(c))));
                }
            }
        }
        out
    }

    /// Gram entries `⟨b_i, b_j⟩` of row `i` (sparse).
    pub fn form_row(&self, i: usize) -> &[(usize, BigRational)] {
        &self.form[i]
    }

    pub fn form<F: Field>(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, g) in &self.form[i] {
                if !y[*j].is_zero() {
                    acc = acc.add_ref(&xi.mul_ref(&y[*j]).mul_ref(&F::from(g.clone())));
                }
            }
        }
        acc
    }

    pub fn gram_matrix(&self) -> Matrix<BigRational> {
        let mut rows = vec![vec![int(0); self.dim]; self.dim];
        for (i, row) in self.form.iter().enumerate() {
            for (j, g) in row {
                rows[i][*j] = g.clone();
            }
        }
        Matrix::from_rows(self.dim, rows)
    }

    /// Matrix of `ad x` (column `j` is `[x, b_j]`).
    pub fn ad<F: Field>(&self, x: &[F]) -> Matrix<F> {
        let cols = (0..self.dim).map(|j| self.bracket(x, &self.basis_vector::<F>(j))).collect();
        Matrix::from_cols(self.dim, cols)
    }

    /// Matrix of `ad b_k` for a basis vector, with integer entries.
    pub fn ad_basis(&self, k: usize) -> Matrix<BigRational> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for &(i, c) in self.basis_bracket(k, j) {
                m[(i, j)] = int(c);
            }
        }
        m
    }

    pub fn root_vector<F: Field>(&self, alpha: usize) -> Vec<F> {
        self.basis_vector(self.root_index(alpha))
    }

    /// Coroot `α∨` as an element of `g`.
    pub fn coroot_vector<F: Field>(&self, alpha: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for (i, &k) in self.rs.coroot(alpha).iter().enumerate() {
            v[self.cartan_index(i)] = F::from(int(k));
        }
        v
    }

    /// Cartan component `x_h` (center included).
    pub fn cartan_projection<F: Field>(&self, x: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for k in self.cartan_range() {
            v[k] = x[k].clone();
        }
        v
    }

    /// Cartan component as a vector of length `rank + center_dim`.
    pub fn cartan_coords<F: Field>(&self, x: &[F]) -> Vec<F> {
        x[self.cartan_range()].to_vec()
    }

    /// Element of `g` with the given Cartan coordinates.
    pub fn from_cartan_coords<F: Field>(&self, h: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for (k, c) in self.cartan_range().zip(h) {
            v[k] = c.clone();
        }
        v
    }

    fn span_of(&self, idx: impl IntoIterator<Item = usize>) -> Subspace<BigRational> {
        Subspace::span(self.dim, idx.into_iter().map(|k| self.basis_vector(k)))
    }

    pub fn triangular_parts(&self) -> TriangularParts {
        let n = self.rs.num_roots();
        let pos: Vec<usize> = (0..n).filter(|&a| self.rs.is_positive(a)).collect();
        let neg: Vec<usize> = (0..n).filter(|&a| !self.rs.is_positive(a)).collect();
        TriangularParts {
            n_plus: self.span_of(pos.clone()),
            n_minus: self.span_of(neg.clone()),
            b_plus: self.span_of(pos.into_iter().chain(self.cartan_range())),
            b_minus: self.span_of(neg.into_iter().chain(self.cartan_range())),
            cartan: self.span_of(self.cartan_range()),
        }
    }

    /// Span of `[x, y]` over a basis of `s`.
    pub fn derived<F: Field>(&self, s: &Subspace<F>) -> Subspace<F> {
        let b = s.basis_vectors();
        let mut out = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                out.push(self.bracket(&b[i], &b[j]));
            }
        }
        Subspace::span(self.dim, out)
    }

    pub fn is_subalgebra<F: Field>(&self, s: &Subspace<F>) -> bool {
        let b = s.basis_vectors();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.bracket(&b[i], &b[j]))))
    }

    /// Whether `ad x` is nilpotent.
    pub fn is_ad_nilpotent<F: Field>(&self, x: &[F]) -> bool {
        let ad = self.ad(x);
        let mut p = ad.clone();
        for _ in 0..self.dim {
            if p.is_zero() {
                return true;
            }
            p = p.mul(&ad);
        }
        p.is_zero()
    }
}

/// `n₊, n₋, b₊ = h ⊕ n₊, b₋ = h ⊕ n₋` and `h` (center included).
#[derive(Clone, Debug)]
pub struct TriangularParts {
    pub n_plus: Subspace<BigRational>,
    pub n_minus: Subspace<BigRational>,
    pub b_plus: Subspace<BigRational>,
    pub b_minus: Subspace<BigRational>,
    pub cartan: Subspace<BigRational>,
}
