use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, vec_scale, Field, Matrix, Subspace};

/// A nilpotent element with its characteristic in the fixed Cartan subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentDatum<F> {
    pub x: Vec<F>,
    /// Cartan coordinates (simple coroots, then center) of `h` with `[h, x] = 2x`.
    pub h: Vec<BigRational>,
    /// The dominant `W`-conjugate of `h`.
    pub dominant: Vec<BigRational>,
    /// `w` with `w(h) = dominant`.
    pub to_dominant: Vec<usize>,
}

/// Characteristic of a nilpotent `x`: a Cartan element `h` (inside `k` when
/// given) with `[h, x] = 2x` and `h = [x, y]` for some `y ∈ k`.
pub fn jacobson_morozov_characteristic<F: Field>(
    g: &LieAlgebra,
    x: &[F],
    k: Option<&Subspace<F>>,
) -> Result<NilpotentDatum<F>> {
    let dim = g.dim();
    let center_free = g.cartan_range().skip(g.rank()).all(|i| x[i].is_zero());
    if !center_free || !g.is_ad_nilpotent(x) {
        return Err(Error::NotNilpotent);
    }
    if let Some(k) = k {
        if !k.contains(x) {
            return Err(Error::NotInSubspace("nilpotent is outside the given subalgebra".into()));
        }
    }
    let h_len = g.cartan_dim();
    let zero_h = vec![BigRational::zero(); h_len];
    if is_zero_vec(x) {
        return Ok(NilpotentDatum { x: x.to_vec(), h: zero_h.clone(), dominant: zero_h, to_dominant: Vec::new() });
    }
    let full: Subspace<F> = Subspace::full(dim);
    let k = k.unwrap_or(&full);
    let cartan: Subspace<F> = Subspace::span(dim, g.cartan_range().map(|i| g.basis_vector(i)));
    let hk = k.meet(&cartan)?.basis_vectors();
    let kb = k.basis_vectors();

    // unknowns (s, t): Σ s_i [H_i, x] = 2x and Σ t_j [x, K_j] - Σ s_i H_i = 0
    let (m, n) = (hk.len(), kb.len());
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(m + n);
    for hi in &hk {
        let mut col = g.bracket(hi, x);
        col.extend(vec_scale(hi, &-F::one()));
        cols.push(col);
    }
    for kj in &kb {
        let mut col = vec![F::zero(); dim];
        col.extend(g.bracket(x, kj));
        cols.push(col);
    }
    let mut rhs = vec_scale(x, &F::from(BigRational::from_integer(2.into())));
    rhs.extend(vec![F::zero(); dim]);
    let sol = if cols.is_empty() { None } else { Matrix::from_cols(2 * dim, cols).solve(&rhs) };
    let sol = sol.ok_or(Error::NoCartanCharacteristic)?;
    let mut hv = vec![F::zero(); dim];
    for (s, hi) in sol.iter().take(m).zip(&hk) {
        axpy(&mut hv, s, hi);
    }
    let h: Vec<BigRational> = g
        .cartan_coords(&hv)
        .iter()
        .map(|c| c.to_rational())
        .collect::<Option<_>>()
        .ok_or(Error::NoCartanCharacteristic)?;

    let rs = g.root_system();
    let mut dominant = h.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..g.rank()).find(|&i| rs.eval_on_cartan(rs.simple(i), &dominant).is_negative()) {
        dominant = rs.reflect_cartan(i, &dominant);
        word.insert(0, i);
    }
    Ok(NilpotentDatum { x: x.to_vec(), h, dominant, to_dominant: word })
}
