use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::double::{join, split, DoubleSubspace};
use crate::error::Result;
use crate::exactlin::{integer_left_kernel, Scalar, Subspace};
use crate::liealg::{weyl_representative, LieAlgebra};

use super::{validate, Quadruple};

/// Whether `b` is obtained from `a` by the adjoint action of a torus element.
///
/// The torus fixes `P`, `P′`, `σ` and `l₀` and rescales
/// `c_δ ↦ c_δ · (σδ − δ)(t)` and `x_β ↦ β(t) x_β`. The resulting monomial
/// system `t^{v_i} = r_i` is solvable iff every integer relation
/// `Σ k_i v_i = 0` satisfies `Π r_i^{k_i} = 1`.
pub fn torus_conjugate(g: &LieAlgebra, a: &Quadruple, b: &Quadruple) -> Result<bool> {
    let (va, vb) = (validate(g, a)?, validate(g, b)?);
    if a.p != b.p || a.p_prime != b.p_prime || a.sigma != b.sigma || va.l0 != vb.l0 {
        return Ok(false);
    }
    let rs = g.root_system();
    let mut exponents: Vec<Vec<BigInt>> = Vec::new();
    let mut ratios: Vec<Scalar> = Vec::new();
    for (&d, c) in &a.xi_scalars {
        let Some(c2) = b.xi_scalars.get(&d) else { return Ok(false) };
        let s = rs.root(a.sigma[&d]);
        exponents.push(s.iter().zip(rs.root(d)).map(|(p, q)| BigInt::from(p - q)).collect());
        ratios.push(c2.clone() / c.clone());
    }
    for beta in 0..rs.num_roots() {
        let k = g.root_index(beta);
        match (a.x[k].is_zero(), b.x[k].is_zero()) {
            (true, true) => {}
            (false, false) => {
                exponents.push(rs.root(beta).iter().map(|&p| BigInt::from(p)).collect());
                ratios.push(b.x[k].clone() / a.x[k].clone());
            }
            _ => return Ok(false),
        }
    }
    if g.cartan_range().any(|k| a.x[k] != b.x[k]) {
        return Ok(false);
    }
    // constant terms (exponent zero) must already agree
    for (e, r) in exponents.iter().zip(&ratios) {
        if e.iter().all(Zero::is_zero) && *r != Scalar::one() {
            return Ok(false);
        }
    }
    for relation in integer_left_kernel(rs.rank(), &exponents) {
        let mut acc = Scalar::one();
        for (k, r) in relation.iter().zip(&ratios) {
            let k = k.to_i64().expect("small relation exponents");
            if k != 0 {
                acc = acc * r.powi(k);
            }
        }
        if acc != Scalar::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(n_w, n_w) · s` for the Weyl representative of `word`.
pub fn weyl_conjugate(g: &LieAlgebra, word: &[usize], s: &DoubleSubspace<Scalar>) -> DoubleSubspace<Scalar> {
    let n = weyl_representative(g, word).matrix.lift::<Scalar>();
    Subspace::span(
        s.ambient(),
        s.basis_vectors().iter().map(|r| {
            let (x, y) = split(g, r);
            join(&n.mul_vec(&x), &n.mul_vec(&y))
        }),
    )
}
