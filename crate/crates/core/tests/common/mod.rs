#![allow(dead_code)]

use std::collections::BTreeMap;

use lagsub::exactlin::{Matrix, Scalar};
use lagsub::lagrange::Quadruple;
use lagsub::liealg::{build_lie_algebra, LieAlgebra};
use lagsub::rootsys::{build_root_system, RootSet};
use lagsub::K;

pub const RANK_TWO: [&str; 5] = ["A1", "A2", "B2", "G2", "A1xA1"];

pub fn algebra(t: &str) -> LieAlgebra {
    build_lie_algebra(&build_root_system(t).unwrap(), None).unwrap()
}

pub fn algebra_with_center(t: &str, c: usize) -> LieAlgebra {
    build_lie_algebra(&build_root_system(t).unwrap(), Some(Matrix::identity(c))).unwrap()
}

pub fn s(n: i64) -> K {
    Scalar::from_int(n)
}

/// `(P, P′) = (R, R)`, `σ = id`, unit ξ-scalars, `x = 0`.
pub fn full_quadruple(g: &LieAlgebra, l0: Vec<Vec<K>>) -> Quadruple {
    let rs = g.root_system();
    let all = rs.all_roots();
    Quadruple {
        p: all.clone(),
        p_prime: all.clone(),
        sigma: all.iter().map(|a| (a, a)).collect(),
        xi_scalars: (0..rs.rank()).map(|i| (rs.simple(i), s(1))).collect(),
        x: vec![s(0); g.dim()],
        l0,
    }
}

pub fn borel_pair(g: &LieAlgebra, positive: bool, positive_prime: bool, l0: Vec<Vec<K>>) -> Quadruple {
    let rs = g.root_system();
    let half = |pos: bool| RootSet::new((0..rs.num_roots()).filter(|&a| rs.is_positive(a) == pos).collect());
    Quadruple {
        p: half(positive),
        p_prime: half(positive_prime),
        sigma: BTreeMap::new(),
        xi_scalars: BTreeMap::new(),
        x: vec![s(0); g.dim()],
        l0,
    }
}

/// Reflection `s_v` of a 2-dimensional space with the identity form.
pub fn reflection(v: [K; 2]) -> [[K; 2]; 2] {
    let n = v[0].clone() * v[0].clone() + v[1].clone() * v[1].clone();
    let entry = |i: usize, j: usize| {
        let delta = if i == j { s(1) } else { s(0) };
        delta - s(2) * v[i].clone() * v[j].clone() / n.clone()
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Graph `{(a, r a)}` on the 2-dimensional center of `A1 + ℂ²`
/// (Cartan coordinates `h1, z1, z2` in each factor).
pub fn center_graph(r: &[[K; 2]; 2]) -> Vec<Vec<K>> {
    (0..2)
        .map(|j| {
            let mut row = vec![s(0); 6];
            row[1 + j] = s(1);
            row[4] = r[0][j].clone();
            row[5] = r[1][j].clone();
            row
        })
        .collect()
}

/// The three integrability examples on `A1 + ℂ²`: the center diagonal, the
/// reflection in `(1+i, −1)`, and the reflection in `(√2, −1)`.
pub fn trichotomy_l0s() -> [Vec<Vec<K>>; 3] {
    let id = [[s(1), s(0)], [s(0), s(1)]];
    [
        center_graph(&id),
        center_graph(&reflection([s(1) + Scalar::i(), s(-1)])),
        center_graph(&reflection([Scalar::sqrt(2), s(-1)])),
    ]
}
