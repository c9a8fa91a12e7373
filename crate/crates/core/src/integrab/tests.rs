use std::collections::BTreeMap;

use super::*;
use crate::double::{diag_intersection, diagonal};
use crate::exactlin::rat;
use num_traits::Zero;
use crate::lagrange::{construct_l, validate, Quadruple};
use crate::liealg::build_lie_algebra;
use crate::rootsys::{build_root_system, RootSet};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn algebra(t: &str, center: usize) -> LieAlgebra {
    let form = (center > 0).then(|| Matrix::identity(center));
    build_lie_algebra(&build_root_system(t).unwrap(), form).unwrap()
}

fn full_quadruple(g: &LieAlgebra, l0: Vec<Vec<Scalar>>) -> Quadruple {
    let rs = g.root_system();
    let all = rs.all_roots();
    Quadruple {
        p: all.clone(),
        p_prime: all.clone(),
        sigma: all.iter().map(|a| (a, a)).collect(),
        xi_scalars: (0..rs.rank()).map(|i| (rs.simple(i), s(1))).collect(),
        x: vec![Scalar::zero(); g.dim()],
        l0,
    }
}

fn borel(g: &LieAlgebra, l0: Vec<Vec<Scalar>>) -> Quadruple {
    let rs = g.root_system();
    Quadruple {
        p: RootSet::new((0..rs.num_roots()).filter(|&a| rs.is_positive(a)).collect()),
        p_prime: RootSet::new((0..rs.num_roots()).filter(|&a| rs.is_positive(a)).collect()),
        sigma: BTreeMap::new(),
        xi_scalars: BTreeMap::new(),
        x: vec![Scalar::zero(); g.dim()],
        l0,
    }
}

/// Reflection `s_v` of `ℂ²` for the standard bilinear form.
fn reflection(v: [Scalar; 2]) -> [[Scalar; 2]; 2] {
    let n = v[0].clone() * v[0].clone() + v[1].clone() * v[1].clone();
    let two = s(2);
    let entry = |i: usize, j: usize| {
        let delta = if i == j { s(1) } else { s(0) };
        delta - two.clone() * v[i].clone() * v[j].clone() / n.clone()
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// `l₀ = {(a, r a)}` on the 2-dimensional center of `A1 + ℂ²` (Cartan coordinates `h1, z1, z2`).
fn graph_l0(r: &[[Scalar; 2]; 2]) -> Vec<Vec<Scalar>> {
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

fn v_of(g: &LieAlgebra, q: &Quadruple) -> Subspace<Scalar> {
    compute_v(g, &validate(g, q).unwrap())
}

fn diag_part(g: &LieAlgebra, q: &Quadruple) -> Subspace<Scalar> {
    let meet = diag_intersection(g, &construct_l(g, q).unwrap().l);
    let cartan = Subspace::span(g.dim(), g.cartan_range().map(|k| g.basis_vector(k)));
    let h = meet.meet(&cartan).unwrap();
    Subspace::span(g.cartan_dim(), h.basis_vectors().iter().map(|v| g.cartan_coords(v)))
}

#[test]
fn v_examples() {
    let g = algebra("A2", 0);
    let q = full_quadruple(&g, Vec::new());
    assert_eq!(v_of(&g, &q).dim(), 2);
    assert_eq!(construct_l(&g, &q).unwrap().l, diagonal::<Scalar>(&g));

    let a1 = algebra("A1", 0);
    let q = borel(&a1, vec![vec![s(1), s(1)]]);
    assert_eq!(v_of(&a1, &q).dim(), 1);
    assert_eq!(v_of(&a1, &q), diag_part(&a1, &q));
    let q = borel(&a1, vec![vec![s(1), s(-1)]]);
    assert_eq!(v_of(&a1, &q).dim(), 0);
    assert_eq!(v_of(&a1, &q), diag_part(&a1, &q));
}

#[test]
fn lattice_presets() {
    let g = algebra("A2", 1);
    let sc = GroupForm::preset(&g, "simply-connected", None).unwrap();
    let ad = GroupForm::preset(&g, "adjoint", None).unwrap();
    // coweights of A2 in coroot coordinates: (2/3, 1/3), (1/3, 2/3)
    let coweight = [rat(2, 3), rat(1, 3), int(0)];
    let d = BigRational::from(BigInt::from(3));
    let as_int: Vec<BigInt> = coweight.iter().map(|c| (c * &d).to_integer()).collect();
    let scaled = hnf(3, &sc.basis().iter().map(|r| r.iter().map(|c| (c * &d).to_integer()).collect()).collect::<Vec<_>>());
    assert!(!scaled.contains(&as_int));
    let scaled_ad = hnf(3, &ad.basis().iter().map(|r| r.iter().map(|c| (c * &d).to_integer()).collect()).collect::<Vec<_>>());
    assert!(scaled_ad.contains(&as_int));
    assert!(GroupForm::preset(&g, "other", None).is_err());
    // change of basis does not change the stored form
    let other = GroupForm::from_rows(&g, vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(0)], vec![int(0), int(0), int(-1)]]).unwrap();
    assert_eq!(other, sc);
}

#[test]
fn lattice_tests_on_small_subspaces() {
    let a1 = algebra("A1", 1);
    let gf = GroupForm::preset(&a1, "adjoint", None).unwrap();
    let zero = Subspace::zero(2);
    assert!(test_algebraic(&zero, &gf).algebraic);
    let gaussian = Subspace::span(2, [vec![s(1), s(1) + Scalar::i()]]);
    assert!(!test_algebraic(&gaussian, &gf).algebraic);
    let c = test_closed(&gaussian, &gf);
    assert!(c.closed);
    assert_eq!(c.real_part.dim(), 0);
    let root2 = Scalar::sqrt(2);
    let surd = Subspace::span(2, [vec![s(1), root2]]);
    let c = test_closed(&surd, &gf);
    assert!(!c.closed);
    assert_eq!(c.real_part.dim(), 1);
    let line = Subspace::span(2, [vec![s(1), s(2)]]);
    assert!(test_algebraic(&line, &gf).algebraic);
    assert!(test_closed(&line, &gf).closed);
}

#[test]
fn trichotomy() {
    let g = algebra("A1", 2);
    let gf = GroupForm::preset(&g, "adjoint", None).unwrap();
    let id = [[s(1), s(0)], [s(0), s(1)]];
    let gauss = reflection([s(1) + Scalar::i(), s(-1)]);
    let root2 = Scalar::sqrt(2);
    let surd = reflection([root2, s(-1)]);
    let expected = [(true, true), (false, true), (false, false)];
    for (r, want) in [id, gauss, surd].iter().zip(expected) {
        let q = full_quadruple(&g, graph_l0(r));
        let c = construct_l(&g, &q).unwrap();
        assert!(c.verdict.lagrangian);
        let v = integrability_verdict(&g, &c.admissible, &gf);
        assert_eq!((v.is_algebraic(), v.is_closed()), want);
        assert_eq!(v.v, diag_part(&g, &q));
    }
}

#[test]
fn a1xa1_swap_is_algebraic() {
    let g = algebra("A1xA1", 0);
    let q = borel(&g, vec![vec![s(1), s(0), s(0), s(1)], vec![s(0), s(1), s(1), s(0)]]);
    let c = construct_l(&g, &q).unwrap();
    assert!(c.verdict.lagrangian);
    let gf = GroupForm::preset(&g, "simply-connected", None).unwrap();
    let v = integrability_verdict(&g, &c.admissible, &gf);
    assert_eq!(v.v, Subspace::span(2, [vec![s(1), s(1)]]));
    assert!(v.is_algebraic() && v.is_closed());
    assert_eq!(v.algebraic.witness, Witness::Sublattice(vec![vec![BigInt::from(1), BigInt::from(1)]]));
}
