use std::collections::BTreeMap;

use super::*;
use crate::double::{diagonal, manin_complement};
use crate::exactlin::{int, Scalar};
use crate::liealg::build_lie_algebra;
use crate::rootsys::{build_root_system, RootSet};

fn algebra(t: &str) -> LieAlgebra {
    build_lie_algebra(&build_root_system(t).unwrap(), None).unwrap()
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn zeros(g: &LieAlgebra) -> Vec<Scalar> {
    vec![Scalar::zero(); g.dim()]
}

fn diag_quadruple(g: &LieAlgebra) -> Quadruple {
    let rs = g.root_system();
    let all = rs.all_roots();
    Quadruple {
        p: all.clone(),
        p_prime: all.clone(),
        sigma: all.iter().map(|a| (a, a)).collect(),
        xi_scalars: (0..rs.rank()).map(|i| (rs.simple(i), s(1))).collect(),
        x: zeros(g),
        l0: Vec::new(),
    }
}

fn borel(g: &LieAlgebra, positive: bool, positive_prime: bool, l0: Vec<Vec<Scalar>>) -> Quadruple {
    let rs = g.root_system();
    let half = |pos: bool| RootSet::new((0..rs.num_roots()).filter(|&a| rs.is_positive(a) == pos).collect());
    Quadruple {
        p: half(positive),
        p_prime: half(positive_prime),
        sigma: BTreeMap::new(),
        xi_scalars: BTreeMap::new(),
        x: zeros(g),
        l0,
    }
}

#[test]
fn identity_quadruple_gives_the_diagonal() {
    for t in ["A1", "A2", "B2"] {
        let g = algebra(t);
        let c = construct_l(&g, &diag_quadruple(&g)).unwrap();
        assert!(c.verdict.lagrangian);
        assert_eq!(c.l, diagonal::<Scalar>(&g));
    }
}

#[test]
fn identity_quadruple_with_center() {
    let rs = build_root_system("A1").unwrap();
    let g = build_lie_algebra(&rs, Some(crate::exactlin::Matrix::identity(1))).unwrap();
    let mut q = diag_quadruple(&g);
    q.l0 = vec![vec![s(0), s(1), s(0), s(1)]];
    let c = construct_l(&g, &q).unwrap();
    assert_eq!(c.l, diagonal::<Scalar>(&g));
}

#[test]
fn a1_borel_examples() {
    let g = algebra("A1");
    let c = construct_l(&g, &borel(&g, true, true, vec![vec![s(1), s(1)]])).unwrap();
    assert!(c.verdict.lagrangian);
    assert_eq!(c.l.dim(), 3);
    assert_eq!(diag_intersection(&g, &c.l).dim(), 2);

    let c = construct_l(&g, &borel(&g, true, true, vec![vec![s(1), s(-1)]])).unwrap();
    assert!(c.verdict.lagrangian);
    let meet = diag_intersection(&g, &c.l);
    assert_eq!(meet.dim(), 1);
    assert!(meet.contains(&g.root_vector::<Scalar>(0)));
}

#[test]
fn bd_transverse_example() {
    let g = algebra("A1");
    let c = construct_l(&g, &borel(&g, true, false, vec![vec![s(1), s(-1)]])).unwrap();
    assert!(c.verdict.lagrangian);
    assert!(c.diag_transverse(&g));
    let c = construct_l(&g, &borel(&g, true, false, vec![vec![s(1), s(1)]])).unwrap();
    assert!(!c.diag_transverse(&g));
}

#[test]
fn invalid_quadruples_are_rejected() {
    let g = algebra("A1");
    let q = borel(&g, true, true, vec![vec![s(1), s(2)]]);
    assert!(matches!(construct_l(&g, &q), Err(Error::InvalidL0(_))));
    let q = borel(&g, true, true, Vec::new());
    assert!(matches!(construct_l(&g, &q), Err(Error::InvalidL0(_))));
    let mut q = diag_quadruple(&g);
    q.xi_scalars.clear();
    assert!(matches!(construct_l(&g, &q), Err(Error::MissingScalar(_))));
    let mut q = diag_quadruple(&g);
    q.x = g.basis_vector(g.cartan_index(0));
    assert!(validate(&g, &q).is_err());
    let a2 = algebra("A2");
    let rs = a2.root_system();
    let mut q = borel(&a2, true, true, Vec::new());
    q.p_prime = rs.all_roots();
    assert!(matches!(construct_l(&a2, &q), Err(Error::CenterDimensionMismatch { .. })));
}

#[test]
fn nilpotent_twist_is_lagrangian() {
    let g = algebra("A2");
    let mut q = diag_quadruple(&g);
    q.x = g.root_vector(g.root_system().simple(0));
    let c = construct_l(&g, &q).unwrap();
    assert!(c.verdict.lagrangian);
    assert_eq!(c.admissible.nilpotent.h.len(), 2);
}

#[test]
fn decompose_examples() {
    let g = algebra("A1");
    let d = decompose_l(&g, &diagonal::<Scalar>(&g)).unwrap();
    assert_eq!(d.par.subset.members(), &g.root_system().all_roots());
    assert_eq!(d.l0.dim(), 0);
    assert_eq!(d.sigma.as_ref().unwrap().pairs(), vec![(0, 0), (1, 1)]);
    assert_eq!(d.xi_scalars.as_ref().unwrap()[&0], s(1));

    let l = construct_l(&g, &borel(&g, true, true, vec![vec![s(1), s(1)]])).unwrap().l;
    let d = decompose_l(&g, &l).unwrap();
    assert_eq!(d.par.subset.members(), &RootSet::new(vec![0]));
    assert_eq!(d.par_prime.subset.members(), &RootSet::new(vec![0]));
    assert_eq!(d.l0, Subspace::span(2, [vec![s(1), s(1)]]));
    assert_eq!(d.rebuild(&g), l);

    let m = manin_complement::<Scalar>(&g);
    let d = decompose_l(&g, &m).unwrap();
    assert_eq!(d.par.subset.members(), &RootSet::new(vec![1]));
    assert_eq!(d.par_prime.subset.members(), &RootSet::new(vec![0]));
    assert_eq!(d.l0, Subspace::span(2, [vec![s(1), s(-1)]]));
    assert!(d.conjugator.is_none());
    assert_eq!(d.rebuild(&g), m);
}

#[test]
fn decompose_rejects_non_lagrangian() {
    let g = algebra("A1");
    let s = Subspace::span(6, [crate::double::join(&g.root_vector::<Scalar>(0), &zeros(&g))]);
    assert!(matches!(decompose_l(&g, &s), Err(Error::NotLagrangian(_))));
}

#[test]
fn decompose_conjugates_nonstandard_projections() {
    let g = algebra("A1");
    let l = construct_l(&g, &borel(&g, true, true, vec![vec![s(1), s(-1)]])).unwrap().l;
    // conjugate by exp(ad f) in both factors: projections become non-standard Borels
    let f: Vec<Scalar> = g.root_vector(1);
    let e = exp_ad(&g, &f).unwrap().matrix;
    let moved = Subspace::span(
        6,
        l.basis_vectors().iter().map(|r| {
            let (x, y) = crate::double::split(&g, r);
            join(&e.mul_vec(&x), &e.mul_vec(&y))
        }),
    );
    assert!(verify_lagrangian(&g, &moved).lagrangian);
    let d = decompose_l(&g, &moved).unwrap();
    assert!(d.conjugator.is_some());
    assert_eq!(d.rebuild(&g), moved);
}

#[test]
fn roundtrip_recovers_theta() {
    let g = algebra("A2");
    let mut q = diag_quadruple(&g);
    q.xi_scalars.insert(g.root_system().simple(1), Scalar::from_frac(-2, 3));
    q.x = g.root_vector(g.root_system().simple(0));
    let c = construct_l(&g, &q).unwrap();
    let d = decompose_l(&g, &c.l).unwrap();
    assert_eq!(d.theta, c.admissible.theta);
    assert_eq!(d.rebuild(&g), c.l);
}

#[test]
fn dimension_examples() {
    let a1 = algebra("A1");
    let rs = a1.root_system();
    assert_eq!(dim_xi(rs, &RootIsometry::identity(&RootSet::new(vec![]))), 0);
    let id = RootIsometry::identity(&rs.all_roots());
    assert_eq!(dim_xi(rs, &id), 1);
    let xi = build_xi(&a1, &id, &BTreeMap::from([(0, s(1))])).unwrap();
    assert_eq!(dim_xi_linearized(&a1, &id, &xi), 1);
    assert_eq!(dim_lambda(1), 0);
    assert_eq!(dim_lambda(2), 1);
    assert_eq!(dim_lambda(3), 3);

    let minus = RootIsometry::new(rs, rs.all_roots(), rs.all_roots(), BTreeMap::from([(0, 1), (1, 0)])).unwrap();
    assert_eq!(dim_xi(rs, &minus), 0);
    let xi = build_xi(&a1, &minus, &BTreeMap::from([(0, s(1))])).unwrap();
    assert_eq!(dim_xi_linearized(&a1, &minus, &xi), 0);
}

#[test]
fn tangent_count_matches_dim_lambda() {
    for (t, n) in [("A1", 1usize), ("A2", 2)] {
        let g = algebra(t);
        let hl = g.cartan_dim();
        let w = Subspace::full(2 * hl);
        let l0 = Subspace::span(
            2 * hl,
            (0..hl).map(|i| (0..2 * hl).map(|j| if j % hl == i { s(1) } else { s(0) }).collect()),
        );
        assert_eq!(lagrangian_tangent_dim(&g, &w, &l0), dim_lambda(n));
    }
}

#[test]
fn torus_conjugacy() {
    let g = algebra("A1");
    let mut a = diag_quadruple(&g);
    a.x = g.root_vector(0);
    let mut b = a.clone();
    b.x = g.root_vector::<Scalar>(0).iter().map(|c| c.clone() * s(2)).collect();
    assert!(torus_conjugate(&g, &a, &b).unwrap());
    let mut c = a.clone();
    c.xi_scalars.insert(0, s(2));
    c.x = zeros(&g);
    let mut d = c.clone();
    d.xi_scalars.insert(0, s(1));
    assert!(!torus_conjugate(&g, &c, &d).unwrap());
}

#[test]
fn weyl_conjugation_preserves_lagrangians() {
    let g = algebra("A1");
    let l = construct_l(&g, &borel(&g, true, true, vec![vec![s(1), s(1)]])).unwrap().l;
    let moved = weyl_conjugate(&g, &[0], &l);
    assert!(verify_lagrangian(&g, &moved).lagrangian);
    let d = decompose_l(&g, &moved).unwrap();
    assert_eq!(d.par.subset.members(), &RootSet::new(vec![1]));
    assert_eq!(d.par_prime.subset.members(), &RootSet::new(vec![1]));
    assert_eq!(weyl_conjugate(&g, &[0], &diagonal::<Scalar>(&g)), diagonal::<Scalar>(&g));
}

#[test]
fn a1_catalog() {
    let g = algebra("A1");
    let entries = enumerate_orbit_labels(&g, 7).unwrap();
    let rs = g.root_system();
    let all: Vec<usize> = rs.all_roots().as_slice().to_vec();
    let find = |p: &[usize], pp: &[usize], sigma: &[(usize, usize)], h: &[i64]| {
        entries.iter().find(|e| {
            e.key.p == p && e.key.p_prime == pp && e.key.sigma == sigma && e.key.h == h.iter().map(|&k| int(k)).collect::<Vec<_>>()
        })
    };
    let diag = find(&all, &all, &[(0, 0), (1, 1)], &[0]).expect("g_diag label");
    assert_eq!((diag.dim_xi, diag.dim_lambda), (1, 0));
    // the W-orbit of α∨ is {±α∨}
    assert!(find(&all, &all, &[(0, 0), (1, 1)], &[-1]).is_some());
    let minus = find(&all, &all, &[(0, 1), (1, 0)], &[0]).expect("−id label");
    assert!(!minus.preserves_simple_system);
    assert_eq!(entries.len(), 5);
    let borel_families: usize = entries.iter().filter(|e| e.key.sigma.is_empty()).map(|e| e.families.len()).sum();
    assert_eq!(borel_families, 4);
    let m_type = entries
        .iter()
        .filter(|e| e.key.sigma.is_empty() && e.key.p != e.key.p_prime)
        .flat_map(|e| &e.families)
        .any(|f| f.bd_transverse);
    assert!(m_type);
    for e in &entries {
        assert!([int(0), int(1), int(-1)].contains(&e.key.h[0]));
        assert_eq!(e.dim_xi, e.dim_xi_check);
        for f in &e.families {
            assert!(f.verdict.lagrangian);
            assert!(f.samples.len() >= 3);
        }
    }
}
