mod common;

use lagsub::double::{cybe_residual, join, sklyanin_r, split, verify_lagrangian};
use lagsub::exactlin::Subspace;
use lagsub::integrab::{integrability_verdict, GroupForm};
use lagsub::lagrange::{construct_l, decompose_l, enumerate_orbit_labels, torus_conjugate, validate, weyl_conjugate};
use lagsub::liealg::{build_lie_algebra, exp_ad, LieAlgebra};
use lagsub::rootsys::build_root_system;
use lagsub::K;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn exp_conjugate(g: &LieAlgebra, l: &Subspace<K>, x: &[K]) -> Subspace<K> {
    let m = exp_ad(g, x).unwrap().matrix;
    Subspace::span(
        l.ambient(),
        l.basis_vectors().iter().map(|r| {
            let (a, b) = split(g, r);
            join(&m.mul_vec(&a), &m.mul_vec(&b))
        }),
    )
}

#[test]
fn cybe_holds_up_to_rank_three() {
    for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let g = build_lie_algebra(&build_root_system(t).unwrap(), None).unwrap();
        assert!(cybe_residual(&g, &sklyanin_r(&g)).is_empty(), "{t}");
    }
}

#[test]
fn conjugation_preserves_lagrangian_and_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in ["A2", "B2"] {
        let g = algebra(t);
        let rs = g.root_system();
        for entry in enumerate_orbit_labels(&g, 1).unwrap() {
            let q = &entry.families[0].representative;
            let l = construct_l(&g, q).unwrap().l;
            let word: Vec<usize> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..rs.rank())).collect();
            let w = weyl_conjugate(&g, &word, &l);
            assert!(verify_lagrangian(&g, &w).lagrangian);
            let alpha = rng.gen_range(0..rs.num_roots());
            let x: Vec<K> = g.root_vector(alpha).into_iter().map(|c: K| c * s(rng.gen_range(-2..=2))).collect();
            let moved = exp_conjugate(&g, &l, &x);
            assert!(verify_lagrangian(&g, &moved).lagrangian);
            let d = decompose_l(&g, &moved).unwrap();
            assert_eq!(d.rebuild(&g), moved, "{t} {:?}", entry.key);
            assert_eq!(d.rebuild(&g).dim(), g.dim());
        }
    }
}

#[test]
fn decomposition_recovers_every_sample() {
    let g = algebra("A1xA1");
    for entry in enumerate_orbit_labels(&g, 9).unwrap() {
        for f in &entry.families {
            for q in &f.samples {
                let c = construct_l(&g, q).unwrap();
                let d = decompose_l(&g, &c.l).unwrap();
                assert_eq!(d.l0, c.admissible.l0);
                assert_eq!(d.theta, c.admissible.theta);
                assert_eq!(d.rebuild(&g), c.l);
            }
        }
    }
}

#[test]
fn samples_of_a_label_share_the_torus_class_only_when_l0_agrees() {
    let g = algebra("A2");
    for entry in enumerate_orbit_labels(&g, 2).unwrap() {
        let f = &entry.families[0];
        for q in &f.samples {
            let same_l0 = validate(&g, q).unwrap().l0 == validate(&g, &f.representative).unwrap().l0;
            if !same_l0 {
                assert!(!torus_conjugate(&g, q, &f.representative).unwrap());
            }
        }
    }
}

#[test]
fn integrability_is_unchanged_by_xi_for_simply_connected_form() {
    let g = algebra_with_center("A1", 2);
    let gf = GroupForm::simply_connected(&g, None).unwrap();
    for (i, l0) in trichotomy_l0s().into_iter().enumerate() {
        let base = full_quadruple(&g, l0);
        let reference = {
            let c = construct_l(&g, &base).unwrap();
            let v = integrability_verdict(&g, &c.admissible, &gf);
            (v.is_algebraic(), v.is_closed())
        };
        assert_eq!(reference, [(true, true), (false, true), (false, false)][i]);
        for k in [-2, 3, 7] {
            let mut q = base.clone();
            q.xi_scalars.insert(0, s(k));
            let c = construct_l(&g, &q).unwrap();
            let v = integrability_verdict(&g, &c.admissible, &gf);
            assert_eq!((v.is_algebraic(), v.is_closed()), reference);
        }
    }
}
