use super::*;
use crate::double::diagonal;
use crate::lagrange::decompose_l;
use crate::liealg::build_lie_algebra;
use crate::rootsys::build_root_system;

fn sl2() -> LieAlgebra {
    build_lie_algebra(&build_root_system("A1").unwrap(), None).unwrap()
}

#[test]
fn brackets_vanish_at_identity_and_are_antisymmetric() {
    let g = sl2();
    let ctx = GeomContext::new(&g).unwrap();
    let id = AutPoint::identity(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = random_point(&g, &mut rng, 3);
    for mu in 0..3 {
        for nu in 0..3 {
            let a = CoordFn { mu, nu };
            assert!(ctx.bracket_x(a, a, &p.numeric).norm() < ANTISYMMETRY_TOL);
            for b in panel(3) {
                assert!(ctx.bracket_x(a, b, &id.numeric).norm() < ANTISYMMETRY_TOL);
                let r = ctx.bracket_x(a, b, &p.numeric) + ctx.bracket_x(b, a, &p.numeric);
                assert!(r.norm() < ANTISYMMETRY_TOL);
            }
        }
    }
}

#[test]
fn bracket_is_nontrivial() {
    let g = sl2();
    let ctx = GeomContext::new(&g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = random_point(&g, &mut rng, 4);
    let max = panel(3)
        .iter()
        .flat_map(|&a| panel(3).map(move |b| (a, b)))
        .map(|(a, b)| ctx.bracket_x(a, b, &p.numeric).norm())
        .fold(0.0, f64::max);
    assert!(max > 1e-3);
}

#[test]
fn leibniz_rule() {
    let g = sl2();
    let ctx = GeomContext::new(&g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = random_point(&g, &mut rng, 3).numeric;
    let [a, b, c, _] = panel(3);
    let entry = |f: CoordFn| move |q: &CMatrix| q[(f.mu, f.nu)];
    let product = |q: &CMatrix| q[(b.mu, b.nu)] * q[(c.mu, c.nu)];
    let lhs = ctx.bracket_fd(&entry(a), &product, &p);
    let rhs = ctx.bracket_x(a, b, &p) * p[(c.mu, c.nu)] + p[(b.mu, b.nu)] * ctx.bracket_x(a, c, &p);
    assert!((lhs - rhs).norm() < JACOBI_TOL);
}

#[test]
fn l_g_examples() {
    let g = sl2();
    let id = AutPoint::identity(&g);
    assert_eq!(build_l_g(&g, &id).unwrap(), diagonal::<Scalar>(&g));
    let e = AutPoint::exp_nilpotent(&g, &g.root_vector::<Scalar>(0)).unwrap();
    let l = build_l_g(&g, &e).unwrap();
    let v = verify_lagrangian(&g, &l);
    assert!(v.lagrangian && v.dim == 3);
    let w = AutPoint::weyl(&g, &[0]);
    let l = build_l_g(&g, &w).unwrap();
    assert!(verify_lagrangian(&g, &l).lagrangian);
    let d = decompose_l(&g, &l).unwrap();
    assert_eq!(d.par.subset.members(), &g.root_system().all_roots());
    assert_eq!(d.par_prime.subset.members(), &g.root_system().all_roots());
    assert_eq!(d.l0.dim(), 0);
    let numeric_only = AutPoint { numeric: id.numeric.clone(), exact: None };
    assert!(matches!(build_l_g(&g, &numeric_only), Err(Error::NotExact)));
}

#[test]
fn conjugation_examples() {
    let g = sl2();
    let id = AutPoint::identity(&g);
    let diag = diagonal::<Scalar>(&g);
    assert_eq!(conjugate_subalgebra(&g, &id, &id, &diag).unwrap(), diag);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let p = random_point(&g, &mut rng, 3);
        assert_eq!(conjugate_subalgebra(&g, &p, &id, &diag).unwrap(), build_l_g(&g, &p).unwrap());
    }
}

#[test]
fn small_geom_report() {
    let g = sl2();
    let r = geom_check(&g, 11, 5, 3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.triples_tested, 5 * 64);
}

#[test]
fn rank_cap() {
    let g = build_lie_algebra(&build_root_system("A3").unwrap(), None).unwrap();
    assert!(matches!(GeomContext::new(&g), Err(Error::RankCap { .. })));
}
#[test]
fn jacobi_detects_a_non_invariant_symmetric_part() {
    let g = sl2();
    let ctx = GeomContext::new(&g).unwrap();
    let mut broken = GeomContext::new(&g).unwrap();
    broken.r_sym = DMatrix::from_fn(3, 3, |i, j| Complex64::new((i + j) as f64, 0.0));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = random_point(&g, &mut rng, 3).numeric;
    let pn = panel(3);
    let worst = |c: &GeomContext| {
        let mut m: f64 = 0.0;
        for &a in &pn {
            for &b in &pn {
                for &d in &pn {
                    m = m.max(c.jacobiator(a, b, d, &p).norm());
                }
            }
        }
        m
    };
    assert!(worst(&ctx) < JACOBI_TOL);
    assert!(worst(&broken) > 1.0);
}
