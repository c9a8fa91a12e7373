use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::double::LagrangianVerdict;
use crate::error::{Error, Result};
use crate::exactlin::{int, rat, Scalar};
use crate::liealg::{
    build_xi, fixed_subalgebra, jacobson_morozov_characteristic, levi_subalgebra, parabolic_subalgebra, AlgebraMap,
    LieAlgebra, ParabolicSubalgebra,
};
use crate::rootsys::{
    enumerate_isometries, enumerate_parabolic_subsets, levi_of_sigma, preserves_simple_system, weyl_canonical_label,
    LabelKey, RootIsometry, RootSystem,
};

use super::l0::{cartan_basis, isometry_samples, l0_graph, witt_isometry};
use super::{construct_l, dim_lambda, dim_xi, dim_xi_linearized, Quadruple};

pub const CATALOG_RANK_CAP: usize = 2;

const SAMPLES_PER_FAMILY: usize = 3;

/// Quadruples sharing a label whose `l₀` lies in one connected family
/// (`det = ±1` relative to the reference isometry `z → z′`).
#[derive(Clone, Debug)]
pub struct Family {
    pub sign: i32,
    pub representative: Quadruple,
    pub verdict: LagrangianVerdict,
    /// `l ∩ g_diag = 0` for the representative.
    pub bd_transverse: bool,
    pub samples: Vec<Quadruple>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: LabelKey,
    pub dim_xi: usize,
    /// Linearized ξ-parameter count at the representative.
    pub dim_xi_check: usize,
    pub n: usize,
    pub dim_lambda: usize,
    pub preserves_simple_system: bool,
    pub families: Vec<Family>,
}

fn unit_scalars(rs: &RootSystem, sigma: &RootIsometry) -> BTreeMap<usize, Scalar> {
    rs.simple_system_of(sigma.source()).into_iter().map(|d| (d, Scalar::one())).collect()
}

/// `x = 0` and the nonzero 0/1 sums of `Σ_k ξᵏ(e_β)` over σ-orbits of
/// positive roots of `U` that are fixed by `ξ`.
fn nilpotent_candidates(g: &LieAlgebra, sigma: &RootIsometry, xi: &AlgebraMap<Scalar>) -> Vec<Vec<Scalar>> {
    let rs = g.root_system();
    let dim = g.dim();
    let u = levi_of_sigma(sigma);
    let mut orbit_vectors = Vec::new();
    let mut seen = BTreeSet::new();
    for beta in u.iter().filter(|&b| rs.is_positive(b)) {
        if seen.contains(&beta) {
            continue;
        }
        let mut orbit = vec![beta];
        let mut cur = sigma.apply(beta).expect("U is σ-stable");
        while cur != beta {
            orbit.push(cur);
            cur = sigma.apply(cur).expect("U is σ-stable");
        }
        seen.extend(orbit.iter().copied());
        if !orbit.iter().all(|&b| rs.is_positive(b)) {
            continue;
        }
        let mut v = vec![Scalar::zero(); dim];
        let mut w = g.root_vector::<Scalar>(beta);
        for _ in 0..orbit.len() {
            v = v.iter().zip(&w).map(|(a, b)| a.clone() + b.clone()).collect();
            w = xi.apply(&w);
        }
        if xi.apply(&v) == v {
            orbit_vectors.push(v);
        }
    }
    let mut out = vec![vec![Scalar::zero(); dim]];
    for mask in 1u32..(1 << orbit_vectors.len()) {
        let mut x = vec![Scalar::zero(); dim];
        for (k, v) in orbit_vectors.iter().enumerate() {
            if mask & (1 << k) != 0 {
                x = x.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect();
            }
        }
        out.push(x);
    }
    out
}

fn random_unit(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let re = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let im = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        if !(re.is_zero() && im.is_zero()) {
            return Scalar::gaussian(re, im);
        }
    }
}

/// `t^λ` for `λ` in simple-root coordinates, `t` given by its values on simple roots.
fn character(t: &[Scalar], lambda: &[i64]) -> Scalar {
    t.iter().zip(lambda).fold(Scalar::one(), |acc, (ti, &k)| acc * ti.powi(k))
}

/// A torus conjugate of `(ξ, x)`: `c_δ ↦ c_δ (σδ − δ)(t)`, `x_β ↦ β(t) x_β`.
fn torus_sample(g: &LieAlgebra, q: &Quadruple, rng: &mut ChaCha8Rng) -> Quadruple {
    let rs = g.root_system();
    let t: Vec<Scalar> = (0..rs.rank()).map(|_| random_unit(rng)).collect();
    let mut out = q.clone();
    for (d, c) in out.xi_scalars.iter_mut() {
        let s = rs.root(q.sigma[d]);
        let diff: Vec<i64> = s.iter().zip(rs.root(*d)).map(|(a, b)| a - b).collect();
        *c = c.clone() * character(&t, &diff);
    }
    for beta in 0..rs.num_roots() {
        let k = g.root_index(beta);
        if !out.x[k].is_zero() {
            out.x[k] = out.x[k].clone() * character(&t, rs.root(beta));
        }
    }
    out
}

struct TripleData<'a> {
    par: &'a ParabolicSubalgebra,
    sigma: &'a RootIsometry,
    flag: bool,
    xi: &'a AlgebraMap<Scalar>,
}

fn build_entry(
    g: &LieAlgebra,
    key: LabelKey,
    data: &TripleData<'_>,
    par_prime: &ParabolicSubalgebra,
    x: &[Scalar],
    rng: &mut ChaCha8Rng,
) -> Result<CatalogEntry> {
    let rs = g.root_system();
    let sigma = data.sigma;
    let z = cartan_basis(g, &data.par.z);
    let n = z.len();
    let t = witt_isometry(g, sigma)?;
    let psis = isometry_samples(g, &z, &[int(1), int(2), rat(1, 3), int(-3)]);
    let base = Quadruple {
        p: data.par.subset.members().clone(),
        p_prime: par_prime.subset.members().clone(),
        sigma: sigma.map().clone(),
        xi_scalars: unit_scalars(rs, sigma),
        x: x.to_vec(),
        l0: Vec::new(),
    };
    let signs: &[i32] = if n == 0 { &[1] } else { &[1, -1] };
    let mut families = Vec::new();
    for &sign in signs {
        let psi_family: Vec<_> = psis.iter().filter(|(s, _)| *s == sign).map(|(_, m)| m).collect();
        let representative = Quadruple { l0: l0_graph(&z, &t, psi_family[0]), ..base.clone() };
        let c = construct_l(g, &representative)?;
        let bd_transverse = c.diag_transverse(g);
        let mut samples = Vec::with_capacity(SAMPLES_PER_FAMILY);
        for k in 0..SAMPLES_PER_FAMILY {
            let mut s = if x.iter().all(Zero::is_zero) {
                let mut s = representative.clone();
                for c in s.xi_scalars.values_mut() {
                    *c = random_unit(rng);
                }
                s
            } else {
                torus_sample(g, &representative, rng)
            };
            s.l0 = l0_graph(&z, &t, psi_family[k % psi_family.len()]);
            samples.push(s);
        }
        families.push(Family { sign, representative, verdict: c.verdict, bd_transverse, samples });
    }
    Ok(CatalogEntry {
        key,
        dim_xi: dim_xi(rs, sigma),
        dim_xi_check: dim_xi_linearized(g, sigma, data.xi),
        n,
        dim_lambda: dim_lambda(n),
        preserves_simple_system: data.flag,
        families,
    })
}

/// One entry per `W`-orbit of `(P, P′, σ, h)`, sorted by canonical key.
///
/// `h` ranges over characteristics of the nilpotents produced by the σ-orbit
/// search in `[u, u]^ξ` (unit ξ-scalars); `seed` drives the sample parameters.
pub fn enumerate_orbit_labels(g: &LieAlgebra, seed: u64) -> Result<Vec<CatalogEntry>> {
    let rs = g.root_system();
    if rs.rank() > CATALOG_RANK_CAP {
        return Err(Error::RankCap { rank: rs.rank(), cap: CATALOG_RANK_CAP });
    }
    let weyl = rs.weyl_group();
    let pars: Vec<ParabolicSubalgebra> =
        enumerate_parabolic_subsets(rs)?.iter().map(|s| parabolic_subalgebra(g, s)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries: BTreeMap<LabelKey, CatalogEntry> = BTreeMap::new();
    for par in &pars {
        let a = par.subset.levi();
        for par_prime in &pars {
            let a_prime = par_prime.subset.levi();
            if rs.span_rank(a) != rs.span_rank(a_prime) {
                continue;
            }
            for sigma in enumerate_isometries(rs, a, a_prime) {
                let flag = preserves_simple_system(rs, &sigma)?;
                let xi = build_xi(g, &sigma, &unit_scalars(rs, &sigma))?;
                let candidates = if flag { nilpotent_candidates(g, &sigma, &xi) } else { vec![vec![Scalar::zero(); g.dim()]] };
                let u = levi_subalgebra(g, &levi_of_sigma(&sigma)).lift::<Scalar>();
                let fixed = fixed_subalgebra(g, &xi, &u)?;
                let data = TripleData { par, sigma: &sigma, flag, xi: &xi };
                let mut seen_h: BTreeSet<Vec<BigRational>> = BTreeSet::new();
                for x in candidates {
                    let Ok(datum) = jacobson_morozov_characteristic(g, &x, Some(&fixed.fixed)) else { continue };
                    if !seen_h.insert(datum.h.clone()) {
                        continue;
                    }
                    let key = LabelKey::new(par.subset.members(), par_prime.subset.members(), &sigma, &datum.h);
                    let canonical = weyl_canonical_label(rs, &weyl, &key);
                    if entries.contains_key(&canonical) {
                        continue;
                    }
                    let entry = build_entry(g, canonical.clone(), &data, par_prime, &x, &mut rng)?;
                    entries.insert(canonical, entry);
                }
            }
        }
    }
    Ok(entries.into_values().collect())
}

