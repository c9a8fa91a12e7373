use num_rational::BigRational;

use super::{RootIsometry, RootSet, RootSystem, WeylElement};

/// Discrete orbit data `(P, P′, σ, h)` in a comparable form: sorted root
/// index lists, σ as sorted pairs, and `h` in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelKey {
    pub p: Vec<usize>,
    pub p_prime: Vec<usize>,
    pub sigma: Vec<(usize, usize)>,
    pub h: Vec<BigRational>,
}

impl LabelKey {
    pub fn new(p: &RootSet, p_prime: &RootSet, sigma: &RootIsometry, h: &[BigRational]) -> Self {
        LabelKey { p: p.as_slice().to_vec(), p_prime: p_prime.as_slice().to_vec(), sigma: sigma.pairs(), h: h.to_vec() }
    }

    /// Image under the diagonal action `w·(P, P′, σ, h) = (wP, wP′, wσw⁻¹, wh)`.
    pub fn act(&self, rs: &RootSystem, w: &WeylElement) -> LabelKey {
        let mut p: Vec<usize> = self.p.iter().map(|&a| w.act(a)).collect();
        let mut p_prime: Vec<usize> = self.p_prime.iter().map(|&a| w.act(a)).collect();
        let mut sigma: Vec<(usize, usize)> = self.sigma.iter().map(|&(a, b)| (w.act(a), w.act(b))).collect();
        p.sort_unstable();
        p_prime.sort_unstable();
        sigma.sort_unstable();
        LabelKey { p, p_prime, sigma, h: w.act_cartan(rs, &self.h) }
    }
}

/// Lexicographically minimal element of the `W`-orbit of the tuple.
pub fn weyl_canonical_label(rs: &RootSystem, weyl: &[WeylElement], key: &LabelKey) -> LabelKey {
    weyl.iter().map(|w| key.act(rs, w)).min().unwrap_or_else(|| key.clone())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::exactlin::int;
    use crate::rootsys::{build_root_system, enumerate_parabolic_subsets, ParabolicSubset};

    #[test]
    fn full_data_is_fixed() {
        let rs = build_root_system("A2").unwrap();
        let w = rs.weyl_group();
        let all = rs.all_roots();
        let key = LabelKey::new(&all, &all, &RootIsometry::identity(&all), &[int(0), int(0)]);
        assert_eq!(weyl_canonical_label(&rs, &w, &key), key);
    }

    #[test]
    fn conjugates_share_a_key() {
        let rs = build_root_system("A2").unwrap();
        let w = rs.weyl_group();
        let p = ParabolicSubset::standard(&rs, &[0]);
        let levi = p.levi().clone();
        let key = LabelKey::new(p.members(), p.members(), &RootIsometry::identity(&levi), &[int(0), int(0)]);
        let keys: BTreeSet<LabelKey> = w.iter().map(|x| weyl_canonical_label(&rs, &w, &key.act(&rs, x))).collect();
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn separates_distinct_parabolic_orbits() {
        let rs = build_root_system("B2").unwrap();
        let w = rs.weyl_group();
        let keys: BTreeSet<LabelKey> = enumerate_parabolic_subsets(&rs)
            .unwrap()
            .iter()
            .map(|p| {
                let key = LabelKey::new(p.members(), p.members(), &RootIsometry::identity(p.levi()), &[int(0), int(0)]);
                weyl_canonical_label(&rs, &w, &key)
            })
            .collect();
        // one orbit per subset of simple roots
        assert_eq!(keys.len(), 4);
    }
}
