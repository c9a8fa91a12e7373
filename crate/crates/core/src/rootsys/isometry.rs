use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{RootSet, RootSystem, ENUMERATION_RANK_CAP};
use crate::error::{Error, Result};

/// A scalar-product preserving bijection `σ : A → A′` between root subsystems.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIsometry {
    source: RootSet,
    target: RootSet,
    map: BTreeMap<usize, usize>,
}

impl RootIsometry {
    /// Validates bijectivity onto `target` and preservation of the inner product.
    pub fn new(rs: &RootSystem, source: RootSet, target: RootSet, map: BTreeMap<usize, usize>) -> Result<Self> {
        if source.len() != target.len() || map.len() != source.len() {
            return Err(Error::InvalidIsometry("map is not a bijection A -> A'".into()));
        }
        if !source.iter().all(|a| map.contains_key(&a)) {
            return Err(Error::InvalidIsometry("map is not defined on all of A".into()));
        }
        let image: RootSet = map.values().copied().collect();
        if image != target {
            return Err(Error::InvalidIsometry("image differs from A'".into()));
        }
        for (&a, &sa) in &map {
            for (&b, &sb) in &map {
                if rs.inner(a, b) != rs.inner(sa, sb) {
                    return Err(Error::InvalidIsometry(format!("(σ{a}, σ{b}) != ({a}, {b})")));
                }
            }
        }
        Ok(RootIsometry { source, target, map })
    }

    pub fn identity(set: &RootSet) -> Self {
        RootIsometry { source: set.clone(), target: set.clone(), map: set.iter().map(|a| (a, a)).collect() }
    }

    pub fn source(&self) -> &RootSet {
        &self.source
    }

    pub fn target(&self) -> &RootSet {
        &self.target
    }

    pub fn map(&self) -> &BTreeMap<usize, usize> {
        &self.map
    }

    pub fn apply(&self, root: usize) -> Option<usize> {
        self.map.get(&root).copied()
    }

    pub fn apply_inverse(&self, root: usize) -> Option<usize> {
        self.map.iter().find(|(_, &v)| v == root).map(|(&k, _)| k)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map.iter().map(|(&a, &b)| (a, b)).collect()
    }
}

/// `U = {α ∈ A : σᵏ(α) ∈ A for all k ≥ 0}`, the largest σ-stable part of `A ∩ A′`.
pub fn levi_of_sigma(sigma: &RootIsometry) -> RootSet {
    let bound = sigma.source.len() + 1;
    sigma
        .source
        .iter()
        .filter(|&a| {
            let mut cur = a;
            for _ in 0..bound {
                match sigma.apply(cur) {
                    Some(next) if sigma.source.contains(next) => cur = next,
                    _ => return false,
                }
            }
            true
        })
        .collect()
}

/// Whether σ fixes (setwise) some base of `U`. All bases of `U` form one
/// `W(U)`-orbit, which is searched exhaustively.
pub fn preserves_simple_system(rs: &RootSystem, sigma: &RootIsometry) -> Result<bool> {
    let u = levi_of_sigma(sigma);
    if u.is_empty() {
        return Ok(true);
    }
    let rank = rs.span_rank(&u);
    if rank > ENUMERATION_RANK_CAP {
        return Err(Error::RankCap { rank, cap: ENUMERATION_RANK_CAP });
    }
    let base = RootSet::new(rs.simple_system_of(&u));
    let mut seen: BTreeSet<RootSet> = BTreeSet::from([base.clone()]);
    let mut queue = VecDeque::from([base]);
    while let Some(delta) = queue.pop_front() {
        if delta.map(|a| sigma.apply(a).expect("U ⊂ A")) == delta {
            return Ok(true);
        }
        for d in delta.iter() {
            let next = delta.map(|a| rs.reflect(d, a));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// All isometries `A → A′`, obtained by sending a base of `A` to tuples in `A′`
/// with the same Gram matrix and keeping the linear extensions that map `A` onto `A′`.
pub fn enumerate_isometries(rs: &RootSystem, a: &RootSet, a_prime: &RootSet) -> Vec<RootIsometry> {
    if a.len() != a_prime.len() {
        return Vec::new();
    }
    if a.is_empty() {
        return vec![RootIsometry { source: a.clone(), target: a_prime.clone(), map: BTreeMap::new() }];
    }
    let base = rs.simple_system_of(a);
    let coords: Vec<(usize, Vec<i64>)> =
        a.iter().map(|r| (r, rs.coords_in_base(&base, r).expect("root of A in its base"))).collect();
    let targets: Vec<usize> = a_prime.iter().collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    extend(rs, &base, &targets, &mut chosen, &mut |images: &[usize]| {
        let mut map = BTreeMap::new();
        for (r, c) in &coords {
            let v = rs.combine(images, c);
            match rs.index_of(&v) {
                Some(img) if a_prime.contains(img) => {
                    map.insert(*r, img);
                }
                _ => return,
            }
        }
        if map.values().collect::<BTreeSet<_>>().len() == map.len() {
            out.push(RootIsometry { source: a.clone(), target: a_prime.clone(), map });
        }
    });
    out.sort();
    out
}

fn extend(rs: &RootSystem, base: &[usize], targets: &[usize], chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let k = chosen.len();
    if k == base.len() {
        emit(chosen);
        return;
    }
    for &t in targets {
        if chosen.contains(&t) || rs.inner(t, t) != rs.inner(base[k], base[k]) {
            continue;
        }
        if (0..k).all(|j| rs.inner(t, chosen[j]) == rs.inner(base[k], base[j])) {
            chosen.push(t);
            extend(rs, base, targets, chosen, emit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    /// Brute force over all bijections A → A′ preserving the inner product.
    fn brute_force_count(rs: &RootSystem, a: &RootSet, b: &RootSet) -> usize {
        fn rec(rs: &RootSystem, a: &[usize], b: &[usize], used: &mut Vec<bool>, img: &mut Vec<usize>) -> usize {
            let k = img.len();
            if k == a.len() {
                return 1;
            }
            let mut total = 0;
            for j in 0..b.len() {
                if used[j] {
                    continue;
                }
                if (0..=k).all(|i| {
                    let ti = if i == k { b[j] } else { img[i] };
                    rs.inner(a[i], a[k]) == rs.inner(ti, b[j])
                }) {
                    used[j] = true;
                    img.push(b[j]);
                    total += rec(rs, a, b, used, img);
                    img.pop();
                    used[j] = false;
                }
            }
            total
        }
        if a.len() != b.len() {
            return 0;
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (a.iter().collect(), b.iter().collect());
        rec(rs, &a, &b, &mut vec![false; b.len()], &mut Vec::new())
    }

    #[test]
    fn a1_has_two_isometries() {
        let rs = build_root_system("A1").unwrap();
        let all = rs.all_roots();
        assert_eq!(enumerate_isometries(&rs, &all, &all).len(), 2);
        assert_eq!(brute_force_count(&rs, &all, &all), 2);
    }

    #[test]
    fn a2_automorphisms() {
        let rs = build_root_system("A2").unwrap();
        let all = rs.all_roots();
        assert_eq!(enumerate_isometries(&rs, &all, &all).len(), 12);
        assert_eq!(brute_force_count(&rs, &all, &all), 12);
    }

    #[test]
    fn length_obstruction() {
        let rs = build_root_system("B2").unwrap();
        let short: RootSet = (0..rs.num_roots()).filter(|&i| rs.norm(i) == &crate::exactlin::int(1)).take(1).flat_map(|i| [i, rs.neg(i)]).collect();
        let long: RootSet = (0..rs.num_roots()).filter(|&i| rs.norm(i) == &crate::exactlin::int(2)).take(1).flat_map(|i| [i, rs.neg(i)]).collect();
        assert!(enumerate_isometries(&rs, &short, &long).is_empty());
        assert_eq!(brute_force_count(&rs, &short, &long), 0);
    }

    #[test]
    fn levi_examples() {
        let rs = build_root_system("A2").unwrap();
        let all = rs.all_roots();
        assert_eq!(levi_of_sigma(&RootIsometry::identity(&all)), all);
        // A = {±α1}, A′ = {±α2}, σ(α1) = α2
        let (a1, a2) = (rs.simple(0), rs.simple(1));
        let sigma = RootIsometry::new(
            &rs,
            RootSet::new(vec![a1, rs.neg(a1)]),
            RootSet::new(vec![a2, rs.neg(a2)]),
            BTreeMap::from([(a1, a2), (rs.neg(a1), rs.neg(a2))]),
        )
        .unwrap();
        assert!(levi_of_sigma(&sigma).is_empty());
    }

    #[test]
    fn simple_system_preservation() {
        let rs = build_root_system("A1xA1").unwrap();
        let all = rs.all_roots();
        let (b1, b2) = (rs.simple(0), rs.simple(1));
        let swap = BTreeMap::from([(b1, b2), (b2, b1), (rs.neg(b1), rs.neg(b2)), (rs.neg(b2), rs.neg(b1))]);
        let sigma = RootIsometry::new(&rs, all.clone(), all.clone(), swap).unwrap();
        assert!(preserves_simple_system(&rs, &sigma).unwrap());
        assert!(preserves_simple_system(&rs, &RootIsometry::identity(&all)).unwrap());

        let a1 = build_root_system("A1").unwrap();
        let all = a1.all_roots();
        let minus = BTreeMap::from([(0, 1), (1, 0)]);
        let sigma = RootIsometry::new(&a1, all.clone(), all, minus).unwrap();
        assert!(!preserves_simple_system(&a1, &sigma).unwrap());
    }

    #[test]
    fn isometries_preserve_inner_products() {
        let rs = build_root_system("B2").unwrap();
        let all = rs.all_roots();
        let isos = enumerate_isometries(&rs, &all, &all);
        assert_eq!(isos.len(), brute_force_count(&rs, &all, &all));
        for s in &isos {
            for a in all.iter() {
                for b in all.iter() {
                    assert_eq!(rs.inner(a, b), rs.inner(s.apply(a).unwrap(), s.apply(b).unwrap()));
                }
            }
        }
    }
}
