use std::collections::BTreeSet;

use super::{RootSet, RootSystem, ENUMERATION_RANK_CAP};
use crate::error::{Error, Result};

/// Closed under root addition inside `R`.
pub fn is_closed(rs: &RootSystem, set: &RootSet) -> bool {
    set.iter().all(|a| set.iter().all(|b| rs.sum(a, b).is_none_or(|c| set.contains(c))))
}

/// Closed and `P ∪ (−P) = R`.
pub fn is_parabolic(rs: &RootSystem, set: &RootSet) -> bool {
    (0..rs.num_roots()).all(|a| set.contains(a) || set.contains(rs.neg(a))) && is_closed(rs, set)
}

/// Parabolic subset `P ⊂ R` with its Levi part `A = P ∩ (−P)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    members: RootSet,
    levi: RootSet,
}

impl ParabolicSubset {
    pub fn new(rs: &RootSystem, members: RootSet) -> Result<Self> {
        if let Some(bad) = members.iter().find(|&i| i >= rs.num_roots()) {
            return Err(Error::InvalidParabolic(format!("root index {bad} out of range")));
        }
        if !is_parabolic(rs, &members) {
            return Err(Error::InvalidParabolic(format!("{:?} is not closed or misses ±α", members.as_slice())));
        }
        let levi = members.iter().filter(|&a| members.contains(rs.neg(a))).collect();
        Ok(ParabolicSubset { members, levi })
    }

    /// Standard parabolic `R₊ ∪ (R ∩ span(−S))` of a set `S` of simple-root positions.
    pub fn standard(rs: &RootSystem, simple: &[usize]) -> Self {
        let in_span = |r: usize| rs.root(r).iter().enumerate().all(|(k, &c)| c == 0 || simple.contains(&k));
        let members = (0..rs.num_roots()).filter(|&r| rs.is_positive(r) || in_span(r)).collect();
        ParabolicSubset::new(rs, members).expect("standard parabolic")
    }

    pub fn full(rs: &RootSystem) -> Self {
        ParabolicSubset::new(rs, rs.all_roots()).unwrap()
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.contains(root)
    }

    /// `A = P ∩ (−P)`
    pub fn levi(&self) -> &RootSet {
        &self.levi
    }
}

/// All parabolic subsets, as the W-orbits of the standard ones. Sorted by member list.
pub fn enumerate_parabolic_subsets(rs: &RootSystem) -> Result<Vec<ParabolicSubset>> {
    if rs.rank() > ENUMERATION_RANK_CAP {
        return Err(Error::RankCap { rank: rs.rank(), cap: ENUMERATION_RANK_CAP });
    }
    let weyl = rs.weyl_group();
    let mut found: BTreeSet<RootSet> = BTreeSet::new();
    for mask in 0u32..(1 << rs.rank()) {
        let simple: Vec<usize> = (0..rs.rank()).filter(|i| mask & (1 << i) != 0).collect();
        let std = ParabolicSubset::standard(rs, &simple);
        for w in &weyl {
            found.insert(std.members.map(|r| w.act(r)));
        }
    }
    Ok(found.into_iter().map(|m| ParabolicSubset::new(rs, m).expect("W-image of a parabolic")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn brute_force(rs: &RootSystem) -> BTreeSet<RootSet> {
        let n = rs.num_roots();
        (0u64..(1 << n))
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<RootSet>())
            .filter(|s| is_parabolic(rs, s))
            .collect()
    }

    #[test]
    fn counts_match_brute_force() {
        for (t, expected) in [("A1", 3), ("A2", 13), ("B2", 17), ("A1xA1", 9), ("G2", 25)] {
            let rs = build_root_system(t).unwrap();
            let listed: BTreeSet<RootSet> = enumerate_parabolic_subsets(&rs).unwrap().into_iter().map(|p| p.members).collect();
            let oracle = brute_force(&rs);
            assert_eq!(listed, oracle, "{t}");
            assert_eq!(listed.len(), expected, "{t}");
        }
    }

    #[test]
    fn levi_is_closed_and_symmetric() {
        let rs = build_root_system("B3").unwrap();
        for p in enumerate_parabolic_subsets(&rs).unwrap() {
            assert!(is_closed(&rs, p.levi()));
            assert!(p.levi().iter().all(|a| p.levi().contains(rs.neg(a))));
        }
    }

    #[test]
    fn rank_cap() {
        let rs = build_root_system("A5").unwrap();
        assert!(matches!(enumerate_parabolic_subsets(&rs), Err(Error::RankCap { .. })));
    }

    #[test]
    fn closed_under_weyl_action() {
        let rs = build_root_system("A3").unwrap();
        let list: BTreeSet<RootSet> = enumerate_parabolic_subsets(&rs).unwrap().into_iter().map(|p| p.members).collect();
        for w in rs.weyl_group() {
            for p in &list {
                assert!(list.contains(&p.map(|r| w.act(r))));
            }
        }
    }
}
