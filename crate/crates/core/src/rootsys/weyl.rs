use std::collections::{HashMap, VecDeque};

use super::RootSystem;
use crate::exactlin::Field;

/// Element of the Weyl group: a lexicographically minimal reduced word in
/// the simple reflections together with the induced permutation of roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { word: Vec::new(), perm: (0..rs.num_roots()).collect() }
    }

    /// Word `[i1, ..., ik]` meaning `s_{i1} ⋯ s_{ik}`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, root: usize) -> usize {
        self.perm[root]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j] = i;
        }
        WeylElement { word: self.word.iter().rev().copied().collect(), perm }
    }

    /// Action on the Cartan subalgebra (simple-coroot coordinates, extra coordinates fixed).
    pub fn act_cartan<F: Field>(&self, rs: &RootSystem, h: &[F]) -> Vec<F> {
        let mut v = h.to_vec();
        for &i in self.word.iter().rev() {
            v = rs.reflect_cartan(i, &v);
        }
        v
    }

    /// Integer matrix on simple-root coordinates, column `i` being `w(α_i)`.
    pub fn root_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            let img = rs.root(self.perm[rs.simple(i)]);
            for r in 0..n {
                m[r][i] = img[r];
            }
        }
        m
    }
}

/// Breadth-first enumeration. Words are extended on the right in generator
/// order, so the first word reaching an element is its shortlex-minimal one.
pub(super) fn generate(rs: &RootSystem) -> Vec<WeylElement> {
    let reflections: Vec<Vec<usize>> =
        (0..rs.rank()).map(|i| (0..rs.num_roots()).map(|b| rs.reflect(rs.simple(i), b)).collect()).collect();
    let start = WeylElement::identity(rs);
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut out = vec![start.clone()];
    seen.insert(start.perm.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (j, s) in reflections.iter().enumerate() {
            let cur = &out[k];
            // (w s_j)(β) = w(s_j(β))
            let perm: Vec<usize> = (0..rs.num_roots()).map(|b| cur.perm[s[b]]).collect();
            if seen.contains_key(&perm) {
                continue;
            }
            let mut word = cur.word.clone();
            word.push(j);
            seen.insert(perm.clone(), out.len());
            queue.push_back(out.len());
            out.push(WeylElement { word, perm });
        }
    }
    out
}
