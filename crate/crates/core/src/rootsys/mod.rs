//! Root systems, Weyl groups, parabolic subsets and root isometries.
//!
//! Roots are stored as integer coordinate vectors over the simple roots. The
//! inner product is the symmetric Gram matrix of the simple roots with long
//! roots of every simple factor normalized to `(α, α) = 2`. Root indices are
//! stable: positive roots come first, sorted by height, followed by their
//! negatives in the same order, so `neg(i) = i ± n_pos`.

mod cartan;
mod isometry;
mod label;
mod parabolic;
mod weyl;

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub use cartan::{CartanType, SimpleType};
pub use isometry::{enumerate_isometries, levi_of_sigma, preserves_simple_system, RootIsometry};
pub use label::{weyl_canonical_label, LabelKey};
pub use parabolic::{enumerate_parabolic_subsets, is_closed, is_parabolic, ParabolicSubset};
pub use weyl::WeylElement;

use crate::error::Result;
use crate::exactlin::{int, Field, Matrix};

/// Maximum rank for exhaustive enumerations.
pub const ENUMERATION_RANK_CAP: usize = 4;

/// Sorted set of root indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(Vec<usize>);

impl RootSet {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        RootSet(v)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn intersect(&self, other: &RootSet) -> RootSet {
        RootSet(self.0.iter().copied().filter(|&i| other.contains(i)).collect())
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> RootSet {
        RootSet::new(self.0.iter().map(|&i| f(i)).collect())
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        RootSet::new(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    rank: usize,
    gram: Vec<Vec<BigRational>>,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩ = 2(α_i, α_j)/(α_i, α_i)`
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    norms: Vec<BigRational>,
}

/// Builds the root system of a Cartan type string such as `"A2"`, `"B2"` or `"A1xA1"`.
pub fn build_root_system(type_spec: &str) -> Result<RootSystem> {
    let ctype: CartanType = type_spec.parse()?;
    Ok(RootSystem::new(ctype))
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        let rank = ctype.rank();
        let gram = ctype.gram();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = int(2) * gram[i][j].clone() / gram[i][i].clone();
                        assert!(v.is_integer(), "non-crystallographic Gram matrix");
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();

        let pairing = |beta: &[i64], i: usize| -> i64 { (0..rank).map(|j| beta[j] * cartan[i][j]).sum() };

        // positive roots by increasing height via root strings
        let mut positive: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
        let mut frontier = positive.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..rank {
                    let is_simple_i = beta.iter().enumerate().all(|(k, &c)| c == i64::from(k == i));
                    if is_simple_i {
                        continue;
                    }
                    let mut q = 0;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= q + 1;
                        if known.contains(&down) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let p = q - pairing(beta, i);
                    if p > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            positive.extend(next.iter().cloned());
            frontier = next;
        }
        positive.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let mut rs = RootSystem { ctype, rank, gram, cartan, roots, n_pos, index, norms: Vec::new() };
        rs.norms = (0..rs.roots.len()).map(|k| rs.inner(k, k)).collect();
        rs
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the `i`-th simple root.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(i < self.rank);
        i
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet((0..self.num_roots()).collect())
    }

    pub fn positive_roots(&self) -> RootSet {
        RootSet((0..self.n_pos).collect())
    }

    /// Index of `α_i + α_j` when it is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.index_of(&v)
    }

    pub fn difference(&self, i: usize, j: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a - b).collect();
        self.index_of(&v)
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inner_coords(&self, a: &[i64], b: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    acc += self.gram[i][j].clone() * int(a[i] * b[j]);
                }
            }
        }
        acc
    }

    pub fn inner(&self, i: usize, j: usize) -> BigRational {
        self.inner_coords(&self.roots[i], &self.roots[j])
    }

    pub fn norm(&self, i: usize) -> &BigRational {
        &self.norms[i]
    }

    /// `⟨β, α∨⟩ = 2(β, α)/(α, α)` for roots `β`, `α`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i64 {
        let v = int(2) * self.inner(beta, alpha) / self.norms[alpha].clone();
        v.to_integer().to_i64().expect("crystallographic pairing")
    }

    /// `⟨β, α_i∨⟩` for the `i`-th simple root.
    pub fn simple_pairing(&self, beta: usize, i: usize) -> i64 {
        (0..self.rank).map(|j| self.roots[beta][j] * self.cartan[i][j]).sum()
    }

    /// Coroot `α∨` in the basis of simple coroots (integer coordinates).
    pub fn coroot(&self, alpha: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|i| {
                let c = int(self.roots[alpha][i]) * self.gram[i][i].clone() / self.norms[alpha].clone();
                c.to_integer().to_i64().expect("integral coroot")
            })
            .collect()
    }

    /// Root value `α(h)` for `h` given in simple-coroot coordinates.
    pub fn eval_on_cartan<F: Field>(&self, alpha: usize, h: &[F]) -> F {
        let mut acc = F::zero();
        for (i, hi) in h.iter().enumerate().take(self.rank) {
            let v = self.simple_pairing(alpha, i);
            if v != 0 && !hi.is_zero() {
                acc = acc.add_ref(&hi.mul_ref(&F::from(int(v))));
            }
        }
        acc
    }

    /// Reflection `s_α(β)`.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let k = self.pairing(beta, alpha);
        let v: Vec<i64> = self.roots[beta].iter().zip(&self.roots[alpha]).map(|(b, a)| b - k * a).collect();
        self.index_of(&v).expect("reflections permute roots")
    }

    /// `s_i` on an element of the Cartan subalgebra in simple-coroot coordinates
    /// (extra trailing coordinates, e.g. a center, are left untouched).
    pub fn reflect_cartan<F: Field>(&self, i: usize, h: &[F]) -> Vec<F> {
        let value = self.eval_on_cartan(self.simple(i), h);
        let mut out = h.to_vec();
        out[i] = out[i].clone() - value;
        out
    }

    /// Integer coordinates of `root` over the given base, if it lies in its ℚ-span with integer coefficients.
    pub fn coords_in_base(&self, base: &[usize], root: usize) -> Option<Vec<i64>> {
        if base.is_empty() {
            return None;
        }
        let cols: Vec<Vec<BigRational>> = base.iter().map(|&b| self.roots[b].iter().map(|&c| int(c)).collect()).collect();
        let m = Matrix::from_cols(self.rank, cols);
        let target: Vec<BigRational> = self.roots[root].iter().map(|&c| int(c)).collect();
        let x = m.solve(&target)?;
        x.iter().map(|c| c.is_integer().then(|| c.to_integer().to_i64().unwrap())).collect()
    }

    /// Linear combination `Σ c_k · root_k` as coordinates.
    pub fn combine(&self, base: &[usize], coeffs: &[i64]) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for (&b, &c) in base.iter().zip(coeffs) {
            for (x, r) in v.iter_mut().zip(&self.roots[b]) {
                *x += c * r;
            }
        }
        v
    }

    /// Base of a closed symmetric subsystem, relative to the global positive system.
    pub fn simple_system_of(&self, subsystem: &RootSet) -> Vec<usize> {
        let pos: Vec<usize> = subsystem.iter().filter(|&i| self.is_positive(i)).collect();
        pos.iter()
            .copied()
            .filter(|&a| {
                !pos.iter().any(|&b| b != a && self.difference(a, b).is_some_and(|c| subsystem.contains(c) && self.is_positive(c)))
            })
            .collect()
    }

    /// Rank (dimension of the linear span) of a set of roots.
    pub fn span_rank(&self, set: &RootSet) -> usize {
        let rows: Vec<Vec<BigRational>> = set.iter().map(|i| self.roots[i].iter().map(|&c| int(c)).collect()).collect();
        Matrix::from_rows(self.rank, rows).rank()
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        weyl::generate(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (t, n) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A1xA1", 4), ("A3", 12), ("B3", 18), ("C3", 18), ("D4", 24), ("F4", 48), ("E6", 72)] {
            assert_eq!(build_root_system(t).unwrap().num_roots(), n, "{t}");
        }
    }

    #[test]
    fn unknown_type() {
        assert!(build_root_system("H3").is_err());
        assert!(build_root_system("D3").is_err());
        assert!(build_root_system("").is_err());
    }

    #[test]
    fn crystallographic_and_symmetric() {
        for t in ["A2", "B2", "G2", "B3", "C3", "F4"] {
            let rs = build_root_system(t).unwrap();
            for a in 0..rs.num_roots() {
                assert_eq!(rs.root(rs.neg(a)), rs.root(a).iter().map(|c| -c).collect::<Vec<_>>().as_slice());
                for b in 0..rs.num_roots() {
                    let _ = rs.pairing(b, a);
                    assert!(rs.reflect(a, b) < rs.num_roots());
                }
            }
        }
    }

    #[test]
    fn long_roots_have_norm_two() {
        for t in ["B2", "C3", "G2", "F4"] {
            let rs = build_root_system(t).unwrap();
            let max = (0..rs.num_roots()).map(|i| rs.norm(i).clone()).max().unwrap();
            assert_eq!(max, int(2), "{t}");
        }
    }
}
