use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer row lattice in Hermite normal form.
///
/// Rows are independent, each pivot is positive, entries below a pivot are
/// zero and entries above it are reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Membership test by back-substitution against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (a, b) in rest.iter_mut().zip(row) {
                *a -= &q * b;
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}

/// Hermite normal form of the row lattice of `m` (`ambient` gives the width for empty input).
pub fn hnf(ambient: usize, m: &[Vec<BigInt>]) -> IntegerLattice {
    let mut rows: Vec<Vec<BigInt>> = m.to_vec();
    for r in &rows {
        assert_eq!(r.len(), ambient, "ragged integer matrix");
    }
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..ambient {
        if pivot_row == rows.len() {
            break;
        }
        // Euclid on column c among rows pivot_row..
        loop {
            let candidates: Vec<usize> = (pivot_row..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if candidates.is_empty() {
                break;
            }
            let best = *candidates.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            rows.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[pivot_row][c]);
                let pr = rows[pivot_row].clone();
                for (a, b) in rows[i].iter_mut().zip(&pr) {
                    *a -= &q * b;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][c].is_zero() {
            continue;
        }
        if rows[pivot_row][c].is_negative() {
            for a in rows[pivot_row].iter_mut() {
                *a = -a.clone();
            }
        }
        let pr = rows[pivot_row].clone();
        for i in 0..pivot_row {
            let q = rows[i][c].div_floor(&pr[c]);
            if !q.is_zero() {
                for (a, b) in rows[i].iter_mut().zip(&pr) {
                    *a -= &q * b;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    IntegerLattice { ambient, basis: rows }
}

/// ℤ-basis of the left kernel `{k ∈ ℤ^m : kᵀ·m = 0}` of an integer matrix with `m` rows.
pub fn integer_left_kernel(cols: usize, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let augmented: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| BigInt::from(u8::from(i == j))));
            r
        })
        .collect();
    let h = hnf(cols + n, &augmented);
    h.basis
        .into_iter()
        .filter(|row| row[..cols].iter().all(Zero::is_zero))
        .map(|row| row[cols..].to_vec())
        .collect()
}
