use std::fmt;

use super::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: Vec<Vec<F>>) -> Self {
        Self::from_rows(rows, cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cur = &mut out.data[i * rhs.cols + j];
                        *cur = cur.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &F) -> Matrix<F> {
        let data = self.data.iter().map(|a| a.mul_ref(k)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Matrix::from_rows(self.cols + other.cols, rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form with the pivot columns.
    ///
    /// Pivoting is fixed: columns are scanned left to right and the first row
    /// (from the current one down) with a nonzero entry becomes the pivot row.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..cols {
                let v = self.data[r * cols + j].mul_ref(&inv);
                self.data[r * cols + j] = v;
            }
            let pivot_row: Vec<F> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[i * cols + c + off].sub_mul_assign(&factor, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{v : self · v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect();
        Matrix::from_rows(self.cols, rows)
    }

    /// A particular solution of `self · x = b` (free variables set to zero).
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_cols(self.rows, vec![b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix by elimination.
    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det.mul_ref(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].mul_ref(&inv);
                for j in c..n {
                    let v = m[(c, j)].clone();
                    m.data[i * n + j].sub_mul_assign(&factor, &v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let rows = (0..n).map(|i| r.row(i)[n..].to_vec()).collect();
        Some(Matrix::from_rows(n, rows))
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix<num_rational::BigRational> {
    pub fn lift<G: Field>(&self) -> Matrix<G> {
        self.map(|x| G::from(x.clone()))
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add_ref(&x.mul_ref(y));
        }
    }
    acc
}

/// `y += k * x`
pub fn axpy<F: Field>(y: &mut [F], k: &F, x: &[F]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a = a.add_ref(&k.mul_ref(b));
        }
    }
}

pub fn vec_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_scale<F: Field>(a: &[F], k: &F) -> Vec<F> {
    a.iter().map(|x| x.mul_ref(k)).collect()
}

pub fn is_zero_vec<F: Field>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;
    use num_traits::{One, Zero};

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    #[test]
    fn rref_identity() {
        let (r, p) = m(&[&[1, 0], &[0, 1]]).rref();
        assert_eq!(r, m(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k.rows(), 1);
        assert!(a.mul_vec(k.row(0)).iter().all(Zero::is_zero));
        let b = vec![Scalar::from_int(6), Scalar::from_int(12), Scalar::from_int(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(a.solve(&[Scalar::one(), Scalar::zero(), Scalar::zero()]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
