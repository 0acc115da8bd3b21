use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Ring;

/// Dense matrix over a supported ring, row-major, entries kept canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Mat {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Mat {
        Mat {
            ring,
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Mat {
        let mut m = Mat::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::from(1);
        }
        m
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(ring.reduce(&f(i, j)));
            }
        }
        Mat { ring, rows, cols, data }
    }

    /// Builds from row vectors. All rows must have length `cols`.
    pub fn from_rows(ring: Ring, rows: &[Vec<i64>]) -> Mat {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat::from_fn(ring, rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    /// Builds a `rows`-row matrix from column vectors.
    pub fn from_cols(ring: Ring, rows: usize, cols: &[Vec<i64>]) -> Mat {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Mat::from_fn(ring, rows, cols.len(), |i, j| BigInt::from(cols[j][i]))
    }

    pub fn from_big_cols(ring: Ring, rows: usize, cols: &[Vec<BigInt>]) -> Mat {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Mat::from_fn(ring, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn diagonal(ring: Ring, diag: &[i64]) -> Mat {
        let n = diag.len();
        Mat::from_fn(ring, n, n, |i, j| if i == j { BigInt::from(diag[i]) } else { BigInt::zero() })
    }

    /// Column vector.
    pub fn column(ring: Ring, v: &[BigInt]) -> Mat {
        Mat::from_fn(ring, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = self.ring.reduce(&v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == BigInt::from(1)
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Same entries reinterpreted over another ring (reducing if needed).
    pub fn with_ring(&self, ring: Ring) -> Mat {
        Mat::from_fn(ring, self.rows, self.cols, |i, j| self.get(i, j).clone())
    }

    pub fn col_vec(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col_vec(j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &BigInt) -> Mat {
        Mat::from_fn(self.ring, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.ring, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn row_range(&self, start: usize, end: usize) -> Mat {
        Mat::from_fn(self.ring, end - start, self.cols, |i, j| self.get(start + i, j).clone())
    }

    pub fn col_range(&self, start: usize, end: usize) -> Mat {
        Mat::from_fn(self.ring, self.rows, end - start, |i, j| self.get(i, start + j).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let c = self.cols;
        Mat::from_fn(self.ring, self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j).clone()
            } else {
                other.get(i, j - c).clone()
            }
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let r = self.rows;
        Mat::from_fn(self.ring, r + other.rows, self.cols, |i, j| {
            if i < r {
                self.get(i, j).clone()
            } else {
                other.get(i - r, j).clone()
            }
        })
    }

    pub fn hstack_all(ring: Ring, rows: usize, parts: &[&Mat]) -> Mat {
        parts.iter().fold(Mat::zeros(ring, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vstack_all(ring: Ring, cols: usize, parts: &[&Mat]) -> Mat {
        parts.iter().fold(Mat::zeros(ring, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn block_diag(&self, other: &Mat) -> Mat {
        let (r, c) = self.shape();
        Mat::from_fn(self.ring, r + other.rows, c + other.cols, |i, j| {
            if i < r && j < c {
                self.get(i, j).clone()
            } else if i >= r && j >= c {
                other.get(i - r, j - c).clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Kronecker product; with column-major `vec`, `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (br, bc) = other.shape();
        Mat::from_fn(self.ring, self.rows * br, self.cols * bc, |i, j| {
            self.get(i / br, j / bc) * other.get(i % br, j % bc)
        })
    }

    /// Column-major vectorization as a column matrix.
    pub fn vectorize(&self) -> Mat {
        Mat::from_fn(self.ring, self.rows * self.cols, 1, |i, _| {
            self.get(i % self.rows, i / self.rows).clone()
        })
    }

    /// Inverse of [`Mat::vectorize`] applied to column `col` of `v`.
    pub fn unvectorize(v: &Mat, col: usize, rows: usize, cols: usize) -> Mat {
        assert_eq!(v.rows, rows * cols, "unvectorize length mismatch");
        Mat::from_fn(v.ring, rows, cols, |i, j| v.get(j * rows + i, col).clone())
    }

    /// Drops columns that are zero.
    pub fn nonzero_cols(&self) -> Mat {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
            .collect();
        self.select_cols(&keep)
    }

    pub(crate) fn raw(&self) -> &[BigInt] {
        &self.data
    }

    pub(crate) fn from_raw(ring: Ring, rows: usize, cols: usize, data: Vec<BigInt>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        let data = data.iter().map(|x| ring.reduce(x)).collect();
        Mat { ring, rows, cols, data }
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.ring, rhs.ring, "matrix product ring mismatch");
        let mut data = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Mat::from_raw(self.ring, self.rows, rhs.cols, data)
    }
}

impl Add for &Mat {
    type Output = Mat;

    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Mat::from_fn(self.ring, self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Mat {
    type Output = Mat;

    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Mat::from_fn(self.ring, self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat::from_fn(self.ring, self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}>{}x{}[", self.ring, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row_vec(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_vectorization_identity() {
        let r = Ring::Integers;
        let a = Mat::from_rows(r, &[vec![1, 2], vec![3, 4], vec![0, -1]]);
        let x = Mat::from_rows(r, &[vec![2, -1, 0], vec![5, 7, 1]]);
        let b = Mat::from_rows(r, &[vec![1, 0], vec![2, 3], vec![-2, 1]]);
        let lhs = (&(&a * &x) * &b).vectorize();
        let rhs = &b.transpose().kron(&a) * &x.vectorize();
        assert_eq!(lhs, rhs);
        assert_eq!(Mat::unvectorize(&x.vectorize(), 0, 2, 3), x);
    }

    #[test]
    fn entries_reduce_mod_n() {
        let m = Mat::from_rows(Ring::IntegersMod(6), &[vec![7, -1]]);
        assert_eq!(m.row_vec(0), vec![BigInt::from(1), BigInt::from(5)]);
    }
}
