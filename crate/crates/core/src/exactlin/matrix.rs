use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense row-major matrix.
///
/// Zero-row and zero-column matrices are legal; the empty matrix presents
/// the zero group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<BigInt>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.at(idx[i], j).clone())
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.at(i, idx[j]).clone())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::filled(self.rows, other.cols, T::zero());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a * other.at(k, j);
                    *out.at_mut(i, j) += &p;
                }
            }
        }
        out
    }
}

impl IntMatrix {
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::from_vec(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.at(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / &prev;
                    *a.at_mut(i, j) = v;
                }
            }
            prev = a.at(k, k).clone();
        }
        sign * a.at(n - 1, n - 1)
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = IntMatrix::from_i64(3, 3, &[2, -1, 3, 0, 4, 1, 5, 2, -2]);
        // 2(4*-2 - 1*2) - (-1)(0*-2 - 1*5) + 3(0*2 - 4*5)
        assert_eq!(m.determinant(), BigInt::from(-20 - 5 - 60));
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn product_with_empty_inner_dimension_is_zero() {
        let a: Matrix<i64> = Matrix::zeros(2, 0);
        let b: Matrix<i64> = Matrix::zeros(0, 3);
        assert_eq!(a.mul(&b), Matrix::zeros(2, 3));
    }
}
