//! Dense matrices over an arbitrary scalar, plus the exact-integer scalar
//! trait used by the normal-form algorithms in [`crate::linalg`].
//!
//! Vectors are column vectors throughout the crate: a map is a
//! `target × source` matrix acting by `m.mul_vec(x)`, and a basis of a
//! sublattice is stored as the columns of a matrix.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{NumAssign, Signed};

/// Exact integer scalar: everything the Smith/Hermite algorithms need.
pub trait Scalar: Integer + Signed + NumAssign + Clone + Hash + fmt::Debug + fmt::Display {}
impl<T: Integer + Signed + NumAssign + Clone + Hash + fmt::Debug + fmt::Display> Scalar for T {}

/// Dense `rows × cols` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + num_traits::Zero> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }
}

impl<T: Clone + num_traits::Zero + num_traits::One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T: Clone> Mat<T> {
    /// Builds a matrix from rows; all rows must have equal length.
    /// An empty list yields a `0 × cols` matrix with `cols = 0`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<T>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Mat { rows: r, cols: c, data: Vec::with_capacity(r * c) };
        for i in 0..r {
            for col in &cols {
                m.data.push(col[i].clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_list(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_list(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
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

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { other[(i - self.rows, j)].clone() }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat<T> {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Keeps the first `k` columns.
    pub fn take_cols(&self, k: usize) -> Mat<T> {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>())
    }

    /// Drops the first `k` columns.
    pub fn drop_cols(&self, k: usize) -> Mat<T> {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &(k..self.cols).collect::<Vec<_>>())
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T> Mat<T>
where
    T: Clone + num_traits::Zero + Add<Output = T> + Mul<Output = T>,
{
    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }
}

impl<T> Mat<T>
where
    T: Clone + Add<Output = T>,
{
    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + other[(i, j)].clone())
    }
}

impl<T> Mat<T>
where
    T: Clone + Sub<Output = T>,
{
    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - other[(i, j)].clone())
    }
}

impl<T> Mat<T>
where
    T: Clone + Neg<Output = T>,
{
    pub fn neg(&self) -> Mat<T> {
        self.map(|a| -a.clone())
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dot product of two equal-length slices.
pub fn dot<T>(a: &[T], b: &[T]) -> T
where
    T: Clone + num_traits::Zero + Add<Output = T> + Mul<Output = T>,
{
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, Int};

    fn m(rows: Vec<Vec<i64>>) -> Mat<Int> {
        Mat::from_rows(rows).map(|v| int(*v))
    }

    #[test]
    fn product_and_transpose() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), m(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), m(vec![vec![1, 3], vec![2, 4]]));
    }

    #[test]
    fn empty_shapes() {
        let a: Mat<Int> = Mat::zeros(0, 3);
        let b: Mat<Int> = Mat::zeros(3, 0);
        assert_eq!(a.mul(&b).rows(), 0);
        assert_eq!(b.mul(&a), Mat::zeros(3, 3));
        assert!(Mat::<Int>::identity(0).is_zero());
    }

    #[test]
    fn stack_and_columns() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let h = a.hstack(&Mat::identity(2));
        assert_eq!(h.cols(), 4);
        assert_eq!(h.col(2), vec![int(1), int(0)]);
        let from_cols = Mat::from_cols(a.col_list());
        assert_eq!(from_cols, a);
    }
}
