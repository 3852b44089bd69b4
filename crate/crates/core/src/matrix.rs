use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ring operations needed by the reference multiplication algorithms.
pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// `self += a · b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Row-major dense matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S> DenseMatrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows.checked_mul(cols) != Some(data.len()) {
            return Err(Error::BadShape { rows, cols, len: data.len() });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            let len = rows.iter().map(Vec::len).sum();
            return Err(Error::BadShape { rows: r, cols: c, len });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Panics if `rows` or `cols` is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl DoubleEndedIterator<Item = &S> + ExactSizeIterator + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[S]> + '_ {
        self.data.chunks(self.cols)
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Element-wise combination of two equally shaped matrices.
    pub fn zip_with<T, U>(&self, other: &DenseMatrix<T>, mut f: impl FnMut(&S, &T) -> U) -> Result<DenseMatrix<U>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::BadShape { rows: self.rows, cols: self.cols, len: other.data.len() });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self
    where
        S: Clone,
    {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Errors unless `self · other` is defined.
    pub fn check_product<T>(&self, other: &DenseMatrix<T>) -> Result<()> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(())
    }
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn is_zero(&self) -> bool {
        let zero = S::zero();
        self.data.iter().all(|x| *x == zero)
    }
}

impl DenseMatrix<BigInt> {
    pub fn identity(n: usize) -> Self {
        DenseMatrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { <BigInt as Zero>::zero() })
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&v| BigInt::from(v)).collect())
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        self.get(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_is_checked() {
        assert!(DenseMatrix::new(2, 2, vec![1, 2, 3]).is_err());
        assert!(DenseMatrix::<i32>::new(0, 2, vec![]).is_err());
        assert!(DenseMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
        let m = DenseMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m[(1, 2)], 6);
        assert_eq!(m.column(1).copied().collect::<Vec<_>>(), vec![2, 5]);
        assert_eq!(m.transpose().row(2), &[3, 6]);
    }

    #[test]
    fn product_shape() {
        let a = DenseMatrix::<BigInt>::zeros(2, 3);
        let b = DenseMatrix::<BigInt>::zeros(2, 3);
        assert_eq!(a.check_product(&b), Err(Error::DimensionMismatch(2, 3, 2, 3)));
        assert!(a.check_product(&b.transpose()).is_ok());
    }
}
