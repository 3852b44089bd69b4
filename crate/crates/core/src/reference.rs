//! Schoolbook (IJK) and Strassen multiplication over any [`Scalar`].

use crate::error::Result;
use crate::matrix::{DenseMatrix, Scalar};

/// Strassen recursion stops at or below this size.
pub const DEFAULT_STRASSEN_CUTOFF: usize = 64;

pub fn schoolbook_multiply<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    a.check_product(b)?;
    let (rows, inner, cols) = (a.rows(), a.cols(), b.cols());
    let data = schoolbook_raw(a.data(), b.data(), rows, inner, cols);
    DenseMatrix::new(rows, cols, data)
}

fn schoolbook_raw<T: Scalar>(a: &[T], b: &[T], rows: usize, inner: usize, cols: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut acc = T::zero();
            for k in 0..inner {
                acc.add_product(&a[i * inner + k], &b[k * cols + j]);
            }
            out.push(acc);
        }
    }
    out
}

/// Strassen's seven-product recursion. Operands are zero-padded to the
/// enclosing square; odd sizes are padded by one at each level; blocks of
/// size `≤ cutoff` fall back to the schoolbook kernel.
pub fn strassen_multiply<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>, cutoff: usize) -> Result<DenseMatrix<T>> {
    a.check_product(b)?;
    let cutoff = cutoff.max(1);
    let n = a.rows().max(a.cols()).max(b.cols());
    let pa = pad(a.data(), a.rows(), a.cols(), n);
    let pb = pad(b.data(), b.rows(), b.cols(), n);
    let full = strassen_square(&pa, &pb, n, cutoff);
    let (rows, cols) = (a.rows(), b.cols());
    let data = (0..rows).flat_map(|i| full[i * n..i * n + cols].iter().cloned()).collect::<Vec<_>>();
    DenseMatrix::new(rows, cols, data)
}

fn pad<T: Scalar>(src: &[T], rows: usize, cols: usize, n: usize) -> Vec<T> {
    if rows == n && cols == n {
        return src.to_vec();
    }
    let mut out = vec![T::zero(); n * n];
    for i in 0..rows {
        out[i * n..i * n + cols].clone_from_slice(&src[i * cols..(i + 1) * cols]);
    }
    out
}

fn quadrant<T: Scalar>(m: &[T], n: usize, qi: usize, qj: usize) -> Vec<T> {
    let h = n / 2;
    let mut out = Vec::with_capacity(h * h);
    for i in 0..h {
        let start = (qi * h + i) * n + qj * h;
        out.extend_from_slice(&m[start..start + h]);
    }
    out
}

fn add<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

fn sub<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

fn strassen_square<T: Scalar>(a: &[T], b: &[T], n: usize, cutoff: usize) -> Vec<T> {
    if n <= cutoff {
        return schoolbook_raw(a, b, n, n, n);
    }
    if n % 2 == 1 {
        let m = n + 1;
        let full = strassen_square(&pad(a, n, n, m), &pad(b, n, n, m), m, cutoff);
        return (0..n).flat_map(|i| full[i * m..i * m + n].iter().cloned()).collect();
    }
    let h = n / 2;
    let (a11, a12, a21, a22) = (quadrant(a, n, 0, 0), quadrant(a, n, 0, 1), quadrant(a, n, 1, 0), quadrant(a, n, 1, 1));
    let (b11, b12, b21, b22) = (quadrant(b, n, 0, 0), quadrant(b, n, 0, 1), quadrant(b, n, 1, 0), quadrant(b, n, 1, 1));

    let m1 = strassen_square(&add(&a11, &a22), &add(&b11, &b22), h, cutoff);
    let m2 = strassen_square(&add(&a21, &a22), &b11, h, cutoff);
    let m3 = strassen_square(&a11, &sub(&b12, &b22), h, cutoff);
    let m4 = strassen_square(&a22, &sub(&b21, &b11), h, cutoff);
    let m5 = strassen_square(&add(&a11, &a12), &b22, h, cutoff);
    let m6 = strassen_square(&sub(&a21, &a11), &add(&b11, &b12), h, cutoff);
    let m7 = strassen_square(&sub(&a12, &a22), &add(&b21, &b22), h, cutoff);

    let c11 = add(&sub(&add(&m1, &m4), &m5), &m7);
    let c12 = add(&m3, &m5);
    let c21 = add(&m2, &m4);
    let c22 = add(&add(&sub(&m1, &m2), &m3), &m6);

    let mut out = Vec::with_capacity(n * n);
    for i in 0..h {
        out.extend_from_slice(&c11[i * h..(i + 1) * h]);
        out.extend_from_slice(&c12[i * h..(i + 1) * h]);
    }
    for i in 0..h {
        out.extend_from_slice(&c21[i * h..(i + 1) * h]);
        out.extend_from_slice(&c22[i * h..(i + 1) * h]);
    }
    out
}

/// Digit footprint of [`strassen_multiply`] on `n×n` operands, charging
/// every live matrix entry `entry_digits` digits.
///
/// Along the deepest recursion path a level of (padded) size `m` keeps 8
/// operand quadrants, 2 operand sums, 7 sub-products and 4 result
/// quadrants, i.e. `21·(m/2)²` entries, plus two `m²` padded copies when `m`
/// was odd. The leaf charges its `m²` schoolbook output and the top level
/// its `n²` result.
pub fn strassen_footprint_digits(n: usize, cutoff: usize, entry_digits: u64) -> u64 {
    fn live(m: u64, cutoff: u64) -> u64 {
        if m <= cutoff {
            return m * m;
        }
        let (padded, copies) = if m % 2 == 1 { (m + 1, 2 * (m + 1) * (m + 1)) } else { (m, 0) };
        let h = padded / 2;
        copies + 21 * h * h + live(h, cutoff)
    }
    let n = n as u64;
    (n * n + live(n, cutoff.max(1) as u64)) * entry_digits
}
