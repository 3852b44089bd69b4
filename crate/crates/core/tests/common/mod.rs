#![allow(dead_code)]

use num_bigint::BigInt;
use packmul::{DenseMatrix, ExactDecimal, Radix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const RADICES: [Radix; 2] = [Radix::DECIMAL, Radix::POW2_32];

pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.random_range(lo..=hi)))
}

/// Random integer scaled by `10^{-r}` with `r ≤ max_scale`.
pub fn random_decimal(rng: &mut impl Rng, max_scale: u32) -> ExactDecimal {
    let scale = rng.random_range(0..=max_scale);
    ExactDecimal::from_scaled(BigInt::from(rng.random_range(-1_000_000i64..=1_000_000)), scale)
}

pub fn random_decimal_matrix(rng: &mut impl Rng, rows: usize, cols: usize, max_scale: u32) -> DenseMatrix<ExactDecimal> {
    DenseMatrix::from_fn(rows, cols, |_, _| random_decimal(rng, max_scale))
}

/// Direct triple loop over plain `i128`, independent of every library path.
pub fn naive_i128(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let (rows, inner, cols) = (a.len(), b.len(), b[0].len());
    (0..rows)
        .map(|i| (0..cols).map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn to_i128_rows(m: &DenseMatrix<BigInt>) -> Vec<Vec<i128>> {
    m.iter_rows().map(|r| r.iter().map(|v| i128::try_from(v).unwrap()).collect()).collect()
}
