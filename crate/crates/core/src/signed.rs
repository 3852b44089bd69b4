//! Signed integer matrices as differences of non-negative ones.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bigdigit::Radix;
use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::packed::multiply_nonneg;

/// `A = positive − negative`, both parts non-negative and never both
/// nonzero in the same cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSplit {
    positive: DenseMatrix<BigInt>,
    negative: DenseMatrix<BigInt>,
}

impl SignSplit {
    pub fn positive(&self) -> &DenseMatrix<BigInt> {
        &self.positive
    }

    pub fn negative(&self) -> &DenseMatrix<BigInt> {
        &self.negative
    }

    pub fn into_parts(self) -> (DenseMatrix<BigInt>, DenseMatrix<BigInt>) {
        (self.positive, self.negative)
    }

    pub fn reconstruct(&self) -> DenseMatrix<BigInt> {
        self.positive
            .zip_with(&self.negative, |p, n| p - n)
            .expect("parts share a shape")
    }
}

pub fn split_signs(a: &DenseMatrix<BigInt>) -> SignSplit {
    SignSplit {
        positive: a.map(|v| if v.is_negative() { BigInt::zero() } else { v.clone() }),
        negative: a.map(|v| if v.is_negative() { -v } else { BigInt::zero() }),
    }
}

/// The four non-negative products `[A₁B₁, A₁B₂, A₂B₁, A₂B₂]`, each packed
/// with its own parameters.
pub fn signed_partial_products(
    a: &DenseMatrix<BigInt>,
    b: &DenseMatrix<BigInt>,
    radix: Radix,
) -> Result<[DenseMatrix<BigInt>; 4]> {
    a.check_product(b)?;
    let (a1, a2) = split_signs(a).into_parts();
    let (b1, b2) = split_signs(b).into_parts();
    Ok([
        multiply_nonneg(&a1, &b1, radix)?,
        multiply_nonneg(&a1, &b2, radix)?,
        multiply_nonneg(&a2, &b1, radix)?,
        multiply_nonneg(&a2, &b2, radix)?,
    ])
}

/// Exact signed product `A₁B₁ − A₁B₂ − A₂B₁ + A₂B₂`.
pub fn multiply_int(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, radix: Radix) -> Result<DenseMatrix<BigInt>> {
    let [c1, c2, c3, c4] = signed_partial_products(a, b, radix)?;
    let data = c1
        .data()
        .iter()
        .zip(c2.data())
        .zip(c3.data())
        .zip(c4.data())
        .map(|(((p1, p2), p3), p4)| p1 - p2 - p3 + p4)
        .collect();
    DenseMatrix::new(a.rows(), b.cols(), data)
}
