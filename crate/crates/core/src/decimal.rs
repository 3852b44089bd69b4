//! Exact scaled decimals and their matrix product.
//!
//! A decimal matrix is turned into an integer matrix by multiplying every
//! element by `10^R`, where `R` is the largest fraction-digit count in the
//! matrix. The integer product is then reinterpreted with scale `R₁ + R₂`.
//! No step rounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::bigdigit::Radix;
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Scalar};
use crate::signed::multiply_int;

/// `sign · unscaled · 10^{−scale}`, kept with the smallest possible scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactDecimal {
    sign: Sign,
    unscaled: BigUint,
    scale: u32,
}

fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

impl ExactDecimal {
    pub fn zero() -> Self {
        ExactDecimal { sign: Sign::NoSign, unscaled: BigUint::zero(), scale: 0 }
    }

    /// The value `value · 10^{−scale}`, canonicalized.
    pub fn from_scaled(value: BigInt, scale: u32) -> Self {
        let (sign, mut unscaled) = value.into_parts();
        if unscaled.is_zero() {
            return Self::zero();
        }
        let ten = BigUint::from(10u32);
        let mut scale = scale;
        while scale > 0 {
            let (q, r) = unscaled.div_rem(&ten);
            if !r.is_zero() {
                break;
            }
            unscaled = q;
            scale -= 1;
        }
        ExactDecimal { sign, unscaled, scale }
    }

    pub fn from_int(value: BigInt) -> Self {
        Self::from_scaled(value, 0)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn unscaled(&self) -> &BigUint {
        &self.unscaled
    }

    /// Number of fraction digits.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::NoSign
    }

    /// `value · 10^target` as an integer; `target` must be at least the
    /// current scale.
    pub fn rescaled(&self, target: u32) -> BigInt {
        assert!(target >= self.scale, "rescaling to {target} would drop fraction digits");
        BigInt::from_biguint(self.sign, &self.unscaled * pow10(target - self.scale))
    }

    pub fn neg(&self) -> Self {
        ExactDecimal { sign: -self.sign, unscaled: self.unscaled.clone(), scale: self.scale }
    }
}

impl FromStr for ExactDecimal {
    type Err = Error;

    /// Accepts `[+-]?[0-9]+(\.[0-9]+)?`.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedDecimal(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let digits_ok = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok(int_part) || (body.contains('.') && !digits_ok(frac_part)) {
            return Err(malformed());
        }
        let unscaled: BigUint = format!("{int_part}{frac_part}").parse().map_err(|_| malformed())?;
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        let scale = u32::try_from(frac_part.len()).map_err(|_| malformed())?;
        Ok(Self::from_scaled(BigInt::from_biguint(sign, unscaled), scale))
    }
}

impl fmt::Display for ExactDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        let digits = self.unscaled.to_string();
        let scale = self.scale as usize;
        if scale == 0 {
            return f.write_str(&digits);
        }
        let padded = if digits.len() <= scale { format!("{}{digits}", "0".repeat(scale + 1 - digits.len())) } else { digits };
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{int_part}.{frac_part}")
    }
}

impl Scalar for ExactDecimal {
    fn zero() -> Self {
        ExactDecimal::zero()
    }

    fn add(&self, other: &Self) -> Self {
        let scale = self.scale.max(other.scale);
        Self::from_scaled(self.rescaled(scale) + other.rescaled(scale), scale)
    }

    fn sub(&self, other: &Self) -> Self {
        let scale = self.scale.max(other.scale);
        Self::from_scaled(self.rescaled(scale) - other.rescaled(scale), scale)
    }

    fn mul(&self, other: &Self) -> Self {
        let sign = self.sign * other.sign;
        Self::from_scaled(BigInt::from_biguint(sign, &self.unscaled * &other.unscaled), self.scale + other.scale)
    }
}

/// Largest fraction-digit count among the elements.
pub fn max_scale(a: &DenseMatrix<ExactDecimal>) -> u32 {
    a.data().iter().map(ExactDecimal::scale).max().unwrap_or(0)
}

/// Integer product matrix together with the common scale of its cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledProduct {
    pub values: DenseMatrix<BigInt>,
    pub scale: u32,
}

impl ScaledProduct {
    pub fn to_decimal(&self) -> DenseMatrix<ExactDecimal> {
        self.values.map(|v| ExactDecimal::from_scaled(v.clone(), self.scale))
    }
}

/// The product before the scale is canonicalized: every cell of
/// `values` carries exactly `R₁ + R₂` fraction digits.
pub fn multiply_decimal_scaled(
    a: &DenseMatrix<ExactDecimal>,
    b: &DenseMatrix<ExactDecimal>,
    radix: Radix,
) -> Result<ScaledProduct> {
    a.check_product(b)?;
    let (r1, r2) = (max_scale(a), max_scale(b));
    let a_int = a.map(|v| v.rescaled(r1));
    let b_int = b.map(|v| v.rescaled(r2));
    let values = multiply_int(&a_int, &b_int, radix)?;
    Ok(ScaledProduct { values, scale: r1 + r2 })
}

pub fn multiply_decimal(
    a: &DenseMatrix<ExactDecimal>,
    b: &DenseMatrix<ExactDecimal>,
    radix: Radix,
) -> Result<DenseMatrix<ExactDecimal>> {
    multiply_decimal_scaled(a, b, radix).map(|p| p.to_decimal())
}
