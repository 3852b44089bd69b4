//! Seeded random operands.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use packmul::{ComplexMatrix, DenseMatrix, ExactDecimal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BenchError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Nonneg,
    Int,
    Decimal,
    Complex,
}

impl FromStr for Kind {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonneg" => Ok(Kind::Nonneg),
            "int" => Ok(Kind::Int),
            "decimal" => Ok(Kind::Decimal),
            "complex" => Ok(Kind::Complex),
            _ => Err(BenchError::InvalidKind(s.to_string())),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Nonneg => "nonneg",
            Kind::Int => "int",
            Kind::Decimal => "decimal",
            Kind::Complex => "complex",
        })
    }
}

/// A generated operand of any supported element type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operand {
    Int(DenseMatrix<BigInt>),
    Decimal(DenseMatrix<ExactDecimal>),
    Complex(ComplexMatrix),
}

impl Operand {
    pub fn into_int(self) -> Option<DenseMatrix<BigInt>> {
        match self {
            Operand::Int(m) => Some(m),
            _ => None,
        }
    }
}

const CHUNK_DIGITS: u32 = 18;
const CHUNK: u64 = 1_000_000_000_000_000_000;

/// Uniform integer in `[0, 10^digits)`, assembled from independent
/// base-10^18 chunks.
pub fn uniform_digits(rng: &mut impl Rng, digits: u32) -> BigInt {
    let mut value = BigInt::from(0u8);
    let mut remaining = digits;
    while remaining > 0 {
        let take = remaining.min(CHUNK_DIGITS);
        let bound = if take == CHUNK_DIGITS { CHUNK } else { 10u64.pow(take) };
        value = value * bound + rng.random_range(0..bound);
        remaining -= take;
    }
    value
}

fn signed(rng: &mut impl Rng, digits: u32) -> BigInt {
    let v = uniform_digits(rng, digits);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Decimal with a uniform integer part as above and a uniform scale in
/// `0..=digits`.
fn decimal(rng: &mut impl Rng, digits: u32) -> ExactDecimal {
    let unscaled = signed(rng, digits);
    let scale = rng.random_range(0..=digits);
    ExactDecimal::from_scaled(unscaled, scale)
}

/// An `n×n` matrix whose entries are drawn from `ChaCha8` seeded with
/// `seed`. Integer entries lie in `[0, 10^element_digits)`; signed kinds
/// get an independent fair sign.
pub fn generate_matrix(n: usize, element_digits: u32, kind: Kind, seed: u64) -> Result<Operand> {
    if n == 0 || element_digits == 0 {
        return Err(BenchError::InvalidSize);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = element_digits;
    Ok(match kind {
        Kind::Nonneg => Operand::Int(DenseMatrix::from_fn(n, n, |_, _| uniform_digits(&mut rng, d))),
        Kind::Int => Operand::Int(DenseMatrix::from_fn(n, n, |_, _| signed(&mut rng, d))),
        Kind::Decimal => Operand::Decimal(DenseMatrix::from_fn(n, n, |_, _| decimal(&mut rng, d))),
        Kind::Complex => {
            let re = DenseMatrix::from_fn(n, n, |_, _| decimal(&mut rng, d));
            let im = DenseMatrix::from_fn(n, n, |_, _| decimal(&mut rng, d));
            Operand::Complex(ComplexMatrix::new(re, im)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    fn pow10(e: u32) -> BigInt {
        BigInt::from(10u8).pow(e)
    }

    #[test]
    fn deterministic() {
        for kind in [Kind::Nonneg, Kind::Int, Kind::Decimal, Kind::Complex] {
            assert_eq!(generate_matrix(2, 1, kind, 42).unwrap(), generate_matrix(2, 1, kind, 42).unwrap());
        }
        assert_ne!(generate_matrix(8, 3, Kind::Int, 1).unwrap(), generate_matrix(8, 3, Kind::Int, 2).unwrap());
    }

    #[test]
    fn range() {
        for d in [1, 3, 18, 19, 40] {
            let m = generate_matrix(16, d, Kind::Nonneg, 7).unwrap().into_int().unwrap();
            assert!(m.data().iter().all(|v| *v >= BigInt::from(0) && *v < pow10(d)));
            let s = generate_matrix(16, d, Kind::Int, 7).unwrap().into_int().unwrap();
            assert!(s.data().iter().all(|v| v.magnitude() < pow10(d).magnitude()));
            assert!(s.data().iter().any(|v| *v < BigInt::from(0)));
        }
    }

    #[test]
    fn kinds() {
        assert!(matches!("float".parse::<Kind>(), Err(BenchError::InvalidKind(_))));
        assert_eq!("complex".parse::<Kind>().unwrap().to_string(), "complex");
        assert!(matches!(generate_matrix(0, 1, Kind::Int, 0), Err(BenchError::InvalidSize)));
    }
}
