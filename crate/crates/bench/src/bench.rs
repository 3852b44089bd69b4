//! Timed three-way comparison on seeded random instances.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use packmul::{
    multiply_nonneg_traced, schoolbook_multiply, strassen_footprint_digits, strassen_multiply, DenseMatrix, Footprint,
    Radix, DEFAULT_STRASSEN_CUTOFF,
};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::generate::{generate_matrix, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Packed,
    Schoolbook,
    Strassen,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Packed, Algo::Schoolbook, Algo::Strassen];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Packed => "packed",
            Algo::Schoolbook => "schoolbook",
            Algo::Strassen => "strassen",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| BenchError::InvalidAlgo(s.to_string()))
    }
}

/// `10`, `pow2`, or any integer base accepted by [`Radix::new`].
pub fn parse_radix(s: &str) -> Result<Radix> {
    match s {
        "10" => Ok(Radix::DECIMAL),
        "pow2" => Ok(Radix::POW2_32),
        _ => {
            let beta: u64 = s.parse().map_err(|_| BenchError::InvalidRadix(s.to_string()))?;
            Ok(Radix::new(beta)?)
        }
    }
}

/// One timed multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algo: Algo,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub wall_ns: u64,
    pub paper_digits: u64,
    pub impl_digits: u64,
    pub radix: u64,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "P")]
    pub p: usize,
    pub element_digits: u32,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub element_digits: u32,
    /// Packed runs once per radix, in this order.
    pub radices: Vec<Radix>,
    pub algos: Vec<Algo>,
    pub seed: u64,
    pub strassen_cutoff: usize,
    /// Replace the n=3 instances with the fixed 3×3 example pair.
    pub fixed_example: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![4, 8, 16, 32, 64, 128, 256],
            trials: 5,
            element_digits: 3,
            radices: vec![Radix::DECIMAL, Radix::POW2_32],
            algos: Algo::ALL.to_vec(),
            seed: 42,
            strassen_cutoff: DEFAULT_STRASSEN_CUTOFF,
            fixed_example: false,
        }
    }
}

pub fn fixed_example() -> (DenseMatrix<BigInt>, DenseMatrix<BigInt>) {
    let a = DenseMatrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).expect("3x3");
    let b = DenseMatrix::from_i64(3, 3, &[9, 8, 7, 6, 5, 4, 3, 2, 1]).expect("3x3");
    (a, b)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of the instance at `(n, trial)`; the second operand uses
/// `splitmix64` of it.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    splitmix64(splitmix64(seed ^ n as u64) ^ trial as u64)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    let ns = start.elapsed().as_nanos();
    (out, u64::try_from(ns).unwrap_or(u64::MAX).max(1))
}

fn decimal_digits(v: &BigInt) -> u64 {
    if v.magnitude().bits() == 0 {
        1
    } else {
        v.magnitude().to_str_radix(10).len() as u64
    }
}

fn dump(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, outputs: &[(String, &DenseMatrix<BigInt>)]) -> String {
    let show = |m: &DenseMatrix<BigInt>| {
        m.iter_rows().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
    };
    let mut s = format!("A =\n{}\nB =\n{}", show(a), show(b));
    for (name, m) in outputs {
        s.push_str(&format!("\n{name} =\n{}", show(m)));
    }
    s
}

/// Runs every configured algorithm on `trials` instances per size.
///
/// Each instance is multiplied by all algorithms first; records are kept
/// only after their outputs agree, otherwise the run stops with
/// [`BenchError::Mismatch`].
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.sizes.is_empty() {
        return Err(BenchError::NoSizes);
    }
    if config.sizes.contains(&0) || config.element_digits == 0 {
        return Err(BenchError::InvalidSize);
    }
    let mut records = Vec::new();
    for &n in &config.sizes {
        for trial in 0..config.trials {
            let seed = instance_seed(config.seed, n, trial);
            let (a, b) = if config.fixed_example && n == 3 {
                fixed_example()
            } else {
                let gen = |s| generate_matrix(n, config.element_digits, Kind::Nonneg, s).map(|m| m.into_int().expect("nonneg is integral"));
                (gen(seed)?, gen(splitmix64(seed))?)
            };
            records.extend(run_instance(config, n, trial, seed, &a, &b)?);
        }
    }
    Ok(records)
}

fn run_instance(
    config: &BenchConfig,
    n: usize,
    trial: usize,
    seed: u64,
    a: &DenseMatrix<BigInt>,
    b: &DenseMatrix<BigInt>,
) -> Result<Vec<BenchRecord>> {
    let base = BenchRecord {
        algo: Algo::Schoolbook,
        n,
        trial,
        seed,
        wall_ns: 0,
        paper_digits: 0,
        impl_digits: 0,
        radix: 0,
        m: 0,
        p: 0,
        element_digits: config.element_digits,
    };
    let input_digits: u64 = a.data().iter().chain(b.data()).map(decimal_digits).sum();
    let mut pending = Vec::new();
    let mut outputs: Vec<(String, DenseMatrix<BigInt>)> = Vec::new();

    for &algo in &config.algos {
        match algo {
            Algo::Packed => {
                for &radix in &config.radices {
                    let (traced, wall_ns) = timed(|| multiply_nonneg_traced(a, b, radix));
                    let traced = traced?;
                    let fp = Footprint::from_parts(&traced.params, &traced.packed_rows, &traced.packed_cols, &traced.product);
                    pending.push(BenchRecord {
                        algo,
                        wall_ns,
                        paper_digits: fp.paper_model,
                        impl_digits: fp.impl_model,
                        radix: radix.beta(),
                        m: traced.params.element_digits(),
                        p: traced.params.width(),
                        ..base.clone()
                    });
                    outputs.push((format!("packed(radix {})", radix.beta()), traced.product));
                }
            }
            Algo::Schoolbook => {
                let (out, wall_ns) = timed(|| schoolbook_multiply(a, b));
                let out = out?;
                let digits = input_digits + out.data().iter().map(decimal_digits).sum::<u64>();
                pending.push(BenchRecord { algo, wall_ns, paper_digits: digits, impl_digits: digits, ..base.clone() });
                outputs.push(("schoolbook".into(), out));
            }
            Algo::Strassen => {
                let (out, wall_ns) = timed(|| strassen_multiply(a, b, config.strassen_cutoff));
                let out = out?;
                let width = out.data().iter().map(decimal_digits).max().unwrap_or(1);
                let digits = input_digits + strassen_footprint_digits(n, config.strassen_cutoff, width);
                pending.push(BenchRecord { algo, wall_ns, paper_digits: digits, impl_digits: digits, ..base.clone() });
                outputs.push(("strassen".into(), out));
            }
        }
    }

    if outputs.windows(2).any(|w| w[0].1 != w[1].1) {
        let refs: Vec<_> = outputs.iter().map(|(name, m)| (name.clone(), m)).collect();
        return Err(BenchError::Mismatch { n, trial, seed, dump: dump(a, b, &refs) });
    }
    Ok(pending)
}
