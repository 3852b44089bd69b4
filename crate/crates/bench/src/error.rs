use std::io;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Core(#[from] packmul::Error),
    #[error("unknown matrix kind {0:?} (expected nonneg, int, decimal or complex)")]
    InvalidKind(String),
    #[error("unknown algorithm {0:?} (expected packed, schoolbook or strassen)")]
    InvalidAlgo(String),
    #[error("unknown radix {0:?} (expected 10, pow2 or an integer base)")]
    InvalidRadix(String),
    #[error("n and element_digits must be at least 1")]
    InvalidSize,
    #[error("no sizes given")]
    NoSizes,
    #[error("no records to emit")]
    NoRecords,
    #[error("exponent fit needs at least 3 distinct sizes, got {0}")]
    TooFewSizes(usize),
    #[error("records for the fit must come from one algorithm and radix")]
    MixedSeries,
    #[error("algorithms disagree on n={n}, trial={trial}, seed={seed}:\n{dump}")]
    Mismatch { n: usize, trial: usize, seed: u64, dump: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
