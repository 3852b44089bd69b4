//! CSV output and the summary of measured claims.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::bench::{Algo, BenchRecord};
use crate::error::{BenchError, Result};
use crate::fit::{fit_refs, medians_by_size, ExponentFit};

pub const CSV_HEADER: &str = "algo,n,trial,seed,wall_ns,paper_digits,impl_digits,radix,M,P,element_digits";

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
}

pub fn emit_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    write_csv(records, File::create(path)?)
}

/// One fitted series, keyed by algorithm and radix (0 for non-packed).
#[derive(Clone, Debug)]
pub struct SeriesFit {
    pub algo: Algo,
    pub radix: u64,
    pub fit: Result<ExponentFit, String>,
}

/// What the measurements say about the packed method's claims. These are
/// observations, not pass/fail conditions.
#[derive(Clone, Debug)]
pub struct Findings {
    pub min_n: usize,
    pub fits: Vec<SeriesFit>,
    /// Packed exponent ≤ [`QUADRATIC_LIMIT`] for every radix.
    pub quadratic_holds: Option<bool>,
    /// Per radix: is packed's median time at the largest size below the
    /// other algorithm's?
    pub faster_than_schoolbook: Option<bool>,
    pub faster_than_strassen: Option<bool>,
}

/// Fitted exponents up to this value count as consistent with `O(n²)`.
pub const QUADRATIC_LIMIT: f64 = 2.3;

fn series_keys(records: &[BenchRecord]) -> Vec<(Algo, u64)> {
    let mut keys: Vec<(Algo, u64)> = records.iter().map(|r| (r.algo, r.radix)).collect();
    keys.sort();
    keys.dedup();
    keys
}

fn median_at(records: &[BenchRecord], algo: Algo, radix: u64, n: usize) -> Option<f64> {
    let rs: Vec<&BenchRecord> = records.iter().filter(|r| r.algo == algo && r.radix == radix && r.n == n).collect();
    medians_by_size(&rs, |r| r.wall_ns as f64).first().map(|&(_, t)| t)
}

/// Fits every series on sizes `≥ min_n` and compares packed against the
/// other two at the largest size.
pub fn findings(records: &[BenchRecord], min_n: usize) -> Findings {
    let fits: Vec<SeriesFit> = series_keys(records)
        .into_iter()
        .map(|(algo, radix)| {
            let rs: Vec<&BenchRecord> = records.iter().filter(|r| r.algo == algo && r.radix == radix && r.n >= min_n).collect();
            SeriesFit { algo, radix, fit: fit_refs(&rs).map_err(|e| e.to_string()) }
        })
        .collect();
    let packed: Vec<&SeriesFit> = fits.iter().filter(|f| f.algo == Algo::Packed).collect();
    let quadratic_holds = if packed.is_empty() || packed.iter().any(|f| f.fit.is_err()) {
        None
    } else {
        Some(packed.iter().all(|f| f.fit.as_ref().is_ok_and(|x| x.exponent <= QUADRATIC_LIMIT)))
    };
    let largest = records.iter().map(|r| r.n).max();
    let faster = |other: Algo| -> Option<bool> {
        let n = largest?;
        let theirs = median_at(records, other, 0, n)?;
        let ours: Vec<f64> = packed.iter().filter_map(|f| median_at(records, Algo::Packed, f.radix, n)).collect();
        if ours.is_empty() {
            return None;
        }
        Some(ours.iter().all(|&t| t < theirs))
    };
    Findings {
        min_n,
        quadratic_holds,
        faster_than_schoolbook: faster(Algo::Schoolbook),
        faster_than_strassen: faster(Algo::Strassen),
        fits,
    }
}

impl Findings {
    pub fn exponent(&self, algo: Algo, radix: u64) -> Option<f64> {
        self.fits.iter().find(|f| f.algo == algo && f.radix == radix)?.fit.as_ref().ok().map(|f| f.exponent)
    }
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "holds",
        Some(false) => "does not hold",
        None => "not measured",
    }
}

impl std::fmt::Display for Findings {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "fitted exponents (n >= {}):", self.min_n)?;
        for s in &self.fits {
            let label = if s.algo == Algo::Packed { format!("packed/radix {}", s.radix) } else { s.algo.to_string() };
            match &s.fit {
                Ok(x) => writeln!(f, "  {label:<24} {:.3}  (r^2 {:.4})", x.exponent, x.r_squared)?,
                Err(e) => writeln!(f, "  {label:<24} n/a ({e})")?,
            }
        }
        writeln!(f, "packed time is O(n^2) (exponent <= {QUADRATIC_LIMIT}): {}", verdict(self.quadratic_holds))?;
        writeln!(f, "packed faster than schoolbook at largest n: {}", verdict(self.faster_than_schoolbook))?;
        write!(f, "packed faster than strassen at largest n: {}", verdict(self.faster_than_strassen))
    }
}
