//! Empirical complexity exponents.

use std::collections::BTreeMap;

use crate::bench::{Algo, BenchRecord};
use crate::error::{BenchError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentFit {
    pub exponent: f64,
    pub r_squared: f64,
}

/// Median of `values`; the mean of the two middle values for even counts.
pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len().is_multiple_of(2) {
        (values[mid - 1] + values[mid]) / 2.0
    } else {
        values[mid]
    }
}

/// Median of `metric` per size, in increasing `n`.
pub fn medians_by_size(records: &[&BenchRecord], metric: impl Fn(&BenchRecord) -> f64) -> Vec<(usize, f64)> {
    let mut by_n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in records {
        by_n.entry(r.n).or_default().push(metric(r));
    }
    by_n.into_iter().map(|(n, mut v)| (n, median(&mut v))).collect()
}

/// Least-squares slope of `log(median wall_ns)` against `log n`.
///
/// All records must share one algorithm and radix.
pub fn fit_exponent(records: &[BenchRecord]) -> Result<ExponentFit> {
    let refs: Vec<&BenchRecord> = records.iter().collect();
    fit_refs(&refs)
}

pub(crate) fn fit_refs(records: &[&BenchRecord]) -> Result<ExponentFit> {
    if let Some(first) = records.first() {
        if records.iter().any(|r| r.algo != first.algo || r.radix != first.radix) {
            return Err(BenchError::MixedSeries);
        }
    }
    let points = medians_by_size(records, |r| r.wall_ns as f64);
    if points.len() < 3 {
        return Err(BenchError::TooFewSizes(points.len()));
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let exponent = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(ExponentFit { exponent, r_squared })
}

/// Records of one series, restricted to `n ≥ min_n`.
pub fn series(records: &[BenchRecord], algo: Algo, radix: u64, min_n: usize) -> Vec<BenchRecord> {
    records.iter().filter(|r| r.algo == algo && r.radix == radix && r.n >= min_n).cloned().collect()
}
