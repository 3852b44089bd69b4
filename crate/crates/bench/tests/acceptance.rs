//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero
//! exit status if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use packmul::{
    compute_params, correlation_slice, multiply_complex, multiply_decimal, multiply_decimal_scaled, multiply_int,
    multiply_nonneg, multiply_nonneg_traced, pack_cols, pack_rows, schoolbook_multiply, split_signs, strassen_multiply,
    ComplexMatrix, DenseMatrix, ExactDecimal, PackedInt, Radix,
};
use packmul_bench::{
    emit_csv, emit_plot, findings, fit_exponent, fit::series, read_csv, run_benchmark, Algo, BenchConfig, BenchRecord,
    Metric, CSV_HEADER,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

const RADICES: [Radix; 2] = [Radix::DECIMAL, Radix::POW2_32];
const ORACLE_INSTANCES: usize = 1000;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const SCHOOLBOOK_EXPONENT: (f64, f64) = (2.7, 3.3);
const FIT_MIN_N: usize = 32;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(rows: usize, cols: usize, v: &[i64]) -> DenseMatrix<BigInt> {
    DenseMatrix::from_i64(rows, cols, v).unwrap()
}

fn worked_pair() -> (DenseMatrix<BigInt>, DenseMatrix<BigInt>) {
    (int(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]), int(3, 3, &[9, 8, 7, 6, 5, 4, 3, 2, 1]))
}

fn golden_example() -> Check {
    let (a, b) = worked_pair();
    let p = compute_params(&a, &b, Radix::DECIMAL).map_err(|e| e.to_string())?;
    ensure((p.element_digits(), p.width()) == (1, 3), || format!("M={}, P={}", p.element_digits(), p.width()))?;
    let c: Vec<String> = pack_rows(&a, &p).unwrap().iter().map(PackedInt::to_decimal_string).collect();
    let d: Vec<String> = pack_cols(&b, &p).unwrap().iter().map(PackedInt::to_decimal_string).collect();
    ensure(c == ["1002003", "4005006", "7008009"], || format!("C = {c:?}"))?;
    ensure(d == ["3006009", "2005008", "1004007"], || format!("D = {d:?}"))?;
    let c0 = PackedInt::from_decimal_str(&c[0], Radix::DECIMAL).unwrap();
    let d0 = PackedInt::from_decimal_str(&d[0], Radix::DECIMAL).unwrap();
    let prod = c0.checked_mul(&d0).unwrap().to_decimal_string();
    ensure(prod == "3012030036027", || format!("C[0]*D[0] = {prod}"))?;
    let e = multiply_nonneg(&a, &b, Radix::DECIMAL).unwrap();
    ensure(e == int(3, 3, &[30, 24, 18, 84, 69, 54, 138, 114, 90]), || format!("E = {e:?}"))?;
    Ok("M=1 P=3, C, D, C[0]*D[0]=3012030036027 and E exact".into())
}

fn slice_sweep() -> Check {
    let (a, b) = worked_pair();
    let p = compute_params(&a, &b, Radix::DECIMAL).unwrap();
    let prod = pack_rows(&a, &p).unwrap()[0].checked_mul(&pack_cols(&b, &p).unwrap()[0]).unwrap();
    let got: Vec<BigInt> = (0..5).map(|s| correlation_slice(&prod, s, &p).unwrap()).collect();
    let want: Vec<BigInt> = [27, 36, 30, 12, 3].into_iter().map(BigInt::from).collect();
    ensure(got == want, || format!("slices {got:?}"))?;
    Ok("s=0..4 -> (27,36,30,12,3)".into())
}

fn signed_instance(seed: u64) -> (Radix, DenseMatrix<BigInt>, DenseMatrix<BigInt>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=32);
    let mut gen = || DenseMatrix::from_fn(n, n, |_, _| BigInt::from(rng.random_range(-1_000_000i64..=1_000_000)));
    let (a, b) = (gen(), gen());
    (RADICES[(seed % 2) as usize], a, b)
}

fn naive_i128(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>) -> Vec<i128> {
    let get = |m: &DenseMatrix<BigInt>, i, j| i128::try_from(m.get(i, j)).unwrap();
    let mut out = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            out.push((0..a.cols()).map(|k| get(a, i, k) * get(b, k, j)).sum());
        }
    }
    out
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut per_radix = [0usize; 2];
    for seed in 0..ORACLE_INSTANCES as u64 {
        let (radix, a, b) = signed_instance(seed);
        let packed = multiply_int(&a, &b, radix).map_err(|e| e.to_string())?;
        let school = schoolbook_multiply(&a, &b).unwrap();
        let strassen = strassen_multiply(&a, &b, 4).unwrap();
        let direct: Vec<i128> = packed.data().iter().map(|v| i128::try_from(v).unwrap()).collect();
        ensure(packed == school && school == strassen && direct == naive_i128(&a, &b), || {
            format!("instance seed {seed} (n={}, radix {}) disagrees", a.rows(), radix.beta())
        })?;
        per_radix[(seed % 2) as usize] += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_BUDGET, || format!("{ORACLE_INSTANCES} instances took {elapsed:.1?} (limit 60 s)"))?;
    Ok(format!("{ORACLE_INSTANCES} instances ({} radix 10, {} radix 2^32) agree in {elapsed:.1?}", per_radix[0], per_radix[1]))
}

fn carry_freedom() -> Check {
    let (mut slices, mut violations) = (0u64, 0u64);
    for seed in 0..ORACLE_INSTANCES as u64 {
        let (radix, a, b) = signed_instance(seed);
        let (a1, a2) = split_signs(&a).into_parts();
        let (b1, b2) = split_signs(&b).into_parts();
        for (x, y) in [(&a1, &b1), (&a1, &b2), (&a2, &b1), (&a2, &b2)] {
            let traced = multiply_nonneg_traced(x, y, radix).map_err(|e| e.to_string())?;
            let p = &traced.params;
            let bound = BigInt::from(radix.beta()).pow(p.width() as u32);
            let n = x.cols();
            let to_i128 = |m: &DenseMatrix<BigInt>| m.map(|v| i128::try_from(v).unwrap());
            let (xi, yi) = (to_i128(x), to_i128(y));
            for i in 0..n {
                for j in 0..n {
                    // coefficient s collects the pairs with k1 - k2 = n - 1 - s
                    let mut coeffs = vec![0i128; 2 * n - 1];
                    for k1 in 0..n {
                        for k2 in 0..n {
                            coeffs[n - 1 + k2 - k1] += xi.get(i, k1) * yi.get(k2, j);
                        }
                    }
                    let prod = traced.packed_rows[i].checked_mul(&traced.packed_cols[j]).unwrap();
                    for (s, &coeff) in coeffs.iter().enumerate() {
                        let coeff = BigInt::from(coeff);
                        slices += 1;
                        if coeff >= bound || correlation_slice(&prod, s, p).unwrap() != coeff {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    ensure(violations == 0, || format!("{violations} of {slices} correlation slices overflow their field"))?;
    Ok(format!("{slices} correlation slices below beta^P, 0 violations"))
}

fn rational(d: &ExactDecimal) -> BigRational {
    BigRational::new(BigInt::from_biguint(d.sign(), d.unscaled().clone()), BigInt::from(10).pow(d.scale()))
}

fn random_decimal(rng: &mut impl Rng, max_scale: u32) -> ExactDecimal {
    let scale = rng.random_range(0..=max_scale);
    ExactDecimal::from_scaled(BigInt::from(rng.random_range(-10_000_000i64..=10_000_000)), scale)
}

fn decimal_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> DenseMatrix<ExactDecimal> {
    DenseMatrix::from_fn(rows, cols, |_, _| random_decimal(rng, 6))
}

fn rational_product(a: &DenseMatrix<BigRational>, b: &DenseMatrix<BigRational>) -> DenseMatrix<BigRational> {
    DenseMatrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| a.get(i, k) * b.get(k, j)).sum())
}

fn decimal_exactness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut cells, trials) = (0usize, 300);
    for t in 0..trials {
        let radix = RADICES[t % 2];
        let (r, n, c) = (rng.random_range(1..=10), rng.random_range(1..=10), rng.random_range(1..=10));
        let (a, b) = (decimal_matrix(&mut rng, r, n), decimal_matrix(&mut rng, n, c));
        let oracle = rational_product(&a.map(rational), &b.map(rational));
        let got = multiply_decimal(&a, &b, radix).map_err(|e| e.to_string())?;
        let scaled = multiply_decimal_scaled(&a, &b, radix).unwrap();
        let r1r2 = a.data().iter().map(ExactDecimal::scale).max().unwrap() + b.data().iter().map(ExactDecimal::scale).max().unwrap();
        ensure(scaled.scale == r1r2, || format!("trial {t}: scale {} != R1+R2 = {r1r2}", scaled.scale))?;
        let unit = BigRational::from_integer(BigInt::from(10).pow(r1r2));
        for ((cell, raw), want) in got.data().iter().zip(scaled.values.data()).zip(oracle.data()) {
            ensure(&rational(cell) == want, || format!("trial {t}: {cell} != {want}"))?;
            ensure(BigRational::from_integer(raw.clone()) == want * &unit, || format!("trial {t}: raw cell {raw} not at scale {r1r2}"))?;
            cells += 1;
        }
    }
    Ok(format!("{trials} products, {cells} cells equal the rational oracle at scale R1+R2"))
}

fn complex_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut cells, trials) = (0usize, 200);
    for t in 0..trials {
        let radix = RADICES[t % 2];
        let (r, n, c) = (rng.random_range(1..=8), rng.random_range(1..=8), rng.random_range(1..=8));
        let a = ComplexMatrix::new(decimal_matrix(&mut rng, r, n), decimal_matrix(&mut rng, r, n)).unwrap();
        let b = ComplexMatrix::new(decimal_matrix(&mut rng, n, c), decimal_matrix(&mut rng, n, c)).unwrap();
        let got = multiply_complex(&a, &b, radix).map_err(|e| e.to_string())?;
        for i in 0..r {
            for j in 0..c {
                let (mut re, mut im) = (BigRational::zero(), BigRational::zero());
                for k in 0..n {
                    let (x, y) = (rational(a.re().get(i, k)), rational(a.im().get(i, k)));
                    let (u, v) = (rational(b.re().get(k, j)), rational(b.im().get(k, j)));
                    re += &x * &u - &y * &v;
                    im += x * v + y * u;
                }
                ensure(rational(got.re().get(i, j)) == re && rational(got.im().get(i, j)) == im, || {
                    format!("trial {t} cell ({i},{j}): got {}", got.get(i, j))
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{trials} products, {cells} cells equal Gaussian rational arithmetic"))
}

fn footprint_formula(records: &[BenchRecord]) -> Check {
    let packed: Vec<&BenchRecord> = records.iter().filter(|r| r.algo == Algo::Packed).collect();
    ensure(!packed.is_empty(), || "no packed records".into())?;
    for r in &packed {
        let (n, p) = (r.n as u64, r.p as u64);
        let want = 2 * n * n * p + 2 * n * n * n * p;
        ensure(r.paper_digits == want, || format!("n={} radix {}: paper_digits {} != {want}", r.n, r.radix, r.paper_digits))?;
        ensure(r.impl_digits <= r.paper_digits, || format!("n={}: impl_digits exceeds paper model", r.n))?;
    }
    Ok(format!("{} packed records match 2n^2P + 2n^3P", packed.len()))
}

fn benchmark_grid(records: &[BenchRecord], elapsed: Duration) -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let csv = dir.path().join("bench.csv");
    emit_csv(records, &csv).map_err(|e| e.to_string())?;
    let text = std::fs::read_to_string(&csv).map_err(|e| e.to_string())?;
    ensure(text.lines().next() == Some(CSV_HEADER), || "CSV header differs".into())?;
    ensure(text.lines().count() == records.len() + 1, || "CSV row count differs".into())?;
    let back = read_csv(text.as_bytes()).map_err(|e| e.to_string())?;
    ensure(back == records, || "CSV does not round-trip".into())?;
    for (metric, name) in [(Metric::Time, "time.svg"), (Metric::Memory, "mem.svg")] {
        let path = dir.path().join(name);
        emit_plot(records, metric, &path).map_err(|e| e.to_string())?;
        let svg = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let count = svg.matches(r#"class="series""#).count();
        ensure(count == 3, || format!("{name} has {count} series"))?;
    }
    let school = fit_exponent(&series(records, Algo::Schoolbook, 0, FIT_MIN_N)).map_err(|e| e.to_string())?;
    let (lo, hi) = SCHOOLBOOK_EXPONENT;
    ensure((lo..=hi).contains(&school.exponent), || format!("schoolbook exponent {:.3} outside [{lo}, {hi}]", school.exponent))?;
    Ok(format!(
        "{} records in {elapsed:.0?}, CSV and 2 plots valid, schoolbook exponent {:.3} (r^2 {:.4})",
        records.len(),
        school.exponent,
        school.r_squared
    ))
}

fn digits(v: &BigUint, beta: u64) -> usize {
    PackedInt::from_biguint(Radix::new(beta).unwrap(), v).digit_count()
}

fn ceil_log(beta: u64, q: u64) -> usize {
    let (mut d, mut p) = (0, BigUint::one());
    while p < BigUint::from(q) {
        p *= beta;
        d += 1;
    }
    d
}

fn below(rng: &mut impl Rng, bound: &BigUint) -> BigUint {
    // uniform enough for a bound check: random limbs reduced modulo the bound
    let words: Vec<u32> = (0..bound.to_u32_digits().len() + 1).map(|_| rng.random()).collect();
    BigUint::new(words) % bound
}

fn digit_bounds() -> Check {
    const CHECKS: usize = 10_000;
    const BETAS: [u64; 5] = [10, 1 << 32, 2, 7, 1000];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut violations = Vec::new();
    for t in 0..CHECKS {
        let beta = BETAS[t % BETAS.len()];
        let m = rng.random_range(1..=12u32);
        let top = BigUint::from(beta).pow(m);
        let (a, b) = (below(&mut rng, &top), below(&mut rng, &top));
        let radix = Radix::new(beta).unwrap();
        let prod = PackedInt::from_biguint(radix, &a).checked_mul(&PackedInt::from_biguint(radix, &b)).unwrap();
        if prod.to_biguint() != &a * &b || prod.digit_count() > 2 * m as usize {
            violations.push(format!("product bound beta={beta} m={m}"));
        }
        let max = &top - 1u32;
        let tight = digits(&(&max * &max), beta);
        if tight > 2 * m as usize || (tight != 2 * m as usize && !(beta == 2 && m == 1)) {
            violations.push(format!("tightness beta={beta} m={m}: {tight} digits"));
        }

        let q = rng.random_range(1..=5000u64);
        let mut sum = PackedInt::zero(radix);
        let mut oracle = BigUint::zero();
        for _ in 0..q.min(64) {
            let x = below(&mut rng, &top);
            oracle += &x;
            sum = sum.checked_add(&PackedInt::from_biguint(radix, &x)).unwrap();
        }
        // the remaining terms at their maximum, the worst case for the bound
        let rest = q.saturating_sub(64);
        oracle += &max * rest;
        sum = sum.checked_add(&PackedInt::from_biguint(radix, &(&max * rest))).unwrap();
        if sum.to_biguint() != oracle || sum.digit_count() > m as usize + ceil_log(beta, q) {
            violations.push(format!("sum bound beta={beta} m={m} q={q}"));
        }
    }
    ensure(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))?;
    Ok(format!("{CHECKS} product-bound and {CHECKS} sum-bound checks, 0 violations"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, outcome: Check| {
        match &outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {why}");
            }
        }
    };
    report(1, "golden worked example", golden_example());
    report(2, "correlation-slice sweep", slice_sweep());
    report(3, "oracle equivalence", oracle_equivalence());
    report(4, "carry-freedom", carry_freedom());
    report(5, "decimal exactness", decimal_exactness());
    report(6, "complex equivalence", complex_equivalence());

    let config = BenchConfig::default();
    let start = Instant::now();
    let grid = run_benchmark(&config);
    let elapsed = start.elapsed();
    match grid {
        Ok(records) => {
            report(7, "digit-footprint formula", footprint_formula(&records));
            report(8, "benchmark grid", benchmark_grid(&records, elapsed));
            println!("findings (recorded, not asserted):");
            for line in findings(&records, FIT_MIN_N).to_string().lines() {
                println!("  {line}");
            }
        }
        Err(e) => {
            report(7, "digit-footprint formula", Err(format!("benchmark failed: {e}")));
            report(8, "benchmark grid", Err(format!("benchmark failed: {e}")));
        }
    }
    report(9, "digit-count bounds", digit_bounds());

    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
