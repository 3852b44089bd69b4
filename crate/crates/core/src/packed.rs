//! Packed multiplication of non-negative integer matrices.
//!
//! Row `i` of `A` (inner dimension `n`) becomes
//! `C[i] = Σ_k A[i][k]·β^{(n−1−k)P}` and column `j` of `B` becomes
//! `D[j] = Σ_k B[k][j]·β^{kP}`. The product `C[i]·D[j]` holds, in field `s`
//! (digits `sP .. (s+1)P`), the sum of `A[i][k₁]·B[k₂][j]` over
//! `k₁ − k₂ = n−1−s`. Field `n−1` is therefore the dot product, and
//! extracting it is a digit slice as long as no field overflows into the
//! next one.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed};

use crate::bigdigit::{PackedInt, Radix};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Field layout for one packed product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PackingParams {
    radix: Radix,
    element_digits: usize,
    width: usize,
    inner: usize,
}

impl PackingParams {
    /// Validates `M ≥ 1`, `n ≥ 1` and carry-freedom `β^P > n·(β^M − 1)²`.
    pub fn new(radix: Radix, element_digits: usize, width: usize, inner: usize) -> Result<Self> {
        if element_digits == 0 {
            return Err(Error::ParamsMismatch("element width must be at least one digit"));
        }
        if inner == 0 {
            return Err(Error::ParamsMismatch("inner dimension must be positive"));
        }
        let beta = BigUint::from(radix.beta());
        let max_elem = beta.pow(element_digits as u32) - 1u32;
        let worst = BigUint::from(inner) * &max_elem * &max_elem;
        if beta.pow(width as u32) <= worst {
            return Err(Error::ParamsMismatch("packing width too small for carry-free fields"));
        }
        Ok(PackingParams { radix, element_digits, width, inner })
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Digit width `M` of the largest operand element.
    pub fn element_digits(&self) -> usize {
        self.element_digits
    }

    /// Field width `P`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Inner dimension `n`.
    pub fn inner(&self) -> usize {
        self.inner
    }

    /// Same layout with a wider field; any `P' ≥ P` stays carry-free.
    pub fn with_width(&self, width: usize) -> Result<Self> {
        Self::new(self.radix, self.element_digits, width, self.inner)
    }
}

fn check_non_negative(m: &DenseMatrix<BigInt>) -> Result<()> {
    for (idx, v) in m.data().iter().enumerate() {
        if v.is_negative() {
            return Err(Error::NegativeElement {
                row: idx / m.cols(),
                col: idx % m.cols(),
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

fn to_packed(radix: Radix, v: &BigInt) -> PackedInt {
    debug_assert!(v.sign() != Sign::Minus);
    PackedInt::from_biguint(radix, v.magnitude())
}

fn to_bigint(v: &PackedInt) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v.to_biguint())
}

/// Chooses `M = digits_β(max(1, max element))` and
/// `P = digits_β(n·(β^{2M} − 1))`.
pub fn compute_params(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, radix: Radix) -> Result<PackingParams> {
    a.check_product(b)?;
    check_non_negative(a)?;
    check_non_negative(b)?;
    let max = a
        .data()
        .iter()
        .chain(b.data())
        .map(BigInt::magnitude)
        .max()
        .cloned()
        .unwrap_or_default()
        .max(BigUint::one());
    let element_digits = PackedInt::from_biguint(radix, &max).digit_count();
    let inner = a.cols();
    let bound = BigUint::from(inner) * (BigUint::from(radix.beta()).pow(2 * element_digits as u32) - 1u32);
    let width = PackedInt::from_biguint(radix, &bound).digit_count();
    PackingParams::new(radix, element_digits, width, inner)
}

fn field_of(radix: Radix, v: &BigInt, params: &PackingParams) -> Result<PackedInt> {
    if v.is_negative() {
        return Err(Error::ParamsMismatch("negative element"));
    }
    let field = to_packed(radix, v);
    if field.digit_count() > params.element_digits {
        return Err(Error::ParamsMismatch("element wider than M digits"));
    }
    Ok(field)
}

/// `C[i] = Σ_k A[i][k]·β^{(n−1−k)P}` for every row.
pub fn pack_rows(a: &DenseMatrix<BigInt>, params: &PackingParams) -> Result<Vec<PackedInt>> {
    if a.cols() != params.inner {
        return Err(Error::ParamsMismatch("row length differs from inner dimension"));
    }
    let radix = params.radix;
    a.iter_rows()
        .map(|row| {
            let fields = row.iter().rev().map(|v| field_of(radix, v, params)).collect::<Result<Vec<_>>>()?;
            PackedInt::from_fields(radix, params.width, &fields)
        })
        .collect()
}

/// `D[j] = Σ_k B[k][j]·β^{kP}` for every column.
pub fn pack_cols(b: &DenseMatrix<BigInt>, params: &PackingParams) -> Result<Vec<PackedInt>> {
    if b.rows() != params.inner {
        return Err(Error::ParamsMismatch("column length differs from inner dimension"));
    }
    let radix = params.radix;
    (0..b.cols())
        .map(|j| {
            let fields = b.column(j).map(|v| field_of(radix, v, params)).collect::<Result<Vec<_>>>()?;
            PackedInt::from_fields(radix, params.width, &fields)
        })
        .collect()
}

/// Splits a packed value back into `count` fields, least significant first.
pub fn unpack(packed: &PackedInt, params: &PackingParams, count: usize) -> Vec<BigInt> {
    (0..count).map(|t| to_bigint(&packed.slice(t * params.width, params.width))).collect()
}

/// Dot product of the row packed in `c` and the column packed in `d`:
/// `⌊c·d / β^{(n−1)P}⌋ mod β^P`.
pub fn packed_dot(c: &PackedInt, d: &PackedInt, params: &PackingParams) -> Result<BigInt> {
    if c.radix() != params.radix {
        return Err(Error::RadixMismatch(c.radix().beta(), params.radix.beta()));
    }
    let prod = c.checked_mul(d)?;
    Ok(to_bigint(&prod.slice((params.inner - 1) * params.width, params.width)))
}

/// Field `s` of a packed product: `Σ A[i][k₁]·B[k₂][j]` over `k₁ − k₂ = n−1−s`.
pub fn correlation_slice(prod: &PackedInt, s: usize, params: &PackingParams) -> Result<BigInt> {
    let max = 2 * params.inner - 2;
    if s > max {
        return Err(Error::SliceIndexOutOfRange { index: s, max });
    }
    Ok(to_bigint(&prod.slice(s * params.width, params.width)))
}

/// Intermediate state of one packed multiply.
#[derive(Clone, Debug)]
pub struct PackedMultiply {
    pub params: PackingParams,
    pub packed_rows: Vec<PackedInt>,
    pub packed_cols: Vec<PackedInt>,
    pub product: DenseMatrix<BigInt>,
}

/// Exact product of two non-negative integer matrices via packing.
pub fn multiply_nonneg(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, radix: Radix) -> Result<DenseMatrix<BigInt>> {
    multiply_nonneg_traced(a, b, radix).map(|t| t.product)
}

/// As [`multiply_nonneg`], keeping the parameters and packed operands.
pub fn multiply_nonneg_traced(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, radix: Radix) -> Result<PackedMultiply> {
    let params = compute_params(a, b, radix)?;
    let packed_rows = pack_rows(a, &params)?;
    let packed_cols = pack_cols(b, &params)?;
    let mut data = Vec::with_capacity(a.rows() * b.cols());
    for c in &packed_rows {
        for d in &packed_cols {
            data.push(packed_dot(c, d, &params)?);
        }
    }
    let product = DenseMatrix::new(a.rows(), b.cols(), data)?;
    Ok(PackedMultiply { params, packed_rows, packed_cols, product })
}

/// Storage of the packed arrays `C`, `D` and `E`, in radix-β digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Footprint {
    /// Analytic charge: `n·P` digits per packed row and column, `2nP` per
    /// result cell (the width of the full product it is cut from). For
    /// `n×n` operands this is `2n²P + 2n³P`.
    pub paper_model: u64,
    /// Digits actually retained: the packed rows and columns at their real
    /// length plus the extracted result cells.
    pub impl_model: u64,
}

impl Footprint {
    pub fn from_parts(params: &PackingParams, packed_rows: &[PackedInt], packed_cols: &[PackedInt], product: &DenseMatrix<BigInt>) -> Self {
        let n = params.inner as u64;
        let p = params.width as u64;
        let (rows, cols) = (packed_rows.len() as u64, packed_cols.len() as u64);
        let paper_model = (rows + cols) * n * p + rows * cols * 2 * n * p;
        let packed: usize = packed_rows.iter().chain(packed_cols).map(PackedInt::digit_count).sum();
        let cells: usize = product
            .data()
            .iter()
            .map(|v| PackedInt::from_biguint(params.radix, v.magnitude()).digit_count())
            .sum();
        Footprint { paper_model, impl_model: (packed + cells) as u64 }
    }
}

pub fn footprint_digits(a: &DenseMatrix<BigInt>, b: &DenseMatrix<BigInt>, params: &PackingParams) -> Result<Footprint> {
    let rows = pack_rows(a, params)?;
    let cols = pack_cols(b, params)?;
    let mut data = Vec::with_capacity(rows.len() * cols.len());
    for c in &rows {
        for d in &cols {
            data.push(packed_dot(c, d, params)?);
        }
    }
    let product = DenseMatrix::new(a.rows(), b.cols(), data)?;
    Ok(Footprint::from_parts(params, &rows, &cols, &product))
}
