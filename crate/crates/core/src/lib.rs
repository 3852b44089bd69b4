//! Exact matrix multiplication by digit packing.
//!
//! Each row of the left operand and each column of the right operand is
//! packed into one arbitrary-precision integer, with every element occupying
//! a fixed-width field of `P` radix-β digits. A single big-integer product of
//! a packed row and a packed column is the correlation of the two vectors,
//! laid out field by field; when `P` is wide enough that no coefficient
//! carries into its neighbour, the dot product is the middle field and can be
//! read off by slicing digits.
//!
//! Modules:
//!
//! - [`bigdigit`]: the radix-β non-negative integer kernel ([`PackedInt`]).
//! - [`packed`]: parameter selection, packing and the non-negative multiply.
//! - [`signed`] and [`complex`]: reductions of signed and complex products to
//!   non-negative ones.
//! - [`decimal`]: exact scaled decimals and their matrix product.
//! - [`reference`]: schoolbook and Strassen multiplication used as oracles.

pub mod bigdigit;
pub mod complex;
pub mod decimal;
mod error;
pub mod matrix;
pub mod packed;
pub mod reference;
pub mod signed;

pub use bigdigit::{PackedInt, Radix, DEFAULT_KARATSUBA_THRESHOLD};
pub use complex::{multiply_complex, ComplexDecimal, ComplexMatrix};
pub use decimal::{max_scale, multiply_decimal, multiply_decimal_scaled, ExactDecimal, ScaledProduct};
pub use error::{Error, Result};
pub use matrix::{DenseMatrix, Scalar};
pub use packed::{
    compute_params, correlation_slice, footprint_digits, multiply_nonneg, multiply_nonneg_traced, pack_cols,
    pack_rows, packed_dot, unpack, Footprint, PackedMultiply, PackingParams,
};
pub use reference::{schoolbook_multiply, strassen_footprint_digits, strassen_multiply, DEFAULT_STRASSEN_CUTOFF};
pub use signed::{multiply_int, signed_partial_products, split_signs, SignSplit};
