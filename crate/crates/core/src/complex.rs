//! Complex decimal matrices, multiplied as four real products.

use std::fmt;
use std::str::FromStr;

use num_bigint::Sign;

use crate::bigdigit::Radix;
use crate::decimal::{multiply_decimal, ExactDecimal};
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Scalar};

/// `re + im·i` with exact decimal parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexDecimal {
    pub re: ExactDecimal,
    pub im: ExactDecimal,
}

impl ComplexDecimal {
    pub fn new(re: ExactDecimal, im: ExactDecimal) -> Self {
        ComplexDecimal { re, im }
    }
}

impl FromStr for ComplexDecimal {
    type Err = Error;

    /// Accepts `a+bi` or `a-bi`, where `a` and `b` follow the decimal grammar.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedDecimal(s.to_string());
        let body = s.strip_suffix('i').ok_or_else(malformed)?;
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(malformed)?;
        let (re, im) = body.split_at(split);
        let re: ExactDecimal = re.parse().map_err(|_| malformed())?;
        let im: ExactDecimal = im.parse().map_err(|_| malformed())?;
        Ok(ComplexDecimal { re, im })
    }
}

impl fmt::Display for ComplexDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.sign() == Sign::Minus {
            write!(f, "{}-{}i", self.re, self.im.neg())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Scalar for ComplexDecimal {
    fn zero() -> Self {
        ComplexDecimal { re: ExactDecimal::zero(), im: ExactDecimal::zero() }
    }

    fn add(&self, other: &Self) -> Self {
        ComplexDecimal { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    fn sub(&self, other: &Self) -> Self {
        ComplexDecimal { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    fn mul(&self, other: &Self) -> Self {
        ComplexDecimal {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }
}

/// A complex matrix stored as its real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    re: DenseMatrix<ExactDecimal>,
    im: DenseMatrix<ExactDecimal>,
}

impl ComplexMatrix {
    pub fn new(re: DenseMatrix<ExactDecimal>, im: DenseMatrix<ExactDecimal>) -> Result<Self> {
        if re.rows() != im.rows() || re.cols() != im.cols() {
            return Err(Error::BadShape { rows: re.rows(), cols: re.cols(), len: im.data().len() });
        }
        Ok(ComplexMatrix { re, im })
    }

    pub fn from_elements(m: &DenseMatrix<ComplexDecimal>) -> Self {
        ComplexMatrix { re: m.map(|z| z.re.clone()), im: m.map(|z| z.im.clone()) }
    }

    pub fn to_elements(&self) -> DenseMatrix<ComplexDecimal> {
        self.re.zip_with(&self.im, |re, im| ComplexDecimal::new(re.clone(), im.clone())).expect("parts share a shape")
    }

    pub fn re(&self) -> &DenseMatrix<ExactDecimal> {
        &self.re
    }

    pub fn im(&self) -> &DenseMatrix<ExactDecimal> {
        &self.im
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn cols(&self) -> usize {
        self.re.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> ComplexDecimal {
        ComplexDecimal::new(self.re.get(i, j).clone(), self.im.get(i, j).clone())
    }
}

/// `(A_r B_r − A_i B_i) + i(A_r B_i + A_i B_r)`, each real product on the
/// exact decimal path.
pub fn multiply_complex(a: &ComplexMatrix, b: &ComplexMatrix, radix: Radix) -> Result<ComplexMatrix> {
    a.re.check_product(&b.re)?;
    let rr = multiply_decimal(&a.re, &b.re, radix)?;
    let ri = multiply_decimal(&a.re, &b.im, radix)?;
    let ir = multiply_decimal(&a.im, &b.re, radix)?;
    let ii = multiply_decimal(&a.im, &b.im, radix)?;
    let re = rr.zip_with(&ii, |x, y| x.sub(y))?;
    let im = ri.zip_with(&ir, |x, y| x.add(y))?;
    ComplexMatrix::new(re, im)
}
