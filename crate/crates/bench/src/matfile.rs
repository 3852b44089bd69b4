//! Plain-text matrix files and the file-to-file multiply command.
//!
//! ```text
//! int 2 3
//! 1 -2 3
//! 4 5 -6
//! ```
//!
//! The first line is `kind rows cols`; the remaining whitespace-separated
//! tokens are the elements in row-major order.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigInt;
use packmul::{multiply_complex, multiply_decimal, multiply_int, ComplexDecimal, ComplexMatrix, DenseMatrix, ExactDecimal, Radix};

use crate::generate::{Kind, Operand};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("cannot multiply {0}x{1} by {2}x{3}")]
    Dimension(usize, usize, usize, usize),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl FileError {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Parse { .. } => 2,
            FileError::Dimension(..) => 3,
            FileError::Io { .. } => 4,
        }
    }
}

/// A parsed matrix file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub kind: Kind,
    pub operand: Operand,
}

impl MatrixFile {
    pub fn rows(&self) -> usize {
        match &self.operand {
            Operand::Int(m) => m.rows(),
            Operand::Decimal(m) => m.rows(),
            Operand::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match &self.operand {
            Operand::Int(m) => m.cols(),
            Operand::Decimal(m) => m.cols(),
            Operand::Complex(m) => m.cols(),
        }
    }

    pub fn from_operand(operand: Operand) -> Self {
        let kind = match operand {
            Operand::Int(_) => Kind::Int,
            Operand::Decimal(_) => Kind::Decimal,
            Operand::Complex(_) => Kind::Complex,
        };
        MatrixFile { kind, operand }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut lines = text.lines();
        let header = lines.next().ok_or("empty file")?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [kind, rows, cols] = fields[..] else {
            return Err(format!("header must be `kind rows cols`, got {header:?}"));
        };
        let kind: Kind = kind.parse().map_err(|e: crate::BenchError| e.to_string())?;
        if kind == Kind::Nonneg {
            return Err("kind must be int, decimal or complex".into());
        }
        let dim = |s: &str| match s.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(format!("bad dimension {s:?}")),
        };
        let (rows, cols) = (dim(rows)?, dim(cols)?);
        let tokens: Vec<&str> = lines.flat_map(str::split_whitespace).collect();
        let expected = rows.checked_mul(cols).ok_or("dimensions overflow")?;
        if tokens.len() != expected {
            return Err(format!("expected {expected} elements, found {}", tokens.len()));
        }
        fn elements<T: std::str::FromStr>(tokens: &[&str]) -> Result<Vec<T>, String> {
            tokens.iter().map(|t| t.parse().map_err(|_| format!("bad element {t:?}"))).collect()
        }
        let shape = |e: packmul::Error| e.to_string();
        let operand = match kind {
            Kind::Int => {
                if let Some(bad) = tokens.iter().find(|t| !is_integer(t)) {
                    return Err(format!("bad element {bad:?}"));
                }
                Operand::Int(DenseMatrix::new(rows, cols, elements::<BigInt>(&tokens)?).map_err(shape)?)
            }
            Kind::Decimal => Operand::Decimal(DenseMatrix::new(rows, cols, elements::<ExactDecimal>(&tokens)?).map_err(shape)?),
            Kind::Complex => {
                let m = DenseMatrix::new(rows, cols, elements::<ComplexDecimal>(&tokens)?).map_err(shape)?;
                Operand::Complex(ComplexMatrix::from_elements(&m))
            }
            Kind::Nonneg => unreachable!(),
        };
        Ok(MatrixFile { kind, operand })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.kind, self.rows(), self.cols());
        let mut push_rows = |cells: Vec<String>, cols: usize| {
            for row in cells.chunks(cols) {
                let _ = writeln!(out, "{}", row.join(" "));
            }
        };
        match &self.operand {
            Operand::Int(m) => push_rows(m.data().iter().map(ToString::to_string).collect(), m.cols()),
            Operand::Decimal(m) => push_rows(m.data().iter().map(ToString::to_string).collect(), m.cols()),
            Operand::Complex(m) => push_rows(m.to_elements().data().iter().map(ToString::to_string).collect(), m.cols()),
        }
        out
    }
}

/// `[+-]?[0-9]+`
fn is_integer(t: &str) -> bool {
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn read(path: &Path, kind: Kind) -> Result<MatrixFile, FileError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FileError::Io { path: name.clone(), source })?;
    let file = MatrixFile::parse(&text).map_err(|message| FileError::Parse { path: name.clone(), message })?;
    if file.kind != kind {
        return Err(FileError::Parse { path: name, message: format!("file holds {} elements, expected {kind}", file.kind) });
    }
    Ok(file)
}

/// Multiplies two matrix files of `kind` and writes the product to `out`.
/// Nothing is written unless the product succeeds.
pub fn multiply_file(a: &Path, b: &Path, kind: Kind, radix: Radix, out: &Path) -> Result<(), FileError> {
    let fa = read(a, kind)?;
    let fb = read(b, kind)?;
    if fa.cols() != fb.rows() {
        return Err(FileError::Dimension(fa.rows(), fa.cols(), fb.rows(), fb.cols()));
    }
    let core = |e: packmul::Error| FileError::Parse { path: a.display().to_string(), message: e.to_string() };
    let product = match (fa.operand, fb.operand) {
        (Operand::Int(x), Operand::Int(y)) => Operand::Int(multiply_int(&x, &y, radix).map_err(core)?),
        (Operand::Decimal(x), Operand::Decimal(y)) => Operand::Decimal(multiply_decimal(&x, &y, radix).map_err(core)?),
        (Operand::Complex(x), Operand::Complex(y)) => Operand::Complex(multiply_complex(&x, &y, radix).map_err(core)?),
        _ => unreachable!("kinds checked on read"),
    };
    let text = MatrixFile { kind, operand: product }.to_text();
    fs::write(out, text).map_err(|source| FileError::Io { path: out.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f = MatrixFile::parse("int 2 3\n1 -2 3\n4 5 -6\n").unwrap();
        assert_eq!((f.rows(), f.cols()), (2, 3));
        assert_eq!(f.to_text(), "int 2 3\n1 -2 3\n4 5 -6\n");
        let g = MatrixFile::parse("decimal 1 2\n  0.50\n\n-3.25").unwrap();
        assert_eq!(g.to_text(), "decimal 1 2\n0.5 -3.25\n");
        let c = MatrixFile::parse("complex 1 1\n1.5-2i\n").unwrap();
        assert_eq!(c.to_text(), "complex 1 1\n1.5-2i\n");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "int 2",
            "int 2 2 2\n1 2 3 4",
            "float 1 1\n1",
            "nonneg 1 1\n1",
            "int 0 1\n",
            "int 1 2\n1",
            "int 1 1\n1 2",
            "int 1 1\n1.5",
            "int 1 1\n0x1",
            "decimal 1 1\n1e3",
            "complex 1 1\n2",
        ] {
            assert!(MatrixFile::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(FileError::Parse { path: "a".into(), message: "m".into() }.exit_code(), 2);
        assert_eq!(FileError::Dimension(1, 2, 3, 4).exit_code(), 3);
        let io = io::Error::new(io::ErrorKind::NotFound, "x");
        assert_eq!(FileError::Io { path: "a".into(), source: io }.exit_code(), 4);
    }
}
