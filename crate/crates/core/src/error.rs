use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radix must lie in [2, 2^32], got {0}")]
    InvalidRadix(u64),

    #[error("operands use different radices ({0} and {1})")]
    RadixMismatch(u64, u64),

    #[error("malformed integer literal {0:?}")]
    MalformedInteger(String),

    #[error("malformed decimal literal {0:?}")]
    MalformedDecimal(String),

    #[error("cannot multiply a {0}x{1} matrix by a {2}x{3} matrix")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("matrix shape {rows}x{cols} does not fit {len} elements")]
    BadShape { rows: usize, cols: usize, len: usize },

    #[error("negative element {value} at ({row}, {col}); packed multiplication needs non-negative input")]
    NegativeElement { row: usize, col: usize, value: String },

    #[error("packing parameters do not match the operand ({0})")]
    ParamsMismatch(&'static str),

    #[error("correlation slice {index} out of range 0..={max}")]
    SliceIndexOutOfRange { index: usize, max: usize },

    #[error("field value does not fit in {width} digits")]
    FieldOverflow { width: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
