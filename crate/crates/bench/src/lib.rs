//! Benchmark harness, report writers and matrix-file tool for the packed
//! multiplication library.

pub mod bench;
mod error;
pub mod fit;
pub mod generate;
pub mod matfile;
pub mod plot;
pub mod report;

pub use bench::{fixed_example, instance_seed, parse_radix, run_benchmark, Algo, BenchConfig, BenchRecord};
pub use error::{BenchError, Result};
pub use fit::{fit_exponent, ExponentFit};
pub use generate::{generate_matrix, uniform_digits, Kind, Operand};
pub use matfile::{multiply_file, FileError, MatrixFile};
pub use plot::{emit_plot, render_plot, Metric};
pub use report::{emit_csv, findings, read_csv, write_csv, Findings, CSV_HEADER};
