use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use packmul::{Radix, DEFAULT_STRASSEN_CUTOFF};
use packmul_bench::{
    emit_csv, emit_plot, findings, multiply_file, parse_radix, run_benchmark, Algo, BenchConfig, Kind, Metric,
};

#[derive(Parser)]
#[command(name = "packmul", version, about = "Packed-digit matrix multiplication: benchmark and file tool")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time packed, schoolbook and Strassen multiplication on random instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "packed,schoolbook,strassen")]
        algos: Vec<Algo>,
        #[arg(long, value_delimiter = ',', default_value = "4,8,16,32,64,128,256")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        element_digits: u32,
        /// Radices for the packed runs: 10, pow2 or an integer base.
        #[arg(long, value_delimiter = ',', default_value = "10,pow2", value_parser = radix_arg)]
        radix: Vec<Radix>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_STRASSEN_CUTOFF)]
        strassen_cutoff: usize,
        /// Smallest size included in the exponent fits.
        #[arg(long, default_value_t = 32)]
        fit_min_n: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        plot_time: Option<PathBuf>,
        #[arg(long)]
        plot_mem: Option<PathBuf>,
        /// Use the fixed 3×3 example pair for n = 3.
        #[arg(long)]
        fixed_example: bool,
    },
    /// Multiply two matrix files.
    Multiply {
        #[arg(long, value_parser = kind_arg)]
        kind: Kind,
        #[arg(long, default_value = "10", value_parser = radix_arg)]
        radix: Radix,
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn radix_arg(s: &str) -> Result<Radix, String> {
    parse_radix(s).map_err(|e| e.to_string())
}

fn kind_arg(s: &str) -> Result<Kind, String> {
    match s.parse() {
        Ok(Kind::Nonneg) => Err("kind must be int, decimal or complex".into()),
        other => other.map_err(|e: packmul_bench::BenchError| e.to_string()),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Multiply { kind, radix, a, b, output } => match multiply_file(&a, &b, kind, radix, &output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
        Command::Bench {
            algos,
            sizes,
            trials,
            element_digits,
            radix,
            seed,
            strassen_cutoff,
            fit_min_n,
            csv,
            plot_time,
            plot_mem,
            fixed_example,
        } => {
            let config = BenchConfig { sizes, trials, element_digits, radices: radix, algos, seed, strassen_cutoff, fixed_example };
            match bench(&config, fit_min_n, csv, plot_time, plot_mem) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}

fn bench(
    config: &BenchConfig,
    fit_min_n: usize,
    csv: Option<PathBuf>,
    plot_time: Option<PathBuf>,
    plot_mem: Option<PathBuf>,
) -> anyhow::Result<()> {
    let records = run_benchmark(config)?;
    if records.is_empty() {
        println!("no records (trials = 0)");
        return Ok(());
    }
    if let Some(path) = csv {
        emit_csv(&records, &path).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = plot_time {
        emit_plot(&records, Metric::Time, &path).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = plot_mem {
        emit_plot(&records, Metric::Memory, &path).with_context(|| format!("writing {}", path.display()))?;
    }
    println!("{} records", records.len());
    println!("{}", findings(&records, fit_min_n));
    Ok(())
}
