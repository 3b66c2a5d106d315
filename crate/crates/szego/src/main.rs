//! `szego-bench`: run the convergence experiment matrix (`bench`) or
//! evaluate the kernel at a single point (`eval`).
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use szego::bench::{run_experiment, write_table, ExperimentConfig};
use szego::kernel::{self, AnnulusDomain, Method};
use szego::parse::{format_complex_fixed, parse_complex};
use szego::TruncationSpec;

#[derive(Parser)]
#[command(name = "szego-bench", version, about = "Szegő kernel of an annulus: convergence benchmark and point evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment matrix and emit the error table.
    Bench(BenchArgs),
    /// Evaluate the kernel at a single point.
    Eval(EvalArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// JSON config file with the same keys as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Inner radius of the annulus.
    #[arg(long)]
    rho: Option<f64>,
    /// Anchor point, complex literal like 0.7i.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Half-widths N for the slower bilateral series columns.
    #[arg(long = "series-widths", value_delimiter = ',')]
    series_widths: Option<Vec<usize>>,
    /// Half-widths N for the faster bilateral series columns.
    #[arg(long = "series5-widths", value_delimiter = ',')]
    series5_widths: Option<Vec<usize>>,
    /// Depths P for the infinite product columns.
    #[arg(long = "product-depths", value_delimiter = ',')]
    product_depths: Option<Vec<usize>>,
    /// Nyström node counts per boundary curve.
    #[arg(long, value_delimiter = ',')]
    nodes: Option<Vec<usize>>,
    /// Output format: csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    rho: f64,
    /// Anchor point, complex literal like 0.7i.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Evaluation point, complex literal.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// series4 | series5 | product | closed.
    #[arg(long)]
    method: String,
    /// Series half-width N.
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Product depth P.
    #[arg(long, default_value_t = 25)]
    p: usize,
}

enum AppError {
    Usage(String),
    Numerical(String),
}

impl From<szego::Error> for AppError {
    fn from(e: szego::Error) -> Self {
        AppError::Numerical(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> AppError {
    AppError::Usage(e.to_string())
}

fn run_bench(args: BenchArgs) -> Result<(), AppError> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
            serde_json::from_str::<ExperimentConfig>(&text)
                .map_err(|e| usage(format!("bad config {}: {e}", path.display())))?
        }
        None => ExperimentConfig::default(),
    };
    if let Some(rho) = args.rho {
        cfg.rho = rho;
    }
    if let Some(a) = &args.a {
        cfg.a = parse_complex(a).map_err(usage)?;
    }
    if let Some(widths) = args.series_widths {
        cfg.series4_widths = widths;
    }
    if let Some(widths) = args.series5_widths {
        cfg.series5_widths = widths;
    }
    if let Some(depths) = args.product_depths {
        cfg.product_depths = depths;
    }
    if let Some(nodes) = args.nodes {
        cfg.node_counts = nodes;
    }
    if let Some(format) = &args.format {
        cfg.format = format.parse().map_err(usage)?;
    }
    if let Some(out) = args.out {
        cfg.out = Some(out);
    }

    let table = run_experiment(&cfg)?;
    match &cfg.out {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| AppError::Numerical(format!("cannot write {}: {e}", path.display())))?;
            write_table(&table, cfg.format, file)
                .map_err(|e| AppError::Numerical(format!("cannot write {}: {e}", path.display())))?;
        }
        None => {
            let stdout = std::io::stdout();
            write_table(&table, cfg.format, stdout.lock())
                .map_err(|e| AppError::Numerical(format!("cannot write table: {e}")))?;
        }
    }
    Ok(())
}

fn run_eval(args: EvalArgs) -> Result<(), AppError> {
    let a = parse_complex(&args.a).map_err(usage)?;
    let z = parse_complex(&args.z).map_err(usage)?;
    let method: Method = args.method.parse().map_err(usage)?;
    let dom = AnnulusDomain::new(args.rho, a)?;
    let trunc = TruncationSpec::new(args.n, args.p);
    let value = kernel::eval_canonical(&dom, z, method, &trunc)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "S(z, a) = {}", format_complex_fixed(value, 6)).ok();
    if method == Method::Product21 {
        writeln!(out, "zero at z = {}", format_complex_fixed(kernel::zero_location(&dom), 6)).ok();
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Bench(args) => run_bench(args),
        Command::Eval(args) => run_eval(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
