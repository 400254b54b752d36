//! `spherefit` command-line tool.
//!
//! Exit codes: 0 success, 1 internal error, 2 input error, 3 fit/geometry
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "spherefit", version, about = "Exact and iterative sphere fitting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fit a sphere to a CSV file of x,y,z rows and print the result as JSON.
    Fit(FitArgs),
    /// Generate a synthetic point cloud as CSV.
    Generate(GenerateArgs),
    /// Run the repeated-dataset accuracy evaluation.
    Evaluate(EvaluateArgs),
    /// Time repeated fits for a range of point counts.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Exact,
    Eberly,
}

impl From<MethodArg> for spherefit::Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exact => spherefit::Method::Exact,
            MethodArg::Eberly => spherefit::Method::Eberly,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum NoiseArg {
    Uniform,
    Gaussian,
}

impl From<NoiseArg> for spherefit::NoiseModel {
    fn from(m: NoiseArg) -> Self {
        match m {
            NoiseArg::Uniform => spherefit::NoiseModel::Uniform,
            NoiseArg::Gaussian => spherefit::NoiseModel::Gaussian,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct IterArgs {
    /// Center-step tolerance of the iterative method.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Iteration cap of the iterative method.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    max_iter: u64,
}

#[derive(Args, Debug)]
struct FitArgs {
    /// CSV file with one x,y,z row per point (header optional).
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    #[command(flatten)]
    iter: IterArgs,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Builtin case 1..=4.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4), required_unless_present = "center", conflicts_with = "center")]
    case: Option<u64>,
    /// Explicit sphere center "x,y,z" (requires --radius).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, requires = "radius")]
    center: Option<Vec<f64>>,
    #[arg(long)]
    radius: Option<f64>,
    /// Lower band limit as a fraction of the radius.
    #[arg(long, allow_negative_numbers = true)]
    u_min: Option<f64>,
    /// Upper band limit as a fraction of the radius.
    #[arg(long, allow_negative_numbers = true)]
    u_max: Option<f64>,
    /// Noise scale; overrides the case's value.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, value_enum, default_value_t = NoiseArg::Uniform)]
    noise_model: NoiseArg,
    /// Number of points.
    #[arg(short, long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout if omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Write an x,y,z header line.
    #[arg(long)]
    header: bool,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    /// Builtin cases to evaluate.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4", value_parser = clap::value_parser!(u64).range(1..=4))]
    case: Vec<u64>,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "exact,eberly")]
    methods: Vec<MethodArg>,
    /// Datasets per case.
    #[arg(long, default_value_t = 1500, value_parser = clap::value_parser!(u64).range(1..))]
    datasets: u64,
    /// Shorthand for --datasets 100 (also applies to --paper-tables).
    #[arg(long, conflicts_with = "datasets")]
    fast: bool,
    /// Points per dataset.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    points: u64,
    /// Master seed; dataset i uses seed + i.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Noise scale; overrides each case's value.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, value_enum, default_value_t = NoiseArg::Uniform)]
    noise_model: NoiseArg,
    #[command(flatten)]
    iter: IterArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; stdout if omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Run all four cases with both methods and print the three accuracy
    /// tables (mean estimates per method, rms_max x 10^3).
    #[arg(long)]
    paper_tables: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "100,300,1000,3000,10000", value_parser = clap::value_parser!(u64).range(4..))]
    n_list: Vec<u64>,
    /// Timed fits per point count.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    reps: u64,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "exact,eberly")]
    methods: Vec<MethodArg>,
    #[command(flatten)]
    iter: IterArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fit(a) => commands::fit(a),
        Command::Generate(a) => commands::generate(a),
        Command::Evaluate(a) => commands::evaluate(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
