use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use paramres::{corpus, reproduce_example, Experiment, ExperimentReport, HarnessError, LoadedRing, Result, Settings};

#[derive(Parser)]
#[command(name = "paramres", version, about = "Koszul complexes, resolutions and parameter invariants over quotient rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal free resolution of R/(x).
    Resolve(RingArgs),
    /// Koszul homology lengths of the powers of x.
    Koszul(RingArgs),
    /// Dimension, depth, defect, local cohomology and injectivity checks.
    Invariants(RingArgs),
    /// Standard powers, length formulas and stability.
    Standard(RingArgs),
    /// Poincaré series of R/(x) against the Koszul homology bound.
    Inequality(RingArgs),
    /// Betti stabilization for standard powers.
    MainTheorem(RingArgs),
    /// Betti sequences of R/(x^i) for i up to the power bound.
    Scan(RingArgs),
    /// The three series of the worked example ring.
    Example(OutputArgs),
}

#[derive(clap::Args)]
struct RingArgs {
    /// Ring-spec file, or `builtin:<name>` for a shipped ring.
    #[arg(long)]
    ring: String,
    /// Name of the parameter sequence; defaults to the first one.
    #[arg(long)]
    sop: Option<String>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long = "power-max")]
    power_max: Option<i64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time per stage (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn load(arg: &str) -> Result<(String, LoadedRing)> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return Ok((name.to_string(), corpus::load(name)?));
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let ring = LoadedRing::parse(&text).map_err(|source| HarnessError::Spec {
        path: arg.to_string(),
        source,
    })?;
    let label = path.file_stem().map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((label, ring))
}

fn emit(report: &ExperimentReport, output: &OutputArgs) -> Result<()> {
    let body = match output.format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json(),
    };
    match &output.out {
        Some(path) => fs::write(path, body).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let (args, pick): (RingArgs, fn(&Experiment) -> Result<ExperimentReport>) = match cli.command {
        Command::Example(output) => {
            let report = reproduce_example(output.timings)?;
            emit(&report, &output)?;
            return Ok(report.passed());
        }
        Command::Resolve(a) => (a, |e| e.resolve()),
        Command::Koszul(a) => (a, |e| e.koszul()),
        Command::Invariants(a) => (a, |e| e.invariants()),
        Command::Standard(a) => (a, |e| e.standard()),
        Command::Inequality(a) => (a, |e| e.inequality()),
        Command::MainTheorem(a) => (a, |e| e.main_theorem()),
        Command::Scan(a) => (a, |e| e.scan()),
    };
    let (label, ring) = load(&args.ring)?;
    let settings = Settings::for_ring(&ring, args.cap, args.power_max, args.output.timings);
    let experiment = Experiment::new(&label, &ring, args.sop.as_deref(), settings)?;
    let report = pick(&experiment)?;
    emit(&report, &args.output)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
