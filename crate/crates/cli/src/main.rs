use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use qcorr_core::{
    emit_csv, emit_svg, figure_preset, parse_config, run_sweep_with_threads, Error, SweepConfig,
};

/// Thermal steering, entanglement and work extraction sweeps for a two-qubit XYZ model.
#[derive(Parser)]
#[command(name = "qcorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sweep described by a configuration file.
    Sweep {
        #[arg(long, value_name = "FILE")]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a built-in figure preset (fig1a ... fig4c).
    Figure {
        preset: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output path stem; `.csv` and `.svg` are appended.
    #[arg(long, value_name = "STEM")]
    out: Option<String>,
    /// Also write an SVG chart.
    #[arg(long)]
    svg: bool,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "QCORR_THREADS", default_value_t = 0)]
    threads: usize,
}

struct Failure {
    context: Option<String>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            context: None,
            error,
        }
    }
}

fn io_context(what: String) -> impl FnOnce(Error) -> Failure {
    move |error| Failure {
        context: Some(what),
        error,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (cfg, default_stem, args): (SweepConfig, String, OutputArgs) = match cli.command {
        Command::Sweep { config, output } => {
            let text = std::fs::read_to_string(&config)
                .map_err(Error::from)
                .map_err(io_context(format!("cannot read {}", config.display())))?;
            let cfg = parse_config(&text)?;
            (cfg, "sweep".to_string(), output)
        }
        Command::Figure { preset, output } => {
            let cfg = figure_preset(&preset)?;
            (cfg, preset, output)
        }
    };
    let stem = args
        .out
        .or_else(|| cfg.output.clone())
        .unwrap_or(default_stem);
    let result = run_sweep_with_threads(&cfg, args.threads)?;

    let csv = format!("{stem}.csv");
    emit_csv(&result, &csv).map_err(io_context(format!("cannot write {csv}")))?;
    println!("wrote {csv} ({} rows)", result.rows.len());
    if args.svg || cfg.emit_svg {
        if cfg.quantities.is_empty() {
            println!("no quantities requested, skipped SVG");
        } else {
            let svg = format!("{stem}.svg");
            emit_svg(&result, &svg).map_err(io_context(format!("cannot write {svg}")))?;
            println!("wrote {svg}");
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the exit status.
fn execute<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(Failure { context, error }) => {
            match context {
                Some(c) => eprintln!("error: {c}: {error}"),
                None => eprintln!("error: {error}"),
            }
            if error.is_io() {
                2
            } else {
                1
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(execute(std::env::args_os()))
}
