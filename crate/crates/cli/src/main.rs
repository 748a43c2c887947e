//! `aim`: Morse and oscillator spectra from the asymptotic iteration method.

mod report;
mod settings;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use aim_core::eigenfunction::series_for_level;
use aim_core::{assemble, reduce_units, table1, Domain, ReferenceTable};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::{compare, solve, write_comparison, write_csv, write_levels};
use crate::settings::{parse_molecule, OutputFormat, Settings, UsageError};

const EXIT_PARTIAL: u8 = 2;
const EXIT_COMPARE_FAILED: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "aim", version, about = "Bound-state spectra by the asymptotic iteration method")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// TOML-style `key = value` file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve for the lowest levels.
    Solve {
        #[command(flatten)]
        settings: Settings,
        #[command(flatten)]
        common: Common,
    },
    /// Solve and compare against a reference table column.
    Compare {
        #[command(flatten)]
        settings: Settings,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate a normalised Morse eigenfunction.
    Wavefunction(WavefunctionArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Half,
    Whole,
}

#[derive(Debug, Args)]
struct WavefunctionArgs {
    /// `li2`, or `De_cm1,beta_per_angstrom,xe_angstrom,mu_amu`.
    #[arg(long)]
    molecule: String,
    /// Level index.
    #[arg(long)]
    level: usize,
    /// Start of the table (Å); default x_e − 2.
    #[arg(long = "x-min")]
    x_min: Option<f64>,
    /// End of the table (Å); default x_e + 8.
    #[arg(long = "x-max")]
    x_max: Option<f64>,
    #[arg(long, default_value_t = 201)]
    points: usize,
    /// Normalisation range.
    #[arg(long, value_enum, default_value = "half")]
    domain: DomainArg,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputFormat,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn sink(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(settings: Settings, common: &Common) -> anyhow::Result<Settings> {
    match &common.config {
        Some(path) => settings.with_file(path),
        None => Ok(settings),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Solve { settings, common } => {
            let cfg = load(settings, &common)?.resolve("1e-20")?;
            let solved = solve(&cfg)?;
            let mut out = sink(&common.out)?;
            write_levels(&mut out, &solved, cfg.output)?;
            out.flush()?;
            Ok(match &solved.shortfall {
                Some(why) => {
                    eprintln!("partial result: {why}");
                    EXIT_PARTIAL
                }
                None => 0,
            })
        }
        Command::Compare { settings, common } => {
            let mut settings = load(settings, &common)?;
            let table = match &settings.reference {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("cannot read reference {}", path.display()))?;
                    ReferenceTable::parse(&text).with_context(|| format!("reference {}", path.display()))?
                }
                None => table1(),
            };
            let column = settings.column.clone().unwrap_or_else(|| "aim".to_string());
            let reference = table.column(&column).map_err(|e| UsageError(e.to_string()))?;
            if settings.levels.is_some_and(|l| l > reference.len()) {
                return Err(UsageError(format!("the reference has only {} levels", reference.len())).into());
            }
            let pass_tol = settings::parse_exact("tol", settings.tol.take().as_deref().unwrap_or("1e-15"))?;
            settings.levels = settings.levels.or(Some(reference.len()));
            let cfg = settings.resolve("1e-20")?;
            let solved = solve(&cfg)?;
            let comparison = compare(&solved.levels, &reference, &column, &pass_tol);
            let mut out = sink(&common.out)?;
            write_comparison(&mut out, &comparison, cfg.output)?;
            out.flush()?;
            let s = &comparison.summary;
            eprintln!(
                "{}: column `{}`, {} levels, max |Δε| = {}, max relative = {}, tol = {}",
                if s.pass { "pass" } else { "FAIL" },
                s.column,
                s.levels,
                s.max_abs_diff,
                s.max_rel_diff,
                s.tol
            );
            Ok(if let Some(why) = &solved.shortfall {
                eprintln!("partial result: {why}");
                EXIT_PARTIAL
            } else if s.pass {
                0
            } else {
                EXIT_COMPARE_FAILED
            })
        }
        Command::Wavefunction(args) => wavefunction(args),
    }
}

#[derive(serde::Serialize)]
struct Sample {
    x: f64,
    psi: f64,
}

fn wavefunction(args: WavefunctionArgs) -> anyhow::Result<u8> {
    let params = parse_molecule(&args.molecule)?;
    let reduced = reduce_units(&params)?;
    let count = reduced.bound_state_count();
    if args.level >= count {
        return Err(UsageError(format!("level {} is unbound; this well holds {count} levels", args.level)).into());
    }
    if args.points < 2 {
        return Err(UsageError("--points must be at least 2".into()).into());
    }
    let (x_min, x_max) = (args.x_min.unwrap_or(params.x_e - 2.0), args.x_max.unwrap_or(params.x_e + 8.0));
    if x_min >= x_max || x_min.is_nan() || x_max.is_nan() {
        return Err(UsageError("--x-min must be below --x-max".into()).into());
    }
    let domain = match args.domain {
        DomainArg::Half => Domain::HalfLine,
        DomainArg::Whole => Domain::WholeLine,
    };
    let wf = assemble(series_for_level(reduced.delta(), args.level)?, &params, domain)?;
    let step = (x_max - x_min) / (args.points - 1) as f64;
    let samples: Vec<Sample> = (0..args.points)
        .map(|i| {
            let x = x_min + step * i as f64;
            Sample { x, psi: wf.eval(x) }
        })
        .collect();
    let mut out = sink(&args.common.out)?;
    match args.output {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &samples)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => write_csv(&mut out, &samples)?,
        OutputFormat::Pretty => {
            for s in &samples {
                writeln!(out, "{:>12.6}  {:>24.16e}", s.x, s.psi)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}
