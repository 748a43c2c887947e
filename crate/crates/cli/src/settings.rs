//! Flags and config-file keys, and their resolution into a validated run.

use std::fmt;
use std::path::{Path, PathBuf};

use aim_core::{bound_state_count, parse_rational, reduce_units, MorseParameters, Precision, Rational, ReducedMorse};
use clap::{Args, ValueEnum};
use serde::Deserialize;

/// A configuration problem; reported with exit code 64.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Morse,
    Oscillator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

/// Options shared by `solve` and `compare`. Every field may also come from
/// the `--config` file; flags win.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[arg(long, value_enum)]
    pub problem: Option<ProblemKind>,
    /// Well depth Δ = D_e/ħω₀ as exact text, e.g. `34997/1000` or `34.997`.
    #[arg(long)]
    pub delta: Option<String>,
    /// `li2`, or `De_cm1,beta_per_angstrom,xe_angstrom,mu_amu`.
    #[arg(long)]
    pub molecule: Option<String>,
    #[arg(long)]
    pub levels: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Decimal digits for numeric mode.
    #[arg(long)]
    pub precision: Option<u32>,
    #[arg(long = "kmax")]
    #[serde(alias = "k_max")]
    pub kmax: Option<usize>,
    #[arg(long = "u-star")]
    pub u_star: Option<String>,
    /// Root tolerance for `solve`; relative pass tolerance for `compare`.
    #[arg(long)]
    pub tol: Option<String>,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// Reference table CSV for `compare` (default: the bundled ⁷Li₂ table).
    #[arg(long)]
    pub reference: Option<PathBuf>,
    /// Reference column for `compare`.
    #[arg(long)]
    pub column: Option<String>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident, $($f:ident),*) => {
        $( if $dst.$f.is_none() { $dst.$f = $src.$f; } )*
    };
}

impl Settings {
    /// Fill unset fields from a TOML-style `key = value` file.
    pub fn with_file(mut self, path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        let file: Settings =
            toml::from_str(&text).map_err(|e| UsageError(format!("config {}: {e}", path.display())))?;
        overlay!(
            self, file, problem, delta, molecule, levels, mode, precision, kmax, u_star, tol, output, reference,
            column, workers
        );
        Ok(self)
    }

    pub fn resolve(&self, default_tol: &str) -> Result<RunConfig, UsageError> {
        let kind = self.problem.unwrap_or(ProblemKind::Morse);
        let problem = match (kind, &self.delta, &self.molecule) {
            (ProblemKind::Morse, Some(_), Some(_)) => return usage("give either --delta or --molecule, not both"),
            (ProblemKind::Morse, None, None) => return usage("the Morse problem needs --delta or --molecule"),
            (ProblemKind::Morse, Some(d), None) => {
                let delta = parse_exact("delta", d)?;
                Problem::Morse { reduced: ReducedMorse::from_delta(delta).map_err(|e| UsageError(e.to_string()))? }
            }
            (ProblemKind::Morse, None, Some(m)) => {
                let params = parse_molecule(m)?;
                let reduced = reduce_units(&params).map_err(|e| UsageError(e.to_string()))?;
                Problem::Morse { reduced }
            }
            (ProblemKind::Oscillator, None, None) => Problem::Oscillator,
            (ProblemKind::Oscillator, _, _) => return usage("--delta and --molecule do not apply to the oscillator"),
        };
        let levels = match self.levels {
            Some(0) => return usage("--levels must be at least 1"),
            Some(n) => n,
            None => return usage("--levels is required"),
        };
        if let Problem::Morse { reduced, .. } = &problem {
            let count = bound_state_count(reduced.delta()).map_err(|e| UsageError(e.to_string()))?;
            if levels > count {
                return usage(format!(
                    "Δ = {} supports only {count} bound levels",
                    aim_core::format::format_significant(reduced.delta(), 12)
                ));
            }
        }
        let k_max = self.kmax.unwrap_or_else(|| (2 * levels).max(levels + 2));
        if k_max < levels + 2 {
            return usage(format!("--kmax must be at least levels + 2 = {}", levels + 2));
        }
        let u_star = parse_exact("u-star", self.u_star.as_deref().unwrap_or("1"))?;
        if u_star <= Rational::ZERO {
            return usage("--u-star must be positive");
        }
        let tol = parse_exact("tol", self.tol.as_deref().unwrap_or(default_tol))?;
        if tol <= Rational::ZERO {
            return usage("--tol must be positive");
        }
        if self.workers == Some(0) {
            return usage("--workers must be at least 1");
        }
        Ok(RunConfig {
            problem,
            levels,
            mode: self.mode.unwrap_or(ModeArg::Exact),
            precision: Precision::digits(self.precision.unwrap_or(DEFAULT_NUMERIC_DIGITS)),
            k_max,
            u_star,
            tol,
            output: self.output.unwrap_or(OutputFormat::Csv),
            workers: self.workers,
        })
    }
}

/// Numeric mode works on δ polynomials whose coefficients cancel heavily;
/// 100 digits carries all 25 ⁷Li₂ levels.
pub const DEFAULT_NUMERIC_DIGITS: u32 = 100;

#[derive(Debug, Clone)]
pub enum Problem {
    Morse { reduced: ReducedMorse },
    Oscillator,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: Problem,
    pub levels: usize,
    pub mode: ModeArg,
    pub precision: Precision,
    pub k_max: usize,
    pub u_star: Rational,
    pub tol: Rational,
    pub output: OutputFormat,
    pub workers: Option<usize>,
}

pub fn parse_exact(name: &str, text: &str) -> Result<Rational, UsageError> {
    parse_rational(text).map_err(|_| UsageError(format!("--{name}: `{text}` is not a number")))
}

pub fn parse_molecule(text: &str) -> Result<MorseParameters, UsageError> {
    if text.eq_ignore_ascii_case("li2") {
        return Ok(MorseParameters::lithium_dimer());
    }
    let fields: Vec<f64> = text
        .split(',')
        .map(|f| f.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| UsageError(format!("--molecule: `{text}` is not `De,beta,xe,mu`")))?;
    let [de, beta, xe, mu] = fields[..] else {
        return usage(format!("--molecule needs four values, got {}", fields.len()));
    };
    MorseParameters::new(de, beta, xe, mu).map_err(|e| UsageError(e.to_string()))
}
