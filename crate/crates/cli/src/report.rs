//! Level records and their CSV, JSON and plain-text renderings.

use std::io::Write;

use aim_core::format::{format_significant, fraction_text};
use aim_core::{
    build_aim_problem, closed_form_spectrum, eigenvalues_symbolic, energy_to_wavenumbers, epsilon_to_energy,
    oscillator_problem, AimProblem, BigReal, EigenvalueResult, Rational, Scalar, SpectrumError,
};
use serde::{Deserialize, Serialize};

use crate::settings::{ModeArg, OutputFormat, Problem, RunConfig};

/// Significant digits for every printed value.
pub const DIGITS: usize = 19;

/// One level, as printed. The CSV header is the field list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRow {
    pub n: usize,
    pub epsilon: String,
    pub eps_hw0: String,
    #[serde(rename = "E_cm1")]
    pub e_cm1: String,
    pub closed_form: String,
    pub abs_diff: String,
    pub k_converged: usize,
}

/// JSON record: the CSV fields plus exact fractions in exact mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonLevel {
    #[serde(flatten)]
    pub row: LevelRow,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_fraction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_hw0_fraction: Option<String>,
}

/// A converged level with exact values kept for comparisons.
#[derive(Debug, Clone)]
pub struct Level {
    pub n: usize,
    pub epsilon: Rational,
    pub energy: Rational,
    pub closed_form: Rational,
    pub e_cm1: Option<Rational>,
    pub k_converged: usize,
}

#[derive(Debug, Clone)]
pub struct Solved {
    pub levels: Vec<Level>,
    pub exact: bool,
    /// Why fewer than the requested levels came back.
    pub shortfall: Option<String>,
}

/// Converged levels, with the reason when there are fewer than requested.
type Collected<S> = (Vec<EigenvalueResult<S>>, Option<String>);

fn collect<S: Scalar>(problem: &AimProblem<S>, cfg: &RunConfig) -> Result<Collected<S>, SpectrumError<S>> {
    match eigenvalues_symbolic(problem, cfg.levels, cfg.k_max, &cfg.tol) {
        Ok(levels) => Ok((levels, None)),
        Err(e @ (SpectrumError::NotConverged { .. } | SpectrumError::LevelCount { .. })) => {
            let msg = e.to_string();
            match e {
                SpectrumError::NotConverged { partial, .. } | SpectrumError::LevelCount { partial, .. } => {
                    Ok((partial, Some(msg)))
                }
                SpectrumError::Aim(_) => unreachable!(),
            }
        }
        Err(e) => Err(e),
    }
}

fn run_with<S: Scalar>(cfg: &RunConfig, ctx: S::Context) -> anyhow::Result<Solved> {
    let base = match &cfg.problem {
        Problem::Morse { reduced } => build_aim_problem::<S>(reduced, ctx),
        Problem::Oscillator => oscillator_problem::<S>(ctx),
    };
    let problem = base.with_u_star(S::from_rational(&cfg.u_star, ctx))?;
    let (results, shortfall) = collect(&problem, cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut levels = Vec::with_capacity(results.len());
    for (n, r) in results.into_iter().enumerate() {
        let epsilon = r.epsilon.to_rational();
        let level = match &cfg.problem {
            Problem::Morse { reduced } => {
                let energy = epsilon_to_energy(&epsilon, reduced.delta());
                let e_cm1 = reduced.hbar_omega0_cm1().map(|_| energy_to_wavenumbers(&energy, reduced)).transpose()?;
                Level {
                    n,
                    closed_form: closed_form_spectrum(reduced.delta(), n)?,
                    energy,
                    epsilon,
                    e_cm1,
                    k_converged: r.k_converged,
                }
            }
            Problem::Oscillator => Level {
                n,
                energy: epsilon.clone(),
                epsilon,
                closed_form: Rational::from(2 * n as i64 + 1),
                e_cm1: None,
                k_converged: r.k_converged,
            },
        };
        levels.push(level);
    }
    Ok(Solved { levels, exact: S::MODE == aim_core::Mode::Exact, shortfall })
}

pub fn solve(cfg: &RunConfig) -> anyhow::Result<Solved> {
    let work = || match cfg.mode {
        ModeArg::Exact => run_with::<Rational>(cfg, ()),
        ModeArg::Numeric => run_with::<BigReal>(cfg, cfg.precision),
    };
    match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w).build()?.install(work),
        None => work(),
    }
}

impl Level {
    pub fn row(&self) -> LevelRow {
        let abs_diff = Scalar::abs(&(&self.energy - &self.closed_form));
        LevelRow {
            n: self.n,
            epsilon: format_significant(&self.epsilon, DIGITS),
            eps_hw0: format_significant(&self.energy, DIGITS),
            e_cm1: self.e_cm1.as_ref().map(|e| format_significant(e, DIGITS)).unwrap_or_default(),
            closed_form: format_significant(&self.closed_form, DIGITS),
            abs_diff: format_significant(&abs_diff, DIGITS),
            k_converged: self.k_converged,
        }
    }

    fn json(&self, exact: bool) -> JsonLevel {
        JsonLevel {
            row: self.row(),
            epsilon_fraction: exact.then(|| fraction_text(&self.epsilon)),
            eps_hw0_fraction: exact.then(|| fraction_text(&self.energy)),
        }
    }
}

pub fn write_levels(out: &mut dyn Write, solved: &Solved, format: OutputFormat) -> anyhow::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(out, solved.levels.iter().map(Level::row)),
        OutputFormat::Json => {
            let records: Vec<JsonLevel> = solved.levels.iter().map(|l| l.json(solved.exact)).collect();
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
            Ok(())
        }
        OutputFormat::Pretty => {
            writeln!(
                out,
                "{:>3}  {:>24}  {:>24}  {:>24}  {:>24}  {:>3}",
                "n", "ϵ_n", "ε_n (ħω₀)", "E_n (cm⁻¹)", "|ε − closed form|", "k"
            )?;
            for l in &solved.levels {
                let r = l.row();
                writeln!(
                    out,
                    "{:>3}  {:>24}  {:>24}  {:>24}  {:>24}  {:>3}",
                    r.n, r.epsilon, r.eps_hw0, r.e_cm1, r.abs_diff, r.k_converged
                )?;
            }
            Ok(())
        }
    }
}

pub fn write_csv<T: Serialize>(out: &mut dyn Write, rows: impl IntoIterator<Item = T>) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// One level of a comparison against a reference column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub n: usize,
    pub computed: String,
    pub reference: String,
    pub abs_diff: String,
    pub rel_diff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareSummary {
    pub column: String,
    pub levels: usize,
    pub max_abs_diff: String,
    pub max_rel_diff: String,
    pub tol: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub rows: Vec<CompareRow>,
    pub summary: CompareSummary,
}

pub fn compare(levels: &[Level], reference: &[Rational], column: &str, tol: &Rational) -> Comparison {
    let mut max_abs = Rational::ZERO;
    let mut max_rel = Rational::ZERO;
    let rows = levels
        .iter()
        .zip(reference)
        .map(|(l, r)| {
            let abs = Scalar::abs(&(&l.energy - r));
            let rel = if r == &Rational::ZERO { abs.clone() } else { &abs / Scalar::abs(r) };
            if abs > max_abs {
                max_abs = abs.clone();
            }
            if rel > max_rel {
                max_rel = rel.clone();
            }
            CompareRow {
                n: l.n,
                computed: format_significant(&l.energy, DIGITS),
                reference: format_significant(r, DIGITS),
                abs_diff: format_significant(&abs, DIGITS),
                rel_diff: format_significant(&rel, DIGITS),
            }
        })
        .collect();
    let summary = CompareSummary {
        column: column.to_string(),
        levels: levels.len().min(reference.len()),
        max_abs_diff: format_significant(&max_abs, DIGITS),
        max_rel_diff: format_significant(&max_rel, DIGITS),
        tol: format_significant(tol, DIGITS),
        pass: &max_rel <= tol,
    };
    Comparison { rows, summary }
}

pub fn write_comparison(out: &mut dyn Write, c: &Comparison, format: OutputFormat) -> anyhow::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(out, &c.rows),
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, c)?;
            writeln!(out)?;
            Ok(())
        }
        OutputFormat::Pretty => {
            writeln!(
                out,
                "{:>3}  {:>24}  {:>24}  {:>24}  {:>24}",
                "n", "computed", "reference", "abs diff", "rel diff"
            )?;
            for r in &c.rows {
                writeln!(
                    out,
                    "{:>3}  {:>24}  {:>24}  {:>24}  {:>24}",
                    r.n, r.computed, r.reference, r.abs_diff, r.rel_diff
                )?;
            }
            Ok(())
        }
    }
}
