use std::fmt::Debug;

use thiserror::Error;

use crate::aim::EigenvalueResult;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("pole: u = 0 substituted into a term with exponent {exponent}")]
    Pole { exponent: i32 },
    #[error("degenerate input: the polynomial is identically zero")]
    DegenerateInput,
    #[error("invalid interval: lower bound must be below upper bound")]
    InvalidInterval,
    #[error("tolerance must be strictly positive")]
    InvalidTolerance,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AimError {
    #[error("λ₀ is identically zero; the iteration is undefined")]
    ZeroLambda0,
    #[error("evaluation point u* must be strictly positive")]
    NonPositiveEvaluationPoint,
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("no sign change of δ on the bracket [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },
    #[error("root not stable across iterations {k_prev} and {k}: gap {gap:e}")]
    Unstable { k: usize, k_prev: usize, gap: f64 },
    #[error("bracketing root finder did not reach tolerance in {iterations} steps")]
    RootFinder { iterations: usize },
    #[error("λ_k vanishes at u = {u}")]
    Pole { u: f64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failure of a multi-level spectrum solve. Carries whatever levels did converge.
#[derive(Debug, Clone, Error)]
pub enum SpectrumError<S: Debug> {
    #[error("only {} of {requested} levels stabilised within k_max = {k_max}", partial.len())]
    NotConverged { requested: usize, k_max: usize, partial: Vec<EigenvalueResult<S>> },
    #[error("δ has only {found} real roots in the search window, {requested} levels requested")]
    LevelCount { requested: usize, found: usize, partial: Vec<EigenvalueResult<S>> },
    #[error(transparent)]
    Aim(#[from] AimError),
}

impl<S: Debug> SpectrumError<S> {
    /// Levels that converged before the failure.
    pub fn partial(&self) -> &[EigenvalueResult<S>] {
        match self {
            SpectrumError::NotConverged { partial, .. } | SpectrumError::LevelCount { partial, .. } => partial,
            SpectrumError::Aim(_) => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MorseError {
    #[error("Morse parameter `{name}` must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("Δ = {delta} admits no bound state (need Δ > 3/8)")]
    NoBoundStates { delta: String },
    #[error("level {n} is not bound: Δ = {delta} supports {count} levels")]
    LevelOutOfRange { n: usize, count: usize, delta: String },
    #[error("ħω₀ is unknown for a Δ-only model; energies in cm⁻¹ need physical parameters")]
    UnitsUnavailable,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenfunctionError {
    #[error("series for level {n} does not terminate at degree {degree}: ϵ is not an eigenvalue")]
    NonTerminating { n: usize, degree: usize },
    #[error("recurrence denominator vanishes at m = {m}")]
    SingularRecurrence { m: usize },
    #[error("wavefunctions belong to different potentials")]
    Incompatible,
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("adaptive quadrature did not converge: estimate {estimate:e}, error {error:e}")]
pub struct QuadratureError {
    pub estimate: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("grid needs at least 100 points, got {0}")]
    TooFewPoints(usize),
    #[error("grid [{x_min}, {x_max}] must enclose the equilibrium separation {x_e}")]
    GridExcludesMinimum { x_min: f64, x_max: f64, x_e: f64 },
    #[error("requested {requested} levels but the grid has only {available} unknowns")]
    TooManyLevels { requested: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReferenceError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("reference table has no column `{0}`")]
    MissingColumn(String),
    #[error("reference table is missing level n = {n} (line {line})")]
    MissingRow { n: usize, line: usize },
}
