//! Independent cross-checks for the AIM engine.
//!
//! [`fd_spectrum`] diagonalises a three-point finite-difference Hamiltonian
//! in double precision; it validates correctness, not digits.
//! [`oscillator_problem`] is a non-Morse AIM instance with a known spectrum.

use crate::aim::{AimProblem, LevelOrdering};
use crate::error::OracleError;
use crate::morse::{reduce_units, MorseParameters, ReducedMorse};
use crate::poly::{EpsPoly, LaurentPoly};
use crate::scalar::{Rational, Scalar};

/// Uniform grid `x_min = x_0 < … < x_{N−1} = x_max` (Å), endpoints held at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub num_points: usize,
}

impl GridSpec {
    pub const MIN_POINTS: usize = 100;

    pub fn new(x_min: f64, x_max: f64, num_points: usize) -> Result<Self, OracleError> {
        if num_points < Self::MIN_POINTS {
            return Err(OracleError::TooFewPoints(num_points));
        }
        Ok(GridSpec { x_min, x_max, num_points })
    }

    /// Same range with the spacing halved.
    pub fn refined(&self) -> Self {
        GridSpec { num_points: 2 * self.num_points - 1, ..*self }
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.num_points - 1) as f64
    }
}

/// Reduced Morse Hamiltonian `−Ψ''/(4β²Δ) + Δ(e^{−2βy} − 2e^{−βy})Ψ`, `y = x − x_e`, in ħω₀ units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleModel {
    pub delta: f64,
    pub beta: f64,
    pub x_e: f64,
}

impl OracleModel {
    pub fn from_parameters(p: &MorseParameters) -> Result<Self, crate::error::MorseError> {
        let r = reduce_units(p)?;
        Ok(Self::from_reduced(&r, p.beta, p.x_e))
    }

    pub fn from_reduced(r: &ReducedMorse, beta: f64, x_e: f64) -> Self {
        OracleModel { delta: r.delta().to_f64().value(), beta, x_e }
    }

    pub fn potential(&self, x: f64) -> f64 {
        let e = (-self.beta * (x - self.x_e)).exp();
        self.delta * (e * e - 2.0 * e)
    }

    /// Coefficient of `−d²/dx²`.
    pub fn kinetic(&self) -> f64 {
        1.0 / (4.0 * self.beta * self.beta * self.delta)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FdSpectrum {
    /// Lowest eigenvalues, ascending.
    pub levels: Vec<f64>,
    /// Set when the highest level is poorly resolved: it reaches the boundary
    /// potential, or its local wavenumber times the spacing exceeds 0.5.
    pub resolution_warning: bool,
}

/// Lowest `n_levels` eigenvalues of `−kinetic·d²/dx² + V` on `grid` with Dirichlet ends.
pub fn fd_eigenvalues(
    potential: impl Fn(f64) -> f64,
    kinetic: f64,
    grid: &GridSpec,
    n_levels: usize,
) -> Result<Vec<f64>, OracleError> {
    let h = grid.spacing();
    let unknowns = grid.num_points - 2;
    if n_levels > unknowns {
        return Err(OracleError::TooManyLevels { requested: n_levels, available: unknowns });
    }
    let off = -kinetic / (h * h);
    let diag: Vec<f64> =
        (1..=unknowns).map(|i| 2.0 * kinetic / (h * h) + potential(grid.x_min + h * i as f64)).collect();
    Ok(tridiagonal_lowest(&diag, off, n_levels))
}

/// Number of eigenvalues below `x` of the symmetric tridiagonal matrix with
/// diagonal `diag` and constant off-diagonal `off` (Sturm sequence count).
fn count_below(diag: &[f64], off: f64, x: f64) -> usize {
    let off2 = off * off;
    let mut count = 0;
    let mut q = 1.0;
    for (i, d) in diag.iter().enumerate() {
        q = if i == 0 { d - x } else { d - x - off2 / q };
        if q == 0.0 {
            q = f64::EPSILON * (d.abs() + off.abs());
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn tridiagonal_lowest(diag: &[f64], off: f64, n_levels: usize) -> Vec<f64> {
    // Gershgorin bounds
    let lo = diag.iter().fold(f64::INFINITY, |m, d| m.min(d - 2.0 * off.abs()));
    let hi = diag.iter().fold(f64::NEG_INFINITY, |m, d| m.max(d + 2.0 * off.abs()));
    (0..n_levels)
        .map(|j| {
            let (mut a, mut b) = (lo, hi);
            while b - a > 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(1e-300) {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if count_below(diag, off, mid) > j {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Lowest `n_levels` finite-difference energies (ħω₀ units) of the reduced Morse problem.
pub fn fd_spectrum(model: &OracleModel, grid: &GridSpec, n_levels: usize) -> Result<FdSpectrum, OracleError> {
    if !(grid.x_min < model.x_e && model.x_e < grid.x_max) {
        return Err(OracleError::GridExcludesMinimum { x_min: grid.x_min, x_max: grid.x_max, x_e: model.x_e });
    }
    let levels = fd_eigenvalues(|x| model.potential(x), model.kinetic(), grid, n_levels)?;
    let resolution_warning = levels.last().is_some_and(|&top| {
        let wall = model.potential(grid.x_min).min(model.potential(grid.x_max));
        let wavenumber = ((top + model.delta) / model.kinetic()).max(0.0).sqrt();
        top >= wall || wavenumber * grid.spacing() > 0.5
    });
    Ok(FdSpectrum { levels, resolution_warning })
}

/// `ψ'' = (u² − E)ψ` written as `f'' = 2u f' + (1 − E) f` through `ψ = e^{−u²/2} f`.
///
/// `λ₀` vanishes at `u = 0`, so the evaluation point is `u* = 1`. Levels are
/// numbered from the smallest `E`, searched in `[0, 1000]`.
pub fn oscillator_problem<S: Scalar>(ctx: S::Context) -> AimProblem<S> {
    let s = |v: i64| S::from_i64(v, ctx);
    let lambda0 = LaurentPoly::term(1, EpsPoly::constant(s(2)));
    let s0 = LaurentPoly::term(0, EpsPoly::linear(s(1), s(-1)));
    AimProblem::new(lambda0, s0, s(1), "oscillator")
        .and_then(|p| p.with_window(Rational::ZERO, Rational::from(1000)))
        .expect("λ₀ = 2u is nonzero")
        .with_ordering(LevelOrdering::Ascending)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aim::{delta_at, eigenvalues_symbolic};
    use crate::scalar::ratio;

    #[test]
    fn particle_in_a_box() {
        let grid = GridSpec::new(0.0, 1.0, 2001).unwrap();
        let levels = fd_eigenvalues(|_| 0.0, 1.0, &grid, 4).unwrap();
        for (k, e) in levels.iter().enumerate() {
            let exact = ((k + 1) as f64 * std::f64::consts::PI).powi(2);
            assert!((e - exact).abs() / exact < 1e-3, "level {k}: {e} vs {exact}");
        }
    }

    #[test]
    fn grid_validation() {
        assert_eq!(GridSpec::new(0.0, 1.0, 50), Err(OracleError::TooFewPoints(50)));
        let model = OracleModel { delta: 34.997, beta: 0.616, x_e: 3.10821 };
        let grid = GridSpec::new(4.0, 10.0, 200).unwrap();
        assert!(matches!(fd_spectrum(&model, &grid, 2), Err(OracleError::GridExcludesMinimum { .. })));
        let grid = GridSpec::new(1.0, 10.0, 100).unwrap();
        assert!(matches!(fd_spectrum(&model, &grid, 99), Err(OracleError::TooManyLevels { .. })));
        assert!(fd_spectrum(&model, &grid, 90).unwrap().resolution_warning);
    }

    #[test]
    fn oscillator_second_iteration() {
        let p = oscillator_problem::<Rational>(());
        let d2 = delta_at(&p, 2).unwrap();
        assert!(d2.eval(&Rational::ONE).is_zero());
        assert!(d2.eval(&Rational::from(3)).is_zero());
    }

    #[test]
    fn oscillator_spectrum() {
        let p = oscillator_problem::<Rational>(());
        let levels = eigenvalues_symbolic(&p, 4, 10, &ratio(1, 1_000_000)).unwrap();
        let values: Vec<_> = levels.into_iter().map(|l| l.epsilon).collect();
        assert_eq!(values, [1, 3, 5, 7].map(Rational::from).to_vec());
    }
}
