//! Morse eigenfunctions from the terminating series solution.
//!
//! At an eigenvalue the polynomial part `f_n(u)` is a finite even series of
//! degree `2n`, and
//!
//! ```text
//! Ψ_n(x) = N u^{ϵ_n + 1/2} e^{-2Δu²} f_n(u),    u = e^{-β(x - x_e)/2}.
//! ```
//!
//! Wavefunctions are evaluated in `f64` with the prefactor handled in the log
//! domain; the series coefficients stay in the caller's scalar type.

use crate::error::EigenfunctionError;
use crate::morse::{epsilon_to_energy, MorseParameters};
use crate::quadrature::{integrate_half_line, integrate_whole_line};
use crate::scalar::{Rational, Scalar};

/// Terminating series `f_n(u) = Σ c_m u^m`, `c_0 = 1`, nonzero only for even `m ≤ 2n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution<S> {
    pub n: usize,
    /// `c_0, c_1, …, c_{2n}` (odd entries are zero).
    pub coefficients: Vec<S>,
    pub epsilon: S,
    pub delta: S,
}

impl<S: Scalar> SeriesSolution<S> {
    pub fn eval(&self, u: &S) -> S {
        let mut acc = u.zero_like();
        for c in self.coefficients.iter().rev() {
            acc = acc.mul(u).add(c);
        }
        acc
    }
}

/// Numerator `8Δm + 12Δ + 8Δϵ − 32Δ²` of the series recurrence.
pub fn recurrence_numerator<S: Scalar>(m: usize, epsilon: &S, delta: &S) -> S {
    let ctx = delta.context();
    let linear = S::from_i64(8 * m as i64 + 12, ctx).add(&epsilon.mul_int(8));
    delta.mul(&linear).sub(&delta.mul(delta).mul_int(32))
}

/// Series solution of `f'' = (8Δu − (2ϵ+2)/u) f' + (12Δ + 8Δϵ − 32Δ²) f` for level `n`.
///
/// `c_{m+2} = c_m (8Δm + 12Δ + 8Δϵ − 32Δ²) / ((m+2)(m+2ϵ+3))`; the series must stop
/// exactly at degree `2n`. In numeric mode "stop" means the numerator is negligible
/// against its own terms.
pub fn series_solve<S: Scalar>(epsilon: &S, delta: &S, n: usize) -> Result<SeriesSolution<S>, EigenfunctionError> {
    let ctx = delta.context();
    let mut coefficients = vec![S::from_i64(1, ctx)];
    for m in (0..=2 * n).step_by(2) {
        let num = recurrence_numerator(m, epsilon, delta);
        let scale = delta
            .mul(&S::from_i64(8 * m as i64 + 12, ctx).add(&epsilon.mul_int(8).abs()))
            .abs()
            .add(&delta.mul(delta).mul_int(32));
        let terminates = num.is_negligible(&scale);
        if m == 2 * n {
            if !terminates {
                return Err(EigenfunctionError::NonTerminating { n, degree: 2 * n + 2 });
            }
            break;
        }
        if terminates {
            // stops early: this ϵ belongs to a lower level
            return Err(EigenfunctionError::NonTerminating { n, degree: m });
        }
        let den = S::from_i64(m as i64 + 3, ctx).add(&epsilon.mul_int(2)).mul_int(m as i64 + 2);
        let last = coefficients.last().expect("c_0 present").clone();
        let next = last.mul(&num).div(&den).ok_or(EigenfunctionError::SingularRecurrence { m })?;
        coefficients.push(last.zero_like());
        coefficients.push(next);
    }
    Ok(SeriesSolution { n, coefficients, epsilon: epsilon.clone(), delta: delta.clone() })
}

/// Integration range used for normalisation and overlaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domain {
    /// Physical separations `x ∈ [0, ∞)`.
    #[default]
    HalfLine,
    /// The idealised problem on `(−∞, ∞)`.
    WholeLine,
}

const QUAD_REL_TOL: f64 = 1e-12;

/// A normalised Morse eigenfunction `Ψ_n(x)`, `x` in Å.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction<S> {
    pub series: SeriesSolution<S>,
    pub beta: f64,
    pub x_e: f64,
    /// `N`, so that `∫ Ψ² dx = 1` over `domain`.
    pub norm_constant: f64,
    pub domain: Domain,
    /// `f_n` as a polynomial in `w = u² − 1`; expanding about the potential
    /// minimum avoids the cancellation of the plain power basis.
    shifted: Vec<f64>,
    exponent: f64,
    delta: f64,
}

/// Attach the coordinate map of `p` to a series and normalise. `Δ` comes from the series;
/// only `β` and `x_e` are read from `p`.
pub fn assemble<S: Scalar>(
    series: SeriesSolution<S>,
    p: &MorseParameters,
    domain: Domain,
) -> Result<Wavefunction<S>, EigenfunctionError> {
    let shifted = shift_to_minimum(&series.coefficients);
    let exponent = series.epsilon.to_f64() + 0.5;
    let delta = series.delta.to_f64();
    let mut wf =
        Wavefunction { series, beta: p.beta, x_e: p.x_e, norm_constant: 1.0, domain, shifted, exponent, delta };
    let norm = integrate_domain(|x| wf.eval(x).powi(2), domain)?;
    wf.norm_constant = 1.0 / norm.sqrt();
    Ok(wf)
}

/// Coefficients of `Σ c_{2j} (1 + w)^j` in powers of `w`, computed exactly.
fn shift_to_minimum<S: Scalar>(coefficients: &[S]) -> Vec<f64> {
    let mut b: Vec<Rational> = coefficients.iter().step_by(2).map(Scalar::to_rational).collect();
    let len = b.len();
    for i in 0..len {
        for j in (i..len - 1).rev() {
            let next = b[j + 1].clone();
            b[j] += next;
        }
    }
    b.iter().map(|c| c.to_f64().value()).collect()
}

fn integrate_domain(f: impl Fn(f64) -> f64, domain: Domain) -> Result<f64, EigenfunctionError> {
    let r = match domain {
        Domain::HalfLine => integrate_half_line(f, 0.0, QUAD_REL_TOL)?,
        Domain::WholeLine => integrate_whole_line(f, QUAD_REL_TOL)?,
    };
    Ok(r.value)
}

impl<S: Scalar> Wavefunction<S> {
    pub fn n(&self) -> usize {
        self.series.n
    }

    /// `ε_n` in units of ħω₀.
    pub fn energy(&self) -> f64 {
        epsilon_to_energy(&self.series.epsilon, &self.series.delta).to_f64()
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `Ψ_n(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        let log_u = -0.5 * self.beta * (x - self.x_e);
        let w = (2.0 * log_u).exp_m1();
        let log_prefactor = self.exponent * log_u - 2.0 * self.delta * (1.0 + w);
        if log_prefactor < -745.0 {
            return 0.0;
        }
        let f = self.shifted.iter().rev().fold(0.0, |acc, c| acc * w + c);
        self.norm_constant * log_prefactor.exp() * f
    }

    /// Reduced potential `Δ(e^{-2βy} − 2e^{-βy})` at `x`, in units of ħω₀.
    pub fn potential(&self, x: f64) -> f64 {
        let e = (-self.beta * (x - self.x_e)).exp();
        self.delta * (e * e - 2.0 * e)
    }

    /// `(r, s)`: the Schrödinger residual `−Ψ''/(4β²Δ) + (V − ε)Ψ` at `x` (ħω₀ units,
    /// `Ψ''` from a 7-point stencil with step `h`) and the local scale `max(|εΨ|, |VΨ|)`.
    pub fn residual(&self, x: f64, h: f64) -> (f64, f64) {
        const W: [f64; 4] = [-49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0];
        let psi = self.eval(x);
        let mut d2 = W[0] * psi;
        for (j, w) in W.iter().enumerate().skip(1) {
            let dx = j as f64 * h;
            d2 += w * (self.eval(x - dx) + self.eval(x + dx));
        }
        d2 /= h * h;
        let e = self.energy();
        let v = self.potential(x);
        let kinetic = -d2 / (4.0 * self.beta * self.beta * self.delta);
        let residual = kinetic + (v - e) * psi;
        (residual, (e * psi).abs().max((v * psi).abs()))
    }

    /// Sign changes of `Ψ` on `points` equally spaced samples of `[x_min, x_max]`.
    pub fn count_nodes(&self, x_min: f64, x_max: f64, points: usize) -> usize {
        let step = (x_max - x_min) / (points - 1) as f64;
        let mut last = 0.0f64;
        let mut count = 0;
        for i in 0..points {
            let v = self.eval(x_min + step * i as f64);
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// `x` and `Ψ(x)` on `points` equally spaced samples, one pair per line.
    pub fn table(&self, x_min: f64, x_max: f64, points: usize) -> String {
        let step = if points > 1 { (x_max - x_min) / (points - 1) as f64 } else { 0.0 };
        let mut out = String::new();
        for i in 0..points {
            let x = x_min + step * i as f64;
            out.push_str(&format!("{x:.10} {:.16e}\n", self.eval(x)));
        }
        out
    }
}

/// `∫ Ψ_a Ψ_b dx` over `domain` by adaptive quadrature (relative tolerance 1e-12).
pub fn inner_product<S: Scalar, T: Scalar>(
    a: &Wavefunction<S>,
    b: &Wavefunction<T>,
    domain: Domain,
) -> Result<f64, EigenfunctionError> {
    let same = a.beta == b.beta && a.x_e == b.x_e && a.series.delta.to_rational() == b.series.delta.to_rational();
    if !same {
        return Err(EigenfunctionError::Incompatible);
    }
    integrate_domain(|x| a.eval(x) * b.eval(x), domain)
}

/// Exact-mode convenience: the series for level `n` at `ϵ_n = (8Δ − 4n − 3)/2`.
pub fn series_for_level(delta: &Rational, n: usize) -> Result<SeriesSolution<Rational>, EigenfunctionError> {
    series_solve(&crate::morse::epsilon_closed_form(delta, n), delta, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::epsilon_closed_form;
    use crate::scalar::ratio;

    #[test]
    fn ground_state_series_is_constant() {
        let d = ratio(34997, 1000);
        let s = series_for_level(&d, 0).unwrap();
        assert_eq!(s.coefficients, vec![Rational::ONE]);
    }

    #[test]
    fn first_excited_state_at_unit_delta() {
        // ϵ₁ = 1/2: c₂ = −16/(2·4) = −2, so f₁ = 1 − 2u²
        let s = series_for_level(&Rational::ONE, 1).unwrap();
        assert_eq!(s.epsilon, ratio(1, 2));
        assert_eq!(s.coefficients, vec![Rational::ONE, Rational::ZERO, Rational::from(-2)]);
    }

    #[test]
    fn perturbed_epsilon_does_not_terminate() {
        let eps = ratio(1, 2) + ratio(1, 1_000_000);
        assert_eq!(series_solve(&eps, &Rational::ONE, 1), Err(EigenfunctionError::NonTerminating { n: 1, degree: 4 }));
        // the ground-state ϵ terminates too early for n = 1
        let eps0 = epsilon_closed_form(&Rational::ONE, 0);
        assert!(series_solve(&eps0, &Rational::ONE, 1).is_err());
    }

    #[test]
    fn numerator_vanishes_exactly_at_eigenvalues() {
        let d = ratio(34997, 1000);
        for n in 0..=10 {
            let eps = epsilon_closed_form(&d, n);
            assert!(recurrence_numerator(2 * n, &eps, &d).is_zero());
            assert!(!recurrence_numerator(2 * n, &(eps + ratio(1, 7)), &d).is_zero());
        }
    }

    #[test]
    fn ground_state_peaks_near_equilibrium() {
        let p = MorseParameters::lithium_dimer();
        let wf = assemble(series_for_level(&ratio(34997, 1000), 0).unwrap(), &p, Domain::HalfLine).unwrap();
        let (mut best_x, mut best) = (0.0, 0.0f64);
        for i in 0..=4000 {
            let x = p.x_e - 1.0 + i as f64 * 0.0005;
            let v = wf.eval(x).abs();
            if v > best {
                best = v;
                best_x = x;
            }
        }
        assert!((best_x - p.x_e).abs() < 0.05, "peak at {best_x}");
        assert!(wf.eval(p.x_e + 30.0).abs() < 1e-30);
        assert_eq!(wf.eval(p.x_e - 30.0), 0.0);
    }
}
