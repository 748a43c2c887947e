//! The Morse oscillator `V(x) = D_e (e^{-2β(x-x_e)} − 2 e^{-β(x-x_e)})`.
//!
//! With `u = e^{-β(x-x_e)/2}` and energies in units of `ħω₀`, the bound
//! states depend on the single depth parameter `Δ = D_e/(ħω₀)`. The AIM form
//! used here is
//!
//! ```text
//! λ₀ = 8Δu − (2ϵ + 2)/u,    s₀ = 12Δ + 8Δϵ − 32Δ²
//! ```
//!
//! with energy `ε = −(ϵ + ½)²/(16Δ)`.

use dashu_int::UBig;

use crate::aim::{AimProblem, LevelOrdering};
use crate::constants::{joules_per_wavenumber, ANGSTROM, ATOMIC_MASS_UNIT, HBAR, SPEED_OF_LIGHT};
use crate::error::MorseError;
use crate::format::format_significant;
use crate::poly::{EpsPoly, LaurentPoly};
use crate::scalar::{parse_rational, ratio, Rational, Scalar};

/// Spectroscopic Morse parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseParameters {
    /// Well depth, cm⁻¹.
    pub de_cm1: f64,
    /// Range parameter, Å⁻¹.
    pub beta: f64,
    /// Equilibrium separation, Å.
    pub x_e: f64,
    /// Reduced mass, u.
    pub mu: f64,
}

impl MorseParameters {
    pub fn new(de_cm1: f64, beta: f64, x_e: f64, mu: f64) -> Result<Self, MorseError> {
        for (name, value) in [("D_e", de_cm1), ("beta", beta), ("x_e", x_e), ("mu", mu)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(MorseError::NonPositive { name, value });
            }
        }
        Ok(MorseParameters { de_cm1, beta, x_e, mu })
    }

    /// `true` when `V(0) > 0`, i.e. `βx_e > ln 2`. A `false` here is worth a warning, not an error.
    pub fn repulsive_at_origin(&self) -> bool {
        self.beta * self.x_e > std::f64::consts::LN_2
    }

    /// ⁷Li₂ parameters (D_e = 8940 cm⁻¹, β = 0.616 Å⁻¹, x_e = 3.10821 Å, μ = 3.5080 u).
    pub fn lithium_dimer() -> Self {
        MorseParameters { de_cm1: 8940.0, beta: 0.616, x_e: 3.10821, mu: 3.5080 }
    }
}

/// Dimensionless Morse problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedMorse {
    delta: Rational,
    hbar_omega0_cm1: Option<Rational>,
}

impl ReducedMorse {
    /// Δ-only model; energies are available in units of ħω₀ only.
    pub fn from_delta(delta: Rational) -> Result<Self, MorseError> {
        if delta <= ratio(3, 8) {
            return Err(MorseError::NoBoundStates { delta: format_significant(&delta, 12) });
        }
        Ok(ReducedMorse { delta, hbar_omega0_cm1: None })
    }

    pub fn with_units(delta: Rational, hbar_omega0_cm1: Rational) -> Result<Self, MorseError> {
        let mut r = Self::from_delta(delta)?;
        r.hbar_omega0_cm1 = Some(hbar_omega0_cm1);
        Ok(r)
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    /// ħω₀ in cm⁻¹, when known.
    pub fn hbar_omega0_cm1(&self) -> Option<&Rational> {
        self.hbar_omega0_cm1.as_ref()
    }

    pub fn bound_state_count(&self) -> usize {
        bound_state_count(&self.delta).expect("validated on construction")
    }
}

fn round12(x: f64) -> Rational {
    parse_rational(&format!("{x:.11e}")).expect("finite float formats as a decimal")
}

/// Δ and ħω₀ from physical parameters, both rounded to 12 significant digits
/// (the precision of the constants).
pub fn reduce_units(p: &MorseParameters) -> Result<ReducedMorse, MorseError> {
    let de_joule = p.de_cm1 * joules_per_wavenumber();
    let mass = p.mu * ATOMIC_MASS_UNIT;
    let omega0 = (p.beta / ANGSTROM) * (2.0 * de_joule / mass).sqrt();
    let delta = de_joule / (HBAR * omega0);
    let hw_cm1 = omega0 / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT * 100.0);
    ReducedMorse::with_units(round12(delta), round12(hw_cm1))
}

/// The AIM problem for the Morse oscillator at `u* = 1`.
///
/// Roots are searched in `[−1/2, 4Δ]` and numbered from the largest.
pub fn build_aim_problem<S: Scalar>(r: &ReducedMorse, ctx: S::Context) -> AimProblem<S> {
    let d = &r.delta;
    let s = |q: &Rational| S::from_rational(q, ctx);
    let lambda0 = LaurentPoly::from_terms([
        (1, EpsPoly::constant(s(&(d * Rational::from(8))))),
        (-1, EpsPoly::linear(s(&Rational::from(-2)), s(&Rational::from(-2)))),
    ]);
    let c0 = d * Rational::from(12) - d * d * Rational::from(32);
    let s0 = LaurentPoly::term(0, EpsPoly::linear(s(&c0), s(&(d * Rational::from(8)))));
    let hint = UBig::from(2u8) * d.denominator();
    AimProblem::new(lambda0, s0, S::from_i64(1, ctx), "morse")
        .and_then(|p| p.with_window(ratio(-1, 2), d * Rational::from(4)))
        .expect("Morse λ₀ is nonzero and u* = 1")
        .with_ordering(LevelOrdering::Descending)
        .with_denominator_hint(hint)
}

/// `ϵ_n = (8Δ − 4n − 3)/2`.
pub fn epsilon_closed_form<S: Scalar>(delta: &S, n: usize) -> S {
    let ctx = delta.context();
    let num = delta.mul_int(8).sub(&S::from_i64(4 * n as i64 + 3, ctx));
    num.div(&S::from_i64(2, ctx)).expect("2 != 0")
}

/// `ε = −(ϵ + ½)²/(16Δ)`, in units of ħω₀.
pub fn epsilon_to_energy<S: Scalar>(epsilon: &S, delta: &S) -> S {
    let ctx = delta.context();
    let shifted = epsilon.add(&S::from_rational(&ratio(1, 2), ctx));
    let num = shifted.mul(&shifted).neg();
    num.div(&delta.mul_int(16)).expect("Δ > 0")
}

/// `ε_n = −(8Δ − 2(2n+1))²/(64Δ)` for a bound level `n`.
pub fn closed_form_spectrum<S: Scalar>(delta: &S, n: usize) -> Result<S, MorseError> {
    let count = bound_state_count(&delta.to_rational())?;
    if n >= count {
        return Err(MorseError::LevelOutOfRange { n, count, delta: format_significant(&delta.to_rational(), 12) });
    }
    let ctx = delta.context();
    let t = delta.mul_int(8).sub(&S::from_i64(2 * (2 * n as i64 + 1), ctx));
    Ok(t.mul(&t).neg().div(&delta.mul_int(64)).expect("Δ > 0"))
}

/// Number of levels `n ≥ 0` with `n < 2Δ − ½`.
pub fn bound_state_count(delta: &Rational) -> Result<usize, MorseError> {
    if *delta <= ratio(3, 8) {
        return Err(MorseError::NoBoundStates { delta: format_significant(delta, 12) });
    }
    let bound = delta * Rational::from(2) - ratio(1, 2);
    let ceil = bound.ceil();
    Ok(usize::try_from(ceil).expect("count fits in usize"))
}

/// `V(x)` in cm⁻¹ for `x` in Å.
pub fn potential_eval(x: f64, p: &MorseParameters) -> f64 {
    let e = (-p.beta * (x - p.x_e)).exp();
    p.de_cm1 * (e * e - 2.0 * e)
}

/// `E = ε ħω₀` in cm⁻¹.
pub fn energy_to_wavenumbers(eps: &Rational, r: &ReducedMorse) -> Result<Rational, MorseError> {
    let hw = r.hbar_omega0_cm1.as_ref().ok_or(MorseError::UnitsUnavailable)?;
    Ok(eps * hw)
}
