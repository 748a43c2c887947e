//! Physical constants (CODATA 2018), to 12 significant digits.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817_65e-34;

/// Planck constant, J·s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Speed of light, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Unified atomic mass unit, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Metres per ångström.
pub const ANGSTROM: f64 = 1e-10;

/// Joules per cm⁻¹ of wavenumber: `h c · 100`.
pub fn joules_per_wavenumber() -> f64 {
    PLANCK * SPEED_OF_LIGHT * 100.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hbar_is_h_over_two_pi() {
        let rel = (PLANCK / (2.0 * std::f64::consts::PI) - HBAR).abs() / HBAR;
        assert!(rel < 1e-11);
    }
}
