//! Adaptive Gauss–Kronrod (7/15) quadrature with infinite-range transforms.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::QuadratureError;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for nodes `XGK[1]`, `XGK[3]`, `XGK[5]` and the centre.
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

const MAX_SEGMENTS: usize = 4000;
const INITIAL_SEGMENTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    abs_value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Segment {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs_sum = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let (f1, f2) = (f(centre - dx), f(centre + dx));
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    Segment { a, b, value, abs_value: abs_sum * half.abs(), error: ((kronrod - gauss) * half).abs() }
}

/// `∫_a^b f` to relative tolerance `rel_tol`, measured against `∫|f|`
/// so that integrals which cancel to zero still terminate.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<Integral, QuadratureError> {
    let mut heap = BinaryHeap::new();
    let step = (b - a) / INITIAL_SEGMENTS as f64;
    for i in 0..INITIAL_SEGMENTS {
        let lo = a + step * i as f64;
        let hi = if i + 1 == INITIAL_SEGMENTS { b } else { lo + step };
        heap.push(kronrod(&f, lo, hi));
    }
    let mut evaluations = 15 * INITIAL_SEGMENTS;
    loop {
        let (value, abs_value, error) =
            heap.iter().fold((0.0, 0.0, 0.0), |(v, m, e), s| (v + s.value, m + s.abs_value, e + s.error));
        if !value.is_finite() {
            return Err(QuadratureError { estimate: value, error });
        }
        if error <= rel_tol * abs_value || abs_value == 0.0 {
            return Ok(Integral { value, error, evaluations });
        }
        if heap.len() >= MAX_SEGMENTS {
            return Err(QuadratureError { estimate: value, error });
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at machine precision
            return Err(QuadratureError { estimate: value, error });
        }
        heap.push(kronrod(&f, worst.a, mid));
        heap.push(kronrod(&f, mid, worst.b));
        evaluations += 30;
    }
}

/// `∫_a^∞ f` via `x = a + t/(1 − t)`.
pub fn integrate_half_line(f: impl Fn(f64) -> f64, a: f64, rel_tol: f64) -> Result<Integral, QuadratureError> {
    integrate(
        |t| {
            let s = 1.0 - t;
            f(a + t / s) / (s * s)
        },
        0.0,
        1.0,
        rel_tol,
    )
}

/// `∫_{-∞}^∞ f` via `x = t/(1 − t²)`.
pub fn integrate_whole_line(f: impl Fn(f64) -> f64, rel_tol: f64) -> Result<Integral, QuadratureError> {
    integrate(
        |t| {
            let s = 1.0 - t * t;
            f(t / s) * (1.0 + t * t) / (s * s)
        },
        -1.0,
        1.0,
        rel_tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(|x| x.powi(5) - 2.0 * x, 0.0, 2.0, 1e-14).unwrap();
        assert!((r.value - (64.0 / 6.0 - 4.0)).abs() < 1e-13);
    }

    #[test]
    fn gaussian_on_infinite_ranges() {
        let pi = std::f64::consts::PI;
        let whole = integrate_whole_line(|x| (-x * x).exp(), 1e-12).unwrap();
        assert!((whole.value - pi.sqrt()).abs() < 1e-11);
        let half = integrate_half_line(|x| (-x * x).exp(), 0.0, 1e-12).unwrap();
        assert!((half.value - pi.sqrt() / 2.0).abs() < 1e-11);
    }

    #[test]
    fn narrow_peak_far_from_origin() {
        let f = |x: f64| (-((x - 3.1) / 0.05).powi(2)).exp();
        let r = integrate_half_line(f, 0.0, 1e-12).unwrap();
        assert!((r.value - 0.05 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn cancelling_integral_terminates() {
        let r = integrate(|x| (x * 10.0).sin(), -1.0, 1.0, 1e-12).unwrap();
        assert!(r.value.abs() < 1e-12);
    }

    #[test]
    fn divergent_integral_reports_failure() {
        assert!(integrate(|x| 1.0 / x.abs().sqrt() / x.abs(), -1.0, 1.0, 1e-12).is_err());
    }
}
