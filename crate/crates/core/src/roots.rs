//! Real-root isolation for [`EpsPoly`] in either scalar mode.
//!
//! Coefficients are converted exactly to integers (binary floats are dyadic
//! rationals), so isolation itself is exact in both modes:
//!
//! 1. square-free decomposition (a modular certificate settles the common
//!    square-free case; otherwise Yun's algorithm over the rationals),
//! 2. Descartes sign-variation bisection on each square-free factor,
//! 3. sign-change bisection inside every isolating interval, with a
//!    bounded-denominator rational candidate tested exactly on the way.

use std::cmp::Ordering;

use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, UBig};
use rayon::prelude::*;

use crate::error::AlgebraError;
use crate::poly::EpsPoly;
use crate::scalar::{rational_abs, rational_signum, Mode, Rational, Scalar};

/// A real root, either exact or known to lie within `radius` of `value`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRoot {
    pub value: Rational,
    pub radius: Rational,
    pub exact: bool,
    pub multiplicity: usize,
}

impl RealRoot {
    fn exact(value: Rational, multiplicity: usize) -> Self {
        RealRoot { value, radius: Rational::ZERO, exact: true, multiplicity }
    }
}

#[derive(Debug, Clone)]
pub struct RootOptions {
    /// Absolute tolerance on every reported root.
    pub tol: Rational,
    /// Largest denominator tried when looking for an exact rational root.
    pub max_denominator: UBig,
    pub detect_rational: bool,
}

impl RootOptions {
    pub fn new(tol: Rational, mode: Mode) -> Self {
        RootOptions { tol, max_denominator: UBig::from(1_000_000u32), detect_rational: mode == Mode::Exact }
    }

    pub fn with_max_denominator(mut self, bound: UBig) -> Self {
        if bound > self.max_denominator {
            self.max_denominator = bound;
        }
        self
    }
}

/// All real roots of `p` in `[lo, hi]`, ascending, each to absolute tolerance `tol`.
///
/// In exact mode, roots that are rationals with denominator at most 10⁶ are
/// reported exactly.
pub fn real_roots<S: Scalar>(
    p: &EpsPoly<S>,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> Result<Vec<RealRoot>, AlgebraError> {
    real_roots_with(p, lo, hi, &RootOptions::new(tol.clone(), S::MODE))
}

pub fn real_roots_with<S: Scalar>(
    p: &EpsPoly<S>,
    lo: &Rational,
    hi: &Rational,
    opts: &RootOptions,
) -> Result<Vec<RealRoot>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::DegenerateInput);
    }
    if lo >= hi {
        return Err(AlgebraError::InvalidInterval);
    }
    if rational_signum(&opts.tol) <= 0 {
        return Err(AlgebraError::InvalidTolerance);
    }
    let rational = p.to_rational();
    let mut roots = Vec::new();
    for (factor, multiplicity) in square_free_factors(&rational) {
        let intervals = isolate(&factor, lo, hi);
        let refined: Vec<RealRoot> = intervals
            .into_par_iter()
            .map(|iv| match iv {
                Isolated::Exact(r) => RealRoot::exact(r, multiplicity),
                Isolated::Open(a, b) => refine(&factor, a, b, opts, multiplicity),
            })
            .collect();
        roots.extend(refined);
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(roots)
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IntPoly(Vec<IBig>);

impl IntPoly {
    fn trimmed(mut c: Vec<IBig>) -> Self {
        while c.last().is_some_and(|x| *x == IBig::ZERO) {
            c.pop();
        }
        IntPoly(c)
    }

    /// Primitive integer multiple of a rational polynomial, with positive leading coefficient.
    pub(crate) fn from_rational(p: &EpsPoly<Rational>) -> Self {
        let mut lcm = UBig::ONE;
        for c in p.coeffs() {
            let d = c.denominator();
            let g = gcd_u(&lcm, d);
            lcm = &lcm / &g * d;
        }
        let scale = Rational::from(lcm);
        let coeffs: Vec<IBig> = p
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * &scale;
                debug_assert!(v.denominator() == &UBig::ONE);
                v.numerator().clone()
            })
            .collect();
        IntPoly::trimmed(coeffs).primitive()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn primitive(self) -> Self {
        let mut g = UBig::ZERO;
        for c in &self.0 {
            g = gcd_u(&g, &c.unsigned_abs());
            if g == UBig::ONE {
                break;
            }
        }
        let negate = self.0.last().is_some_and(|l| *l < IBig::ZERO);
        if g == UBig::ZERO || (g == UBig::ONE && !negate) {
            return self;
        }
        let g = IBig::from(g);
        let g = if negate { -g } else { g };
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// Sign of `p(num/den)` for `den > 0`.
    fn sign_at(&self, x: &Rational) -> i32 {
        let num = x.numerator();
        let den = IBig::from(x.denominator().clone());
        let mut acc = match self.0.last() {
            Some(l) => l.clone(),
            None => return 0,
        };
        let mut den_pow = IBig::ONE;
        for c in self.0.iter().rev().skip(1) {
            den_pow *= &den;
            acc = acc * num + c * &den_pow;
        }
        match acc.cmp(&IBig::ZERO) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// `C^d p((A + Bx)/C)` for `x ↦ lo + w x`.
    fn compose_affine(&self, lo: &Rational, width: &Rational) -> Self {
        let c_den = IBig::from(lo.denominator() * width.denominator());
        let a = lo.numerator() * IBig::from(width.denominator().clone());
        let b = width.numerator() * IBig::from(lo.denominator().clone());
        let d = self.degree();
        let mut acc: Vec<IBig> = vec![self.0[d].clone()];
        let mut c_pow = IBig::ONE;
        for i in (0..d).rev() {
            c_pow *= &c_den;
            // acc = acc * (a + b x) + c_i * C^(d-i)
            let mut next = vec![IBig::ZERO; acc.len() + 1];
            for (j, v) in acc.iter().enumerate() {
                next[j] += v * &a;
                next[j + 1] += v * &b;
            }
            next[0] += &self.0[i] * &c_pow;
            acc = next;
        }
        IntPoly::trimmed(acc).primitive()
    }
}

fn gcd_u(a: &UBig, b: &UBig) -> UBig {
    use dashu_int::ops::Gcd;
    if *a == UBig::ZERO {
        return b.clone();
    }
    if *b == UBig::ZERO {
        return a.clone();
    }
    a.gcd(b)
}

/// Square-free factors with multiplicities, as primitive integer polynomials of positive degree.
fn square_free_factors(p: &EpsPoly<Rational>) -> Vec<(IntPoly, usize)> {
    let int = IntPoly::from_rational(p);
    if int.degree() == 0 {
        return Vec::new();
    }
    if modular_square_free(&int) {
        return vec![(int, 1)];
    }
    yun(p)
        .into_iter()
        .filter(|(f, _)| f.degree().unwrap_or(0) > 0)
        .map(|(f, m)| (IntPoly::from_rational(&f), m))
        .collect()
}

/// Yun's square-free decomposition over ℚ.
fn yun(f: &EpsPoly<Rational>) -> Vec<(EpsPoly<Rational>, usize)> {
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let (mut b, _) = f.div_rem(&a0).expect("gcd is nonzero");
    let (mut c, _) = df.div_rem(&a0).expect("gcd is nonzero");
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).expect("nonzero").0;
        c = d.div_rem(&a).expect("nonzero").0;
        out.push((a, i));
        i += 1;
        d = c.sub(&b.derivative());
    }
    out
}

const PRIMES: [u64; 4] = [2_305_843_009_213_693_951, 18_446_744_073_709_551_557, 4_294_967_291, 1_000_000_007];

/// `true` certifies that `p` is square-free over ℚ: for a prime not dividing
/// the leading coefficient, `deg gcd(p, p') mod q` bounds the true gcd degree.
fn modular_square_free(p: &IntPoly) -> bool {
    let d = p.degree();
    for &q in &PRIMES {
        let qb = UBig::from(q);
        let reduce = |c: &IBig| -> u64 {
            let r = c % IBig::from(qb.clone());
            let r = if r < IBig::ZERO { r + IBig::from(qb.clone()) } else { r };
            u64::try_from(r).expect("reduced below modulus")
        };
        let f: Vec<u64> = p.0.iter().map(reduce).collect();
        let lead = f[d];
        if lead == 0 || (d as u128 * lead as u128).is_multiple_of(q as u128) {
            continue;
        }
        let df: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, c)| mulmod(*c, i as u64 % q, q)).collect();
        return gcd_degree_mod(f, df, q) == 0;
    }
    false
}

fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, q);
        }
        a = mulmod(a, a, q);
        e >>= 1;
    }
    r
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, q: u64) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), q - 2, q);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mulmod(*a.last().unwrap(), inv, q);
            for (j, bj) in b.iter().enumerate() {
                let t = mulmod(factor, *bj, q);
                a[shift + j] = (a[shift + j] + q - t) % q;
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

enum Isolated {
    Exact(Rational),
    /// Open interval holding exactly one simple root.
    Open(Rational, Rational),
}

fn sign_variations(coeffs: &[IBig]) -> usize {
    let mut last = 0;
    let mut count = 0;
    for c in coeffs {
        let s = match c.cmp(&IBig::ZERO) {
            Ordering::Less => -1,
            Ordering::Equal => continue,
            Ordering::Greater => 1,
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn taylor_shift_one(c: &mut [IBig]) {
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let add = c[j + 1].clone();
            c[j] += add;
        }
    }
}

/// Descartes bound on the number of roots of `P` in `(0, 1)`.
fn descartes_unit(p: &[IBig]) -> usize {
    let mut r: Vec<IBig> = p.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// Halves of `P` on `(0, 1)`: `2^d P(x/2)` and `2^d P((x+1)/2)`.
fn split_halves(p: &[IBig]) -> (Vec<IBig>, Vec<IBig>) {
    let d = p.len() - 1;
    let left: Vec<IBig> = p.iter().enumerate().map(|(i, c)| c << (d - i)).collect();
    let mut right = left.clone();
    taylor_shift_one(&mut right);
    (left, right)
}

fn isolate(p: &IntPoly, lo: &Rational, hi: &Rational) -> Vec<Isolated> {
    let width = hi - lo;
    let mut out = Vec::new();
    if p.sign_at(hi) == 0 {
        out.push(Isolated::Exact(hi.clone()));
    }
    let start = p.compose_affine(lo, &width).0;
    let mut stack = vec![(start, lo.clone(), width)];
    while let Some((mut poly, a, w)) = stack.pop() {
        if poly.first().is_some_and(|c| *c == IBig::ZERO) {
            out.push(Isolated::Exact(a.clone()));
            poly.remove(0);
        }
        if poly.len() <= 1 {
            continue;
        }
        match descartes_unit(&poly) {
            0 => {}
            1 if p.sign_at(&a) != 0 && p.sign_at(&(&a + &w)) != 0 => out.push(Isolated::Open(a.clone(), &a + &w)),
            _ => {
                let half = w / Rational::from(2);
                let (left, right) = split_halves(&poly);
                stack.push((right, &a + &half, half.clone()));
                stack.push((left, a, half));
            }
        }
    }
    out
}

/// Simplest rational (smallest denominator) in the closed interval `[a, b]`.
pub(crate) fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    if rational_signum(a) <= 0 && rational_signum(b) >= 0 {
        return Rational::ZERO;
    }
    if rational_signum(b) < 0 {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    let fl = Rational::from(a.floor());
    if fl == *a {
        return a.clone();
    }
    let next = &fl + Rational::ONE;
    if next <= *b {
        return next;
    }
    let inner = simplest_between(&(Rational::ONE / (b - &fl)), &(Rational::ONE / (a - &fl)));
    fl + Rational::ONE / inner
}

fn refine(p: &IntPoly, mut a: Rational, mut b: Rational, opts: &RootOptions, mult: usize) -> RealRoot {
    let two = Rational::from(2);
    let mut sa = p.sign_at(&a);
    debug_assert!(sa != 0 && p.sign_at(&b) != 0, "isolating endpoints are not roots");
    let tol2 = &opts.tol * &two;
    let bound = Rational::from(opts.max_denominator.clone());
    let candidate_width = Rational::ONE / (&bound * &bound * &two);
    let mut candidate_tested = !opts.detect_rational;
    loop {
        let width = &b - &a;
        if !candidate_tested && width < candidate_width {
            candidate_tested = true;
            let r = simplest_between(&a, &b);
            if Rational::from(r.denominator().clone()) <= bound && p.sign_at(&r) == 0 {
                return RealRoot::exact(r, mult);
            }
        }
        if candidate_tested && width <= tol2 {
            let mid = (&a + &b) / &two;
            return RealRoot { value: mid, radius: width / two, exact: false, multiplicity: mult };
        }
        let mid = (&a + &b) / &two;
        match p.sign_at(&mid) {
            0 => return RealRoot::exact(mid, mult),
            s if s == sa => {
                a = mid;
                sa = s;
            }
            _ => b = mid,
        }
    }
}

/// Magnitude used to judge a residual `|p(r)|`: `Σ|c_i||r|^i + Σ i|c_i||r|^(i-1)`.
pub fn residual_scale(p: &EpsPoly<Rational>, r: &Rational) -> Rational {
    let ar = rational_abs(r);
    p.eval_abs(&ar) + p.derivative().eval_abs(&ar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, BigReal, Precision};

    fn from_roots(roots: &[Rational]) -> EpsPoly<Rational> {
        roots
            .iter()
            .fold(EpsPoly::constant(Rational::ONE), |acc, r| acc.mul(&EpsPoly::linear(-r.clone(), Rational::ONE)))
    }

    fn tol() -> Rational {
        ratio(1, 1_000_000_000_000)
    }

    #[test]
    fn constructed_factorization() {
        let p = from_roots(&[Rational::from(3), Rational::from(-1)]);
        let roots = real_roots(&p, &Rational::from(-10), &Rational::from(10), &tol()).unwrap();
        let values: Vec<_> = roots.iter().map(|r| r.value.clone()).collect();
        assert_eq!(values, vec![Rational::from(-1), Rational::from(3)]);
        assert!(roots.iter().all(|r| r.exact && r.multiplicity == 1));
    }

    #[test]
    fn no_real_roots() {
        let p = EpsPoly::from_coeffs(vec![Rational::ONE, Rational::ZERO, Rational::ONE]);
        let roots = real_roots(&p, &Rational::from(-10), &Rational::from(10), &tol()).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn degenerate_and_invalid_inputs() {
        let zero = EpsPoly::<Rational>::zero();
        assert_eq!(real_roots(&zero, &Rational::ZERO, &Rational::ONE, &tol()), Err(AlgebraError::DegenerateInput));
        let p = from_roots(&[Rational::ONE]);
        assert_eq!(real_roots(&p, &Rational::ONE, &Rational::ZERO, &tol()), Err(AlgebraError::InvalidInterval));
        assert_eq!(
            real_roots(&p, &Rational::ZERO, &Rational::ONE, &Rational::ZERO),
            Err(AlgebraError::InvalidTolerance)
        );
    }

    #[test]
    fn roots_on_interval_endpoints_and_midpoints() {
        let p = from_roots(&[Rational::from(-2), Rational::ZERO, Rational::from(2)]);
        let roots = real_roots(&p, &Rational::from(-2), &Rational::from(2), &tol()).unwrap();
        let values: Vec<_> = roots.iter().map(|r| r.value.clone()).collect();
        assert_eq!(values, vec![Rational::from(-2), Rational::ZERO, Rational::from(2)]);
    }

    #[test]
    fn multiplicities_are_reported() {
        let p = from_roots(&[
            ratio(1, 3),
            ratio(1, 3),
            Rational::from(5),
            Rational::from(5),
            Rational::from(5),
            ratio(-7, 2),
        ]);
        let roots = real_roots(&p, &Rational::from(-10), &Rational::from(10), &tol()).unwrap();
        let got: Vec<_> = roots.iter().map(|r| (r.value.clone(), r.multiplicity, r.exact)).collect();
        assert_eq!(got, vec![(ratio(-7, 2), 1, true), (ratio(1, 3), 2, true), (Rational::from(5), 3, true)]);
    }

    #[test]
    fn irrational_roots_meet_tolerance() {
        // ϵ² − 2
        let p = EpsPoly::from_coeffs(vec![Rational::from(-2), Rational::ZERO, Rational::ONE]);
        let t = ratio(1, 10i64.pow(15));
        let roots = real_roots(&p, &Rational::ZERO, &Rational::from(2), &t).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(!roots[0].exact);
        let sqrt2 = std::f64::consts::SQRT_2;
        assert!((roots[0].value.to_f64().value() - sqrt2).abs() < 1e-15);
        assert!(roots[0].radius <= t);
    }

    #[test]
    fn close_roots_are_separated() {
        let p = from_roots(&[ratio(1_000_001, 1_000_000), Rational::ONE, ratio(999_999, 1_000_000)]);
        let roots = real_roots(&p, &Rational::ZERO, &Rational::from(2), &tol()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.exact));
    }

    #[test]
    fn numeric_mode_matches_exact_roots() {
        let prec = Precision::default();
        let exact = from_roots(&[ratio(17311, 125), ratio(-1, 3), Rational::from(7)]);
        let numeric = exact.map(|c| BigReal::from_rational(c, prec));
        let t = ratio(1, 10i64.pow(18)) * ratio(1, 10i64.pow(12));
        let roots = real_roots(&numeric, &Rational::from(-5), &Rational::from(200), &t).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, want) in roots.iter().zip([ratio(-1, 3), Rational::from(7), ratio(17311, 125)]) {
            assert!(rational_abs(&(&r.value - &want)) <= &t * Rational::from(2), "{r:?}");
        }
    }

    #[test]
    fn simplest_rational_search() {
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
        assert_eq!(simplest_between(&ratio(-5, 2), &ratio(-9, 4)), ratio(-5, 2));
        assert_eq!(simplest_between(&ratio(-24, 10), &ratio(-23, 10)), ratio(-7, 3));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), Rational::ZERO);
        assert_eq!(simplest_between(&ratio(17311, 125), &ratio(17311, 125)), ratio(17311, 125));
    }

    #[test]
    fn modular_certificate_detects_repeated_roots() {
        let sq = IntPoly::from_rational(&from_roots(&[Rational::ONE, Rational::ONE, Rational::from(2)]));
        assert!(!modular_square_free(&sq));
        let sf = IntPoly::from_rational(&from_roots(&[Rational::ONE, Rational::from(2)]));
        assert!(modular_square_free(&sf));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn distinct_roots() -> impl Strategy<Value = Vec<Rational>> {
            prop::collection::btree_set((-40i64..=40, 1i64..=9), 1..6).prop_map(|set| {
                let mut roots: Vec<Rational> = set.into_iter().map(|(a, b)| ratio(a, b)).collect();
                roots.sort();
                roots.dedup();
                roots
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn rational_roots_are_recovered_exactly(roots in distinct_roots(), scale in 1i64..20) {
                let p = from_roots(&roots).mul_int(scale);
                let found = real_roots(&p, &Rational::from(-50), &Rational::from(50), &tol()).unwrap();
                let values: Vec<_> = found.iter().map(|r| r.value.clone()).collect();
                prop_assert_eq!(values, roots);
                prop_assert!(found.iter().all(|r| r.exact && r.radius.is_zero()));
            }

            #[test]
            fn radius_brackets_a_sign_change(coeffs in prop::collection::vec(-20i64..=20, 2..7)) {
                let p = EpsPoly::from_coeffs(coeffs.into_iter().map(Rational::from).collect());
                prop_assume!(p.degree().unwrap_or(0) >= 1);
                let found = real_roots(&p, &Rational::from(-100), &Rational::from(100), &tol()).unwrap();
                for r in found {
                    prop_assert!(r.radius <= tol());
                    if r.exact {
                        prop_assert!(p.eval(&r.value).is_zero());
                    } else if r.multiplicity % 2 == 1 {
                        let a = p.eval(&(&r.value - &r.radius));
                        let b = p.eval(&(&r.value + &r.radius));
                        prop_assert!(rational_signum(&a) * rational_signum(&b) <= 0, "{r:?}");
                    }
                }
            }
        }
    }
}
