//! Scalar fields used as polynomial coefficients.
//!
//! Two coefficient modes exist: exact rationals ([`Rational`]) and
//! extended-precision binary floats ([`BigReal`]). A computation is generic
//! over [`Scalar`] and therefore never mixes the two.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use thiserror::Error;

/// Exact arbitrary-size rational, always in lowest terms with a positive denominator.
pub type Rational = dashu_ratio::RBig;

type Float = FBig<HalfEven, 2>;

/// Which arithmetic a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Numeric => f.write_str("numeric"),
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" | "symbolic" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            other => Err(format!("unknown mode `{other}` (expected exact or numeric)")),
        }
    }
}

/// Working precision of a [`BigReal`], in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_DIGITS: u32 = 32;
    pub const DEFAULT_DIGITS: u32 = 64;

    /// Precision of `digits` decimal digits, clamped from below to [`Self::MIN_DIGITS`].
    pub fn digits(digits: u32) -> Self {
        Precision(digits.max(Self::MIN_DIGITS))
    }

    pub fn decimal_digits(self) -> u32 {
        self.0
    }

    /// Significand width in bits, with a few guard bits on top of the decimal request.
    pub fn bits(self) -> usize {
        (f64::from(self.0) * std::f64::consts::LOG2_10).ceil() as usize + 8
    }

    pub fn doubled(self) -> Self {
        Precision(self.0 * 2)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_DIGITS)
    }
}

/// Extended-precision real number carrying its own working precision.
///
/// Binary operations round to the larger precision of the two operands.
#[derive(Clone, PartialEq)]
pub struct BigReal {
    value: Float,
    precision: Precision,
}

impl BigReal {
    fn wrap(value: Float, precision: Precision) -> Self {
        let value = value.with_precision(precision.bits()).value();
        BigReal { value, precision }
    }

    /// Correctly rounded conversion at the given precision.
    pub fn from_rational(r: &Rational, precision: Precision) -> Self {
        let value: Float = r.to_float(precision.bits()).value();
        BigReal { value, precision }
    }

    pub fn from_f64(x: f64, precision: Precision) -> Self {
        let value = Float::try_from(x).expect("finite f64");
        Self::wrap(value, precision)
    }

    pub fn from_i64(x: i64, precision: Precision) -> Self {
        Self::wrap(Float::from(IBig::from(x)), precision)
    }

    pub fn zero(precision: Precision) -> Self {
        Self::from_i64(0, precision)
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Re-round to a different precision.
    pub fn with_precision(&self, precision: Precision) -> Self {
        Self::wrap(self.value.clone(), precision)
    }

    /// Exact value of the binary float as a rational.
    pub fn to_rational(&self) -> Rational {
        Rational::try_from(self.value.clone()).expect("finite binary float is rational")
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    pub fn is_zero(&self) -> bool {
        *self.value.repr().significand() == IBig::ZERO
    }

    pub fn signum(&self) -> i32 {
        match self.value.repr().significand().cmp(&IBig::ZERO) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        BigReal { value: -self.value.clone(), precision: self.precision }
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(), self.precision)
    }

    fn joint(&self, other: &Self) -> Precision {
        self.precision.max(other.precision)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BigReal({}, {} digits)",
            crate::format::format_significant(&self.to_rational(), 24),
            self.precision.0
        )
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.precision.0 as usize;
        f.write_str(&crate::format::format_significant(&self.to_rational(), digits))
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

/// Coefficient field for [`crate::poly::EpsPoly`].
///
/// `Context` carries whatever is needed to build new constants
/// (nothing for rationals, the working precision for floats).
pub trait Scalar: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Context: Copy + fmt::Debug + PartialEq + Send + Sync;

    const MODE: Mode;

    fn context(&self) -> Self::Context;
    fn from_rational(value: &Rational, ctx: Self::Context) -> Self;
    /// Exact rational value of this scalar.
    fn to_rational(&self) -> Rational;
    fn to_f64(&self) -> f64;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `None` on division by zero.
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn signum(&self) -> i32;
    fn cmp_value(&self, other: &Self) -> Ordering;

    /// True when `self` is zero up to the rounding noise of a quantity of size `scale`.
    fn is_negligible(&self, scale: &Self) -> bool;

    fn from_i64(value: i64, ctx: Self::Context) -> Self {
        Self::from_rational(&Rational::from(value), ctx)
    }

    fn zero_like(&self) -> Self {
        Self::from_i64(0, self.context())
    }

    fn one_like(&self) -> Self {
        Self::from_i64(1, self.context())
    }

    fn abs(&self) -> Self {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Integer power; negative exponents need a nonzero base.
    fn powi(&self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.one_like().div(self)? } else { self.clone() };
        let mut result = self.one_like();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(result)
    }
}

impl Scalar for Rational {
    type Context = ();

    const MODE: Mode = Mode::Exact;

    fn context(&self) {}

    fn from_rational(value: &Rational, _ctx: ()) -> Self {
        value.clone()
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self).value()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn neg(&self) -> Self {
        -self.clone()
    }

    fn mul_int(&self, k: i64) -> Self {
        self * Rational::from(k)
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn signum(&self) -> i32 {
        rational_signum(self)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn is_negligible(&self, _scale: &Self) -> bool {
        Rational::is_zero(self)
    }
}

impl Scalar for BigReal {
    type Context = Precision;

    const MODE: Mode = Mode::Numeric;

    fn context(&self) -> Precision {
        self.precision
    }

    fn from_rational(value: &Rational, ctx: Precision) -> Self {
        BigReal::from_rational(value, ctx)
    }

    fn to_rational(&self) -> Rational {
        BigReal::to_rational(self)
    }

    fn to_f64(&self) -> f64 {
        BigReal::to_f64(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::wrap(&self.value + &rhs.value, self.joint(rhs))
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::wrap(&self.value - &rhs.value, self.joint(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::wrap(&self.value * &rhs.value, self.joint(rhs))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Self::wrap(&self.value / &rhs.value, self.joint(rhs)))
        }
    }

    fn neg(&self) -> Self {
        BigReal::neg(self)
    }

    fn mul_int(&self, k: i64) -> Self {
        Self::wrap(&self.value * Float::from(IBig::from(k)), self.precision)
    }

    fn is_zero(&self) -> bool {
        BigReal::is_zero(self)
    }

    fn signum(&self) -> i32 {
        BigReal::signum(self)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    fn is_negligible(&self, scale: &Self) -> bool {
        // |x| <= |scale| * 2^(8 - bits)
        let bits = self.precision.bits() as isize;
        let bound = Float::from_parts(IBig::ONE, 8 - bits) * scale.value.clone();
        let bound = if bound < Float::ZERO { -bound } else { bound };
        let mag = if self.value < Float::ZERO { -self.value.clone() } else { self.value.clone() };
        mag <= bound
    }
}

pub(crate) fn rational_signum(r: &Rational) -> i32 {
    match r.numerator().cmp(&IBig::ZERO) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub(crate) fn rational_abs(r: &Rational) -> Rational {
    if rational_signum(r) < 0 {
        -r.clone()
    } else {
        r.clone()
    }
}

/// Build `num/den` from machine integers. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::from_parts_signed(IBig::from(num), IBig::from(den))
}

/// `10^k` as an exact rational (negative `k` gives `1/10^|k|`).
pub fn pow10(k: i32) -> Rational {
    let p = UBig::from(10u8).pow(k.unsigned_abs() as usize);
    if k >= 0 {
        Rational::from(p)
    } else {
        Rational::from_parts(IBig::ONE, p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}` as a rational number")]
pub struct ParseRationalError {
    pub input: String,
}

/// Parse `p/q`, an integer, or a decimal with optional exponent (`34.997`, `-1.5e-3`).
/// Decimal input is converted exactly, so `34.997` is `34997/1000`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError { input: text.to_string() };
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    if s.contains('/') {
        let (num, den) = s.split_once('/').ok_or_else(err)?;
        let num = parse_rational(num).map_err(|_| err())?;
        let den = parse_rational(den).map_err(|_| err())?;
        if Rational::is_zero(&den) {
            return Err(err());
        }
        return Ok(num / den);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let all: String = format!("{int_part}{frac_part}");
    let magnitude = UBig::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i32;
    let value = Rational::from(magnitude) * pow10(scale);
    Ok(if negative { -value } else { value })
}
