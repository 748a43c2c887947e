//! Fixed-point decimal rendering of exact rationals.

use dashu_int::{IBig, UBig};

use crate::scalar::{pow10, rational_abs, rational_signum, Rational};

fn round_half_away(r: &Rational) -> IBig {
    // r >= 0 here
    let twice = r.clone() * Rational::from(2);
    let floor = r.floor();
    let frac2 = twice - Rational::from(floor.clone()) * Rational::from(2);
    if frac2 >= Rational::ONE {
        floor + IBig::ONE
    } else {
        floor
    }
}

fn decimal_exponent(abs: &Rational) -> i32 {
    // floor(log10(abs)) for abs > 0
    let num_digits = abs.numerator().to_string().trim_start_matches('-').len() as i32;
    let den_digits = abs.denominator().to_string().len() as i32;
    let mut e = num_digits - den_digits;
    while pow10(e) > *abs {
        e -= 1;
    }
    while pow10(e + 1) <= *abs {
        e += 1;
    }
    e
}

/// Fixed-point string with `sig` significant digits, rounding half away from zero.
pub fn format_significant(value: &Rational, sig: usize) -> String {
    let sig = sig.max(1);
    if rational_signum(value) == 0 {
        return if sig > 1 { format!("0.{}", "0".repeat(sig - 1)) } else { "0".to_string() };
    }
    let abs = rational_abs(value);
    let mut e = decimal_exponent(&abs);
    let mut m = round_half_away(&(abs.clone() * pow10(sig as i32 - 1 - e)));
    if m == IBig::from(UBig::from(10u8).pow(sig)) {
        e += 1;
        m = round_half_away(&(abs * pow10(sig as i32 - 1 - e)));
    }
    let digits = m.to_string();
    let sign = if rational_signum(value) < 0 { "-" } else { "" };
    let int_len = e + 1;
    let body = if int_len <= 0 {
        format!("0.{}{}", "0".repeat((-int_len) as usize), digits)
    } else if int_len as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(int_len as usize - digits.len()))
    } else {
        let (i, f) = digits.split_at(int_len as usize);
        format!("{i}.{f}")
    };
    format!("{sign}{body}")
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn fraction_text(value: &Rational) -> String {
    if value.denominator() == &UBig::ONE {
        value.numerator().to_string()
    } else {
        format!("{}/{}", value.numerator(), value.denominator())
    }
}
