//! Polynomials in the eigenparameter and Laurent polynomials in `u`.
//!
//! [`EpsPoly`] is a dense univariate polynomial (ascending coefficients).
//! [`LaurentPoly`] maps integer exponents of `u`, possibly negative, to
//! [`EpsPoly`] coefficients; this is the shape of every `λ_k(u)` and `s_k(u)`
//! produced by the iteration.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::{Rational, Scalar};

/// Dense polynomial `c_0 + c_1 ϵ + … + c_d ϵ^d`.
///
/// The coefficient vector never ends in an exact zero; the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq)]
pub struct EpsPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> EpsPoly<S> {
    pub fn zero() -> Self {
        EpsPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c ϵ^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        EpsPoly { coeffs }
    }

    /// `a + b ϵ`.
    pub fn linear(a: S, b: S) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        EpsPoly { coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul_int(k)).collect())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `Σ |c_i| |x|^i`, the natural magnitude against which `|p(x)|` is judged.
    pub fn eval_abs(&self, x: &S) -> S {
        let ax = x.abs();
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&ax).add(&c.abs());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_int(i as i64)).collect())
    }

    /// Euclidean division; `None` when dividing by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Some((Self::zero(), self.clone()));
        }
        let zero = lead.zero_like();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero.clone(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].div(lead)?;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(d));
                }
            }
            rem[k + dd] = zero.clone();
            quot[k] = c;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> EpsPoly<T> {
        EpsPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn to_rational(&self) -> EpsPoly<Rational> {
        self.map(Scalar::to_rational)
    }
}

impl EpsPoly<Rational> {
    /// Monic greatest common divisor over the rationals.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = Rational::ONE / l;
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for EpsPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ϵ")?,
                _ => write!(f, "({c})ϵ^{i}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for EpsPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("EpsPoly").field(&self.coeffs).finish()
    }
}

/// Finite Laurent polynomial `Σ_e a_e(ϵ) u^e` with integer `e`.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i32, EpsPoly<S>>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// `coeff · u^exp`.
    pub fn term(exp: i32, coeff: EpsPoly<S>) -> Self {
        let mut p = Self::zero();
        p.insert_add(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, EpsPoly<S>)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.insert_add(e, c);
        }
        p
    }

    fn insert_add(&mut self, exp: i32, coeff: EpsPoly<S>) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(existing) => {
                let sum = existing.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coefficient(&self, exp: i32) -> Option<&EpsPoly<S>> {
        self.terms.get(&exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &EpsPoly<S>)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Highest ϵ-degree among the coefficients.
    pub fn eps_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(EpsPoly::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_add(ea + eb, ca.mul(cb));
            }
        }
        out
    }

    /// Multiply every coefficient by the same ϵ-polynomial.
    pub fn scale(&self, c: &EpsPoly<S>) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.mul(c))))
    }

    /// Term-wise `d/du`: `a u^e ↦ e a u^(e-1)`; constant terms vanish.
    pub fn diff_u(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| **e != 0).map(|(e, c)| (e - 1, c.mul_int(i64::from(*e)))))
    }

    /// Substitute `u = u_star`, leaving a polynomial in ϵ.
    pub fn eval_u(&self, u_star: &S) -> Result<EpsPoly<S>, AlgebraError> {
        let mut acc = EpsPoly::zero();
        for (e, c) in &self.terms {
            let pow = u_star.powi(*e).ok_or(AlgebraError::Pole { exponent: *e })?;
            acc = acc.add(&c.scale(&pow));
        }
        Ok(acc)
    }

    /// Substitute `ϵ = eps`, leaving a Laurent polynomial with constant coefficients.
    pub fn specialize(&self, eps: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, EpsPoly::constant(c.eval(eps)))))
    }

    /// Value at `(u, ϵ)`.
    pub fn eval(&self, u: &S, eps: &S) -> Result<S, AlgebraError> {
        Ok(self.eval_u(u)?.eval(eps))
    }

    pub fn to_rational(&self) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.to_rational())))
    }
}

impl<S: fmt::Debug> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Product of two Laurent polynomials.
pub fn poly_mul<S: Scalar>(a: &LaurentPoly<S>, b: &LaurentPoly<S>) -> LaurentPoly<S> {
    a.mul(b)
}

/// Term-wise derivative with respect to `u`.
pub fn poly_diff_u<S: Scalar>(a: &LaurentPoly<S>) -> LaurentPoly<S> {
    a.diff_u()
}

/// Substitute `u = u_star`.
pub fn poly_eval_u<S: Scalar>(a: &LaurentPoly<S>, u_star: &S) -> Result<EpsPoly<S>, AlgebraError> {
    a.eval_u(u_star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from(n)
    }

    fn eps(a: i64, b: i64) -> EpsPoly<Q> {
        EpsPoly::linear(q(a), q(b))
    }

    /// λ₀ = 8Δu − (2ϵ+2)u⁻¹ for a symbolic Δ value.
    fn morse_lambda0(delta: &Q) -> LaurentPoly<Q> {
        LaurentPoly::from_terms([(1, EpsPoly::constant(delta.clone() * q(8))), (-1, eps(-2, -2))])
    }

    #[test]
    fn exponent_cancellation() {
        let u = LaurentPoly::term(1, EpsPoly::constant(q(1)));
        let uinv = LaurentPoly::term(-1, EpsPoly::constant(q(1)));
        let prod = poly_mul(&u, &uinv);
        assert_eq!(prod, LaurentPoly::term(0, EpsPoly::constant(q(1))));
    }

    #[test]
    fn zero_annihilates() {
        let a = morse_lambda0(&ratio(34997, 1000));
        assert!(poly_mul(&LaurentPoly::zero(), &a).is_zero());
        assert!(poly_mul(&a, &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn lambda0_squared_expands_by_hand() {
        // (8Δu − (2ϵ+2)u⁻¹)² = 64Δ²u² − 16Δ(2ϵ+2) + (2ϵ+2)²u⁻²
        let delta = ratio(34997, 1000);
        let l0 = morse_lambda0(&delta);
        let sq = poly_mul(&l0, &l0);
        let d = delta.clone();
        let expected = LaurentPoly::from_terms([
            (2, EpsPoly::constant(d.clone() * d.clone() * q(64))),
            (0, eps(-2, -2).scale(&(d * q(16)))),
            (-2, eps(4, 8).add(&EpsPoly::monomial(q(4), 2))),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(sq.min_exp(), Some(-2));
        assert_eq!(sq.max_exp(), Some(2));
    }

    #[test]
    fn derivative_of_lambda0() {
        // d/du (8Δu − (2ϵ+2)u⁻¹) = 8Δ + (2ϵ+2)u⁻²
        let delta = ratio(34997, 1000);
        let got = poly_diff_u(&morse_lambda0(&delta));
        let expected = LaurentPoly::from_terms([(0, EpsPoly::constant(delta * q(8))), (-2, eps(2, 2))]);
        assert_eq!(got, expected);
    }

    #[test]
    fn derivative_simple_cases() {
        let c = LaurentPoly::term(0, eps(3, 5));
        assert!(poly_diff_u(&c).is_zero());
        let u2 = LaurentPoly::term(2, EpsPoly::constant(q(1)));
        assert_eq!(poly_diff_u(&u2), LaurentPoly::term(1, EpsPoly::constant(q(2))));
    }

    #[test]
    fn eval_lambda0_at_one() {
        // 8Δ − (2ϵ+2) = −2ϵ + (8Δ − 2)
        let delta = ratio(34997, 1000);
        let got = poly_eval_u(&morse_lambda0(&delta), &q(1)).unwrap();
        assert_eq!(got, EpsPoly::linear(delta * q(8) - q(2), q(-2)));
        let u2 = LaurentPoly::term(2, EpsPoly::constant(q(1)));
        assert_eq!(poly_eval_u(&u2, &q(1)).unwrap(), EpsPoly::constant(q(1)));
    }

    #[test]
    fn eval_at_zero_with_negative_exponent_is_a_pole() {
        let uinv = LaurentPoly::term(-1, EpsPoly::constant(q(1)));
        assert!(matches!(poly_eval_u(&uinv, &q(0)), Err(AlgebraError::Pole { exponent: -1 })));
        // nonnegative exponents are fine at zero
        let p = LaurentPoly::from_terms([(0, eps(1, 1)), (3, eps(2, 0))]);
        assert_eq!(poly_eval_u(&p, &q(0)).unwrap(), eps(1, 1));
    }

    #[test]
    fn eps_poly_degree_and_trimming() {
        let p = EpsPoly::from_coeffs(vec![q(1), q(0), q(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(EpsPoly::<Q>::from_coeffs(vec![q(0)]).degree(), None);
        let a = eps(1, 2);
        let b = EpsPoly::from_coeffs(vec![q(3), q(0), q(5)]);
        assert_eq!(a.mul(&b).degree(), Some(3));
    }

    #[test]
    fn div_rem_and_gcd() {
        // (ϵ−1)(ϵ+2)² and (ϵ+2)(ϵ−3)
        let p = eps(-1, 1).mul(&eps(2, 1)).mul(&eps(2, 1));
        let d = eps(2, 1).mul(&eps(-3, 1));
        let (qt, r) = p.div_rem(&d).unwrap();
        assert_eq!(qt.mul(&d).add(&r), p);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
        assert_eq!(p.gcd(&d), eps(2, 1));
        assert!(p.div_rem(&EpsPoly::zero()).is_none());
    }

    #[test]
    fn specialize_then_eval_matches_eval() {
        let delta = ratio(3, 2);
        let l0 = morse_lambda0(&delta);
        let e = ratio(7, 3);
        let u = ratio(5, 4);
        let direct = l0.eval(&u, &e).unwrap();
        let spec = l0.specialize(&e).eval_u(&u).unwrap();
        assert_eq!(spec, EpsPoly::constant(direct));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn eps_poly() -> impl Strategy<Value = EpsPoly<Q>> {
            prop::collection::vec(-9i64..=9, 0..4).prop_map(|c| EpsPoly::from_coeffs(c.into_iter().map(q).collect()))
        }

        fn laurent() -> impl Strategy<Value = LaurentPoly<Q>> {
            prop::collection::vec((-3i32..=3, eps_poly()), 0..4).prop_map(LaurentPoly::from_terms)
        }

        proptest! {
            #[test]
            fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(poly_mul(&a, &b), poly_mul(&b, &a));
                prop_assert_eq!(poly_mul(&poly_mul(&a, &b), &c), poly_mul(&a, &poly_mul(&b, &c)));
                prop_assert_eq!(poly_mul(&a, &b.add(&c)), poly_mul(&a, &b).add(&poly_mul(&a, &c)));
                prop_assert!(a.sub(&a).is_zero());
            }

            #[test]
            fn product_rule(a in laurent(), b in laurent()) {
                let lhs = poly_diff_u(&poly_mul(&a, &b));
                let rhs = poly_mul(&poly_diff_u(&a), &b).add(&poly_mul(&a, &poly_diff_u(&b)));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn eval_at_one_sums_coefficients(a in laurent()) {
                let sum = a.terms().fold(EpsPoly::zero(), |acc, (_, c)| acc.add(c));
                prop_assert_eq!(poly_eval_u(&a, &q(1)).unwrap(), sum);
            }

            #[test]
            fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), num in 1i64..7, den in 1i64..7) {
                let u = ratio(num, den);
                let lhs = poly_eval_u(&poly_mul(&a, &b), &u).unwrap();
                let rhs = poly_eval_u(&a, &u).unwrap().mul(&poly_eval_u(&b, &u).unwrap());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn division_reconstructs(a in eps_poly(), b in eps_poly()) {
                prop_assume!(!b.is_zero());
                let (quot, rem) = a.div_rem(&b).unwrap();
                prop_assert_eq!(quot.mul(&b).add(&rem), a);
                prop_assert!(rem.is_zero() || rem.degree() < b.degree());
            }
        }
    }
}
