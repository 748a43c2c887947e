//! The asymptotic iteration method for `f'' = λ₀ f' + s₀ f`.
//!
//! λ₀ and s₀ are Laurent polynomials in `u` whose coefficients are
//! polynomials in an unknown eigenparameter ϵ. Iterating
//!
//! ```text
//! λ_k = λ'_{k-1} + s_{k-1} + λ₀ λ_{k-1}
//! s_k = s'_{k-1} + s₀ λ_{k-1}
//! ```
//!
//! and evaluating `δ_k = s_k λ_{k-1} − s_{k-1} λ_k` at a fixed `u*` leaves a
//! polynomial in ϵ whose stable roots are the eigenvalues.

use dashu_int::UBig;

use crate::error::{AimError, SpectrumError};
use crate::poly::{EpsPoly, LaurentPoly};
use crate::roots::{real_roots_with, RealRoot, RootOptions};
use crate::scalar::{rational_abs, rational_signum, BigReal, Precision, Rational, Scalar};

/// How roots of δ are mapped to level indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelOrdering {
    /// Level 0 is the smallest root (oscillator energies).
    Ascending,
    /// Level 0 is the largest root (Morse ϵ).
    Descending,
}

/// One AIM instance `f'' = λ₀ f' + s₀ f`.
#[derive(Debug, Clone, PartialEq)]
pub struct AimProblem<S: Scalar> {
    lambda0: LaurentPoly<S>,
    s0: LaurentPoly<S>,
    u_star: S,
    label: String,
    window: (Rational, Rational),
    ordering: LevelOrdering,
    denominator_hint: Option<UBig>,
}

impl<S: Scalar> AimProblem<S> {
    /// Default search window for eigenvalues: `[-1000, 1000]`.
    pub fn new(
        lambda0: LaurentPoly<S>,
        s0: LaurentPoly<S>,
        u_star: S,
        label: impl Into<String>,
    ) -> Result<Self, AimError> {
        if lambda0.is_zero() {
            return Err(AimError::ZeroLambda0);
        }
        if u_star.signum() <= 0 {
            return Err(AimError::NonPositiveEvaluationPoint);
        }
        Ok(AimProblem {
            lambda0,
            s0,
            u_star,
            label: label.into(),
            window: (Rational::from(-1000), Rational::from(1000)),
            ordering: LevelOrdering::Ascending,
            denominator_hint: None,
        })
    }

    pub fn with_window(mut self, lo: Rational, hi: Rational) -> Result<Self, AimError> {
        if lo >= hi {
            return Err(AimError::InvalidRequest("search window must have lo < hi".into()));
        }
        self.window = (lo, hi);
        Ok(self)
    }

    pub fn with_ordering(mut self, ordering: LevelOrdering) -> Self {
        self.ordering = ordering;
        self
    }

    /// Expected denominator size of exact eigenvalues; widens the rational search when it exceeds 10⁶.
    pub fn with_denominator_hint(mut self, hint: UBig) -> Self {
        self.denominator_hint = Some(hint);
        self
    }

    pub fn with_u_star(mut self, u_star: S) -> Result<Self, AimError> {
        if u_star.signum() <= 0 {
            return Err(AimError::NonPositiveEvaluationPoint);
        }
        self.u_star = u_star;
        Ok(self)
    }

    pub fn lambda0(&self) -> &LaurentPoly<S> {
        &self.lambda0
    }

    pub fn s0(&self) -> &LaurentPoly<S> {
        &self.s0
    }

    pub fn u_star(&self) -> &S {
        &self.u_star
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn window(&self) -> (&Rational, &Rational) {
        (&self.window.0, &self.window.1)
    }

    pub fn ordering(&self) -> LevelOrdering {
        self.ordering
    }

    pub fn context(&self) -> S::Context {
        self.u_star.context()
    }

    /// Same problem with ϵ fixed to `eps`; every coefficient becomes a constant.
    pub fn specialize(&self, eps: &S) -> Self {
        AimProblem { lambda0: self.lambda0.specialize(eps), s0: self.s0.specialize(eps), ..self.clone() }
    }

    fn root_options(&self, tol: Rational) -> RootOptions {
        let opts = RootOptions::new(tol, S::MODE);
        match &self.denominator_hint {
            Some(h) => opts.with_max_denominator(h.clone()),
            None => opts,
        }
    }

    fn sort_levels(&self, roots: &mut [RealRoot]) {
        if self.ordering == LevelOrdering::Descending {
            roots.reverse();
        }
    }
}

/// State after `k` iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct AimTrace<S: Scalar> {
    pub k: usize,
    pub lambda: LaurentPoly<S>,
    pub s: LaurentPoly<S>,
    /// `δ_k(u*)`; `None` at `k = 0`, where δ is undefined.
    pub delta_at_u: Option<EpsPoly<S>>,
}

/// One application of the recursion: `(λ_{k-1}, s_{k-1}) ↦ (λ_k, s_k)`.
pub fn aim_step<S: Scalar>(
    lambda_prev: &LaurentPoly<S>,
    s_prev: &LaurentPoly<S>,
    lambda0: &LaurentPoly<S>,
    s0: &LaurentPoly<S>,
) -> (LaurentPoly<S>, LaurentPoly<S>) {
    let lambda = lambda_prev.diff_u().add(s_prev).add(&lambda0.mul(lambda_prev));
    let s = s_prev.diff_u().add(&s0.mul(lambda_prev));
    (lambda, s)
}

/// `s_k λ_{k-1} − s_{k-1} λ_k` at `u = u_star`.
pub fn delta_poly<S: Scalar>(
    current: &AimTrace<S>,
    previous: &AimTrace<S>,
    u_star: &S,
) -> Result<EpsPoly<S>, AimError> {
    if current.k != previous.k + 1 {
        return Err(AimError::InvalidRequest(format!(
            "δ needs consecutive iterations, got k = {} and {}",
            previous.k, current.k
        )));
    }
    let sk = current.s.eval_u(u_star)?;
    let lk = current.lambda.eval_u(u_star)?;
    let sp = previous.s.eval_u(u_star)?;
    let lp = previous.lambda.eval_u(u_star)?;
    Ok(sk.mul(&lp).sub(&sp.mul(&lk)))
}

/// Iterator over [`AimTrace`]s starting at `k = 0`.
pub struct AimIter<'a, S: Scalar> {
    problem: &'a AimProblem<S>,
    current: Option<AimTrace<S>>,
    evaluated: Option<(EpsPoly<S>, EpsPoly<S>)>,
}

pub fn iterate<S: Scalar>(problem: &AimProblem<S>) -> AimIter<'_, S> {
    AimIter { problem, current: None, evaluated: None }
}

impl<S: Scalar> AimIter<'_, S> {
    fn eval_pair(&self, lambda: &LaurentPoly<S>, s: &LaurentPoly<S>) -> (EpsPoly<S>, EpsPoly<S>) {
        // u* > 0, so no pole is possible
        let u = &self.problem.u_star;
        (lambda.eval_u(u).expect("u* > 0"), s.eval_u(u).expect("u* > 0"))
    }
}

impl<S: Scalar> Iterator for AimIter<'_, S> {
    type Item = AimTrace<S>;

    fn next(&mut self) -> Option<AimTrace<S>> {
        let p = self.problem;
        let next = match &self.current {
            None => {
                self.evaluated = Some(self.eval_pair(&p.lambda0, &p.s0));
                AimTrace { k: 0, lambda: p.lambda0.clone(), s: p.s0.clone(), delta_at_u: None }
            }
            Some(prev) => {
                let (lambda, s) = aim_step(&prev.lambda, &prev.s, &p.lambda0, &p.s0);
                let (lk, sk) = self.eval_pair(&lambda, &s);
                let (lp, sp) = self.evaluated.take().expect("set with current");
                let delta = sk.mul(&lp).sub(&sp.mul(&lk));
                self.evaluated = Some((lk, sk));
                AimTrace { k: prev.k + 1, lambda, s, delta_at_u: Some(delta) }
            }
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `δ_k(u*)` as a polynomial in ϵ, for `k ≥ 1`.
pub fn delta_at<S: Scalar>(problem: &AimProblem<S>, k: usize) -> Result<EpsPoly<S>, AimError> {
    if k == 0 {
        return Err(AimError::InvalidRequest("δ is defined from k = 1".into()));
    }
    let trace = iterate(problem).nth(k).expect("iterator is infinite");
    Ok(trace.delta_at_u.expect("k >= 1"))
}

/// A converged eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueResult<S> {
    /// Level index under the problem's ordering; `None` for a bracketed solve.
    pub n: Option<usize>,
    pub epsilon: S,
    /// The value is an exact zero of δ (exact mode only).
    pub exact: bool,
    /// First iteration at which the root agreed with the previous iteration.
    pub k_converged: usize,
    /// Upper bound on the distance from `epsilon` to a zero of `δ_{k_converged}`.
    pub residual: BigReal,
    /// Distance between the roots of `δ_k` and `δ_{k-1}`.
    pub stability_gap: BigReal,
}

fn big(r: &Rational) -> BigReal {
    BigReal::from_rational(r, Precision::default())
}

/// Eigenvalues as roots of δ_k stable across consecutive iterations.
///
/// Levels are accepted in order: level `n` is taken at the first `k` where the
/// `n`-th root of δ_k agrees with the `n`-th root of δ_{k-1} to within `tol`,
/// provided levels `0..n` are already accepted.
pub fn eigenvalues_symbolic<S: Scalar>(
    problem: &AimProblem<S>,
    n_levels: usize,
    k_max: usize,
    tol: &Rational,
) -> Result<Vec<EigenvalueResult<S>>, SpectrumError<S>> {
    if n_levels == 0 {
        return Err(AimError::InvalidRequest("at least one level must be requested".into()).into());
    }
    if k_max < n_levels + 2 {
        return Err(
            AimError::InvalidRequest(format!("k_max = {k_max} is below n_levels + 2 = {}", n_levels + 2)).into()
        );
    }
    if rational_signum(tol) <= 0 {
        return Err(AimError::Algebra(crate::error::AlgebraError::InvalidTolerance).into());
    }
    let opts = problem.root_options(tol / Rational::from(4));
    let (lo, hi) = problem.window();
    let ctx = problem.context();
    let mut accepted: Vec<EigenvalueResult<S>> = Vec::new();
    let mut prev_roots: Option<Vec<RealRoot>> = None;
    let mut last_count = 0;
    for trace in iterate(problem).skip(1).take(k_max) {
        let delta = trace.delta_at_u.expect("k >= 1");
        let mut roots = if delta.is_zero() {
            Vec::new()
        } else {
            real_roots_with(&delta, lo, hi, &opts).map_err(AimError::from)?
        };
        problem.sort_levels(&mut roots);
        last_count = roots.len();
        if let Some(prev) = &prev_roots {
            while accepted.len() < n_levels {
                let n = accepted.len();
                let (Some(now), Some(before)) = (roots.get(n), prev.get(n)) else { break };
                let gap = rational_abs(&(&now.value - &before.value));
                if gap > *tol {
                    break;
                }
                accepted.push(EigenvalueResult {
                    n: Some(n),
                    epsilon: S::from_rational(&now.value, ctx),
                    exact: now.exact,
                    k_converged: trace.k,
                    residual: big(&now.radius),
                    stability_gap: big(&gap),
                });
            }
        }
        if accepted.len() == n_levels {
            return Ok(accepted);
        }
        prev_roots = Some(roots);
    }
    if last_count < n_levels {
        Err(SpectrumError::LevelCount { requested: n_levels, found: last_count, partial: accepted })
    } else {
        Err(SpectrumError::NotConverged { requested: n_levels, k_max, partial: accepted })
    }
}

const MAX_ROOT_FINDER_STEPS: usize = 10_000;

/// `δ_k(u*; ϵ)` for a numeric ϵ, by running the recursion on the specialised problem.
pub fn delta_value<S: Scalar>(problem: &AimProblem<S>, eps: &S, k: usize) -> Result<S, AimError> {
    let specialised = problem.specialize(eps);
    let delta = delta_at(&specialised, k)?;
    Ok(delta.coeff(0).cloned().unwrap_or_else(|| eps.zero_like()))
}

fn midpoint<S: Scalar>(a: &S, b: &S) -> S {
    a.add(b).div(&S::from_i64(2, a.context())).expect("2 != 0")
}

/// Bracketed zero of `ϵ ↦ δ_k(u*; ϵ)`: Illinois false position with bisection fallback.
fn bracket_root<S: Scalar>(problem: &AimProblem<S>, lo: &S, hi: &S, k: usize, tol: &S) -> Result<(S, S), AimError> {
    let f = |x: &S| delta_value(problem, x, k);
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let (mut fa, mut fb) = (f(&a)?, f(&b)?);
    if fa.is_zero() {
        return Ok((a, lo.zero_like()));
    }
    if fb.is_zero() {
        return Ok((b, lo.zero_like()));
    }
    if fa.signum() == fb.signum() {
        return Err(AimError::Bracket { lo: lo.to_f64(), hi: hi.to_f64() });
    }
    let two = S::from_i64(2, lo.context());
    let mut side = 0i32;
    let mut since_halved = 0;
    let mut last_width = b.sub(&a);
    for _ in 0..MAX_ROOT_FINDER_STEPS {
        let width = b.sub(&a);
        if width.cmp_value(&tol.mul(&two)) != std::cmp::Ordering::Greater {
            return Ok((midpoint(&a, &b), width.div(&two).expect("2 != 0")));
        }
        let x = if since_halved >= 3 || S::MODE == crate::scalar::Mode::Exact {
            since_halved = 0;
            last_width = width.clone();
            midpoint(&a, &b)
        } else {
            // false position: b − f(b)(b − a)/(f(b) − f(a))
            let denom = fb.sub(&fa);
            let candidate = fb.mul(&width).div(&denom).map(|t| b.sub(&t));
            match candidate {
                Some(c) if c.cmp_value(&a).is_gt() && c.cmp_value(&b).is_lt() => c,
                _ => midpoint(&a, &b),
            }
        };
        let fx = f(&x)?;
        if fx.is_zero() {
            return Ok((x, lo.zero_like()));
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
            if side == -1 {
                fb = fb.div(&two).expect("2 != 0");
            }
            side = -1;
        } else {
            b = x;
            fb = fx;
            if side == 1 {
                fa = fa.div(&two).expect("2 != 0");
            }
            side = 1;
        }
        let new_width = b.sub(&a);
        if new_width.mul(&two).cmp_value(&last_width).is_le() {
            since_halved = 0;
            last_width = new_width;
        } else {
            since_halved += 1;
        }
    }
    Err(AimError::RootFinder { iterations: MAX_ROOT_FINDER_STEPS })
}

/// Eigenvalue in a bracket by root-finding on `ϵ ↦ δ_k(u*; ϵ)` at fixed `k`.
///
/// The same bracket is solved at `k − 1` to measure the stability gap; if δ_{k−1}
/// has no sign change there, the iteration is too shallow and
/// [`AimError::Unstable`] is returned.
pub fn eigenvalue_numeric<S: Scalar>(
    problem: &AimProblem<S>,
    bracket: (&S, &S),
    k_fixed: usize,
    tol: &S,
) -> Result<EigenvalueResult<S>, AimError> {
    let (lo, hi) = bracket;
    if lo.cmp_value(hi).is_ge() {
        return Err(AimError::InvalidRequest("bracket must have lo < hi".into()));
    }
    if tol.signum() <= 0 {
        return Err(AimError::Algebra(crate::error::AlgebraError::InvalidTolerance));
    }
    if k_fixed < 2 {
        return Err(AimError::InvalidRequest("numeric mode needs k >= 2".into()));
    }
    let (root, radius) = bracket_root(problem, lo, hi, k_fixed, tol)?;
    let prev = match bracket_root(problem, lo, hi, k_fixed - 1, tol) {
        Ok((r, _)) => r,
        Err(AimError::Bracket { .. }) => {
            return Err(AimError::Unstable { k: k_fixed, k_prev: k_fixed - 1, gap: f64::INFINITY })
        }
        Err(e) => return Err(e),
    };
    let gap = root.sub(&prev).abs();
    Ok(EigenvalueResult {
        n: None,
        epsilon: root,
        exact: false,
        k_converged: k_fixed,
        residual: big(&radius.to_rational()),
        stability_gap: big(&gap.to_rational()),
    })
}

/// `s_k`, `λ_k` and their predecessors with ϵ fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoFunction<S: Scalar> {
    pub k: usize,
    pub s: LaurentPoly<S>,
    pub lambda: LaurentPoly<S>,
    pub s_prev: LaurentPoly<S>,
    pub lambda_prev: LaurentPoly<S>,
}

impl<S: Scalar> RhoFunction<S> {
    fn ratio(s: &LaurentPoly<S>, lambda: &LaurentPoly<S>, u: &S) -> Result<S, AimError> {
        let num = s.eval_u(u)?.eval(u);
        let den = lambda.eval_u(u)?.eval(u);
        num.div(&den).ok_or(AimError::Pole { u: u.to_f64() })
    }

    /// `ϱ(u) = s_k(u)/λ_k(u)`.
    pub fn eval(&self, u: &S) -> Result<S, AimError> {
        Self::ratio(&self.s, &self.lambda, u)
    }

    /// `s_{k-1}(u)/λ_{k-1}(u)`.
    pub fn eval_prev(&self, u: &S) -> Result<S, AimError> {
        Self::ratio(&self.s_prev, &self.lambda_prev, u)
    }

    /// `s_k λ_{k-1} − s_{k-1} λ_k` as a Laurent polynomial in `u`.
    pub fn cross_difference(&self) -> LaurentPoly<S> {
        self.s.mul(&self.lambda_prev).sub(&self.s_prev.mul(&self.lambda))
    }
}

/// The AIM ratio at iteration `k` with ϵ fixed to `eps`.
pub fn rho_function<S: Scalar>(problem: &AimProblem<S>, eps: &S, k: usize) -> Result<RhoFunction<S>, AimError> {
    if k == 0 {
        return Err(AimError::InvalidRequest("ϱ needs k >= 1".into()));
    }
    let specialised = problem.specialize(eps);
    let mut it = iterate(&specialised).skip(k - 1);
    let prev = it.next().expect("infinite");
    let cur = it.next().expect("infinite");
    Ok(RhoFunction { k, s: cur.s, lambda: cur.lambda, s_prev: prev.s, lambda_prev: prev.lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    type Q = Rational;

    fn c(v: i64) -> EpsPoly<Q> {
        EpsPoly::constant(Q::from(v))
    }

    fn oscillator() -> AimProblem<Q> {
        let lambda0 = LaurentPoly::term(1, c(2));
        let s0 = LaurentPoly::term(0, EpsPoly::linear(Q::ONE, Q::from(-1)));
        AimProblem::new(lambda0, s0, Q::ONE, "oscillator").unwrap().with_window(Q::from(-1), Q::from(100)).unwrap()
    }

    #[test]
    fn constant_coefficient_step() {
        let (l, s) = aim_step(
            &LaurentPoly::term(0, c(3)),
            &LaurentPoly::term(0, c(5)),
            &LaurentPoly::term(0, c(3)),
            &LaurentPoly::term(0, c(5)),
        );
        assert_eq!(l, LaurentPoly::term(0, c(5 + 9)));
        assert_eq!(s, LaurentPoly::term(0, c(15)));
    }

    #[test]
    fn rejects_invalid_problems() {
        let s0 = LaurentPoly::term(0, c(1));
        assert_eq!(AimProblem::new(LaurentPoly::zero(), s0.clone(), Q::ONE, "z").unwrap_err(), AimError::ZeroLambda0);
        assert_eq!(
            AimProblem::new(LaurentPoly::term(1, c(1)), s0, Q::ZERO, "z").unwrap_err(),
            AimError::NonPositiveEvaluationPoint
        );
    }

    #[test]
    fn oscillator_delta_by_hand() {
        // δ₁ = −(1−E)(3−E) = −E² + 4E − 3
        let d1 = delta_at(&oscillator(), 1).unwrap();
        assert_eq!(d1, EpsPoly::from_coeffs(vec![Q::from(-3), Q::from(4), Q::from(-1)]));
        let d2 = delta_at(&oscillator(), 2).unwrap();
        for e in [1, 3] {
            assert!(d2.eval(&Q::from(e)).is_zero());
        }
    }

    #[test]
    fn proportional_rows_give_zero_delta() {
        // λ₀ = c, s₀ = 0: λ_k = c^(k+1), s_k = 0
        let p = AimProblem::new(LaurentPoly::term(0, c(2)), LaurentPoly::zero(), Q::ONE, "prop").unwrap();
        assert!(delta_at(&p, 3).unwrap().is_zero());
    }

    #[test]
    fn oscillator_levels() {
        let got = eigenvalues_symbolic(&oscillator(), 4, 12, &ratio(1, 1_000_000_000)).unwrap();
        let values: Vec<_> = got.iter().map(|r| r.epsilon.clone()).collect();
        assert_eq!(values, [1, 3, 5, 7].map(Q::from).to_vec());
        assert!(got.iter().all(|r| r.exact));
    }

    #[test]
    fn spectrum_preconditions() {
        let tol = ratio(1, 1000);
        assert!(matches!(eigenvalues_symbolic(&oscillator(), 0, 10, &tol), Err(SpectrumError::Aim(_))));
        assert!(matches!(eigenvalues_symbolic(&oscillator(), 5, 6, &tol), Err(SpectrumError::Aim(_))));
        let narrow = oscillator().with_window(Q::ZERO, Q::from(6)).unwrap();
        match eigenvalues_symbolic(&narrow, 5, 10, &tol) {
            Err(SpectrumError::LevelCount { requested: 5, found: 3, partial }) => assert_eq!(partial.len(), 3),
            other => panic!("expected a level-count failure, got {other:?}"),
        }
    }

    #[test]
    fn numeric_oscillator_ground_state() {
        let p = oscillator();
        let r = eigenvalue_numeric(&p, (&ratio(1, 2), &ratio(3, 2)), 20, &ratio(1, 10i64.pow(15))).unwrap();
        assert_eq!(r.epsilon, Q::ONE);
        assert!(matches!(
            eigenvalue_numeric(&p, (&ratio(3, 2), &ratio(5, 2)), 20, &ratio(1, 1000)),
            Err(AimError::Bracket { .. })
        ));
    }

    #[test]
    fn oscillator_ground_rho_vanishes() {
        let rho = rho_function(&oscillator(), &Q::ONE, 5).unwrap();
        assert!(rho.eval(&ratio(3, 2)).unwrap().is_zero());
        assert!(rho.cross_difference().is_zero());
    }

    mod props {
        use super::*;
        use crate::poly::{poly_diff_u, poly_eval_u};
        use proptest::prelude::*;

        fn laurent() -> impl Strategy<Value = LaurentPoly<Q>> {
            prop::collection::vec((-2i32..=2, -5i64..=5, -3i64..=3), 1..4).prop_map(|terms| {
                LaurentPoly::from_terms(terms.into_iter().map(|(e, a, b)| (e, EpsPoly::linear(Q::from(a), Q::from(b)))))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            // δ_k = s'λ − sλ' + s₀λ² − s² − λ₀λs with (λ, s) = (λ_{k−1}, s_{k−1})
            #[test]
            fn delta_matches_riccati_form(lambda0 in laurent(), s0 in laurent(), num in 1i64..5, den in 1i64..5) {
                prop_assume!(!lambda0.is_zero());
                let u = ratio(num, den);
                let p = AimProblem::new(lambda0.clone(), s0.clone(), u.clone(), "random").unwrap();
                let traces: Vec<_> = iterate(&p).take(5).collect();
                for pair in traces.windows(2) {
                    let (prev, cur) = (&pair[0], &pair[1]);
                    let (l, s) = (&prev.lambda, &prev.s);
                    let form = poly_diff_u(s).mul(l)
                        .sub(&s.mul(&poly_diff_u(l)))
                        .add(&s0.mul(l).mul(l))
                        .sub(&s.mul(s))
                        .sub(&lambda0.mul(l).mul(s));
                    let want = poly_eval_u(&form, &u).unwrap();
                    prop_assert_eq!(cur.delta_at_u.clone().unwrap(), want, "k = {}", cur.k);
                }
            }
        }
    }
}
