use aim_core::*;

fn lithium_delta() -> Rational {
    ratio(34997, 1000)
}

fn exact_levels(delta: &Rational, levels: usize) -> Vec<EigenvalueResult<Rational>> {
    let r = ReducedMorse::from_delta(delta.clone()).unwrap();
    let p = build_aim_problem::<Rational>(&r, ());
    eigenvalues_symbolic(&p, levels, 2 * levels, &ratio(1, 10i64.pow(18))).unwrap()
}

#[test]
fn all_bound_levels_are_exact_closed_form_roots() {
    let delta = lithium_delta();
    assert_eq!(bound_state_count(&delta).unwrap(), 70);
    let levels = exact_levels(&delta, 25);
    assert_eq!(levels.len(), 25);
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(level.n, Some(n));
        assert!(level.exact, "level {n} not detected as exact");
        assert_eq!(level.epsilon, epsilon_closed_form(&delta, n), "root of level {n}");
        let energy = epsilon_to_energy(&level.epsilon, &delta);
        assert_eq!(energy, closed_form_spectrum(&delta, n).unwrap(), "energy of level {n}");
    }
    for pair in levels.windows(2) {
        assert_eq!(&pair[0].epsilon - &pair[1].epsilon, Rational::from(2));
    }
}

#[test]
fn convergence_depth_stays_within_eighteen_plus_n() {
    let levels = exact_levels(&lithium_delta(), 11);
    for (n, level) in levels.iter().enumerate() {
        assert!(level.k_converged <= 18 + n, "level {n} needed k = {}", level.k_converged);
    }
}

/// `δ_k` at `ϵ = (8Δ − 4n − 3)/2` is a polynomial in `Δ` of degree at most `2k + 3`;
/// vanishing at `2k + 4` distinct `Δ` makes it vanish identically.
#[test]
fn closed_form_roots_hold_for_every_delta() {
    for n in 0..=5usize {
        let k = 2 * n + 2;
        for j in 0..(2 * k + 4) as i64 {
            let delta = ratio(7 + 13 * j, 5);
            let r = ReducedMorse::from_delta(delta.clone()).unwrap();
            let p = build_aim_problem::<Rational>(&r, ());
            let d = delta_at(&p, k).unwrap();
            assert!(d.eval(&epsilon_closed_form(&delta, n)).is_zero(), "n = {n}, Δ = {delta}");
        }
    }
}

#[test]
fn energies_in_wavenumbers() {
    let params = MorseParameters::lithium_dimer();
    let reduced = reduce_units(&params).unwrap();
    let e0 = closed_form_spectrum(&reduced.delta().clone(), 0).unwrap();
    let cm = energy_to_wavenumbers(&e0, &reduced).unwrap().to_f64().value();
    // ground state lies half a quantum above the well bottom, less anharmonicity
    let hw = reduced.hbar_omega0_cm1().unwrap().to_f64().value();
    assert!((cm + params.de_cm1 - 0.5 * hw).abs() < 0.01 * hw, "{cm}");
}

#[test]
fn shallow_wells_have_few_levels() {
    let delta = ratio(3, 2);
    let count = bound_state_count(&delta).unwrap();
    assert_eq!(count, 3);
    let levels = exact_levels(&delta, count);
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(level.epsilon, epsilon_closed_form(&delta, n));
    }
    assert!(closed_form_spectrum(&delta, count).is_err());
}
