use aim_core::*;

fn lithium() -> (OracleModel, GridSpec, Rational) {
    let delta = ratio(34997, 1000);
    let r = ReducedMorse::from_delta(delta.clone()).unwrap();
    let p = MorseParameters::lithium_dimer();
    let grid = GridSpec::new(p.x_e - 2.0, p.x_e + 8.0, 4000).unwrap();
    (OracleModel::from_reduced(&r, p.beta, p.x_e), grid, delta)
}

fn closed(delta: &Rational, n: usize) -> f64 {
    closed_form_spectrum(delta, n).unwrap().to_f64().value()
}

#[test]
fn ground_state_matches_table_value() {
    let (model, grid, _) = lithium();
    let fd = fd_spectrum(&model, &grid, 1).unwrap();
    assert!((fd.levels[0] + 34.49879).abs() < 1e-4, "{}", fd.levels[0]);
    assert!(!fd.resolution_warning);
}

#[test]
fn second_order_convergence_and_richardson() {
    let (model, grid, delta) = lithium();
    let coarse = fd_spectrum(&model, &grid, 6).unwrap().levels;
    let fine = fd_spectrum(&model, &grid.refined(), 6).unwrap().levels;
    for n in 0..6 {
        let c = closed(&delta, n);
        let ratio = (coarse[n] - c) / (fine[n] - c);
        assert!((ratio - 4.0).abs() < 0.05, "level {n}: ratio {ratio}");
        let extrapolated = (4.0 * fine[n] - coarse[n]) / 3.0;
        assert!((extrapolated - c).abs() * 10.0 < (fine[n] - c).abs(), "level {n}");
    }
}

#[test]
fn oracle_levels_are_ordered_and_below_dissociation() {
    let (model, grid, delta) = lithium();
    let fd = fd_spectrum(&model, &grid, 16).unwrap();
    assert!(fd.levels.windows(2).all(|w| w[0] < w[1]));
    for (n, e) in fd.levels.iter().enumerate() {
        // the three-point Laplacian overbinds, by roughly 1e-4 per level here
        let c = closed(&delta, n);
        assert!(*e < c && c - e < 2e-4 * (n + 1) as f64, "level {n}: {e} vs {c}");
    }
}

#[test]
fn oscillator_runs_through_the_generic_engine() {
    let p = oscillator_problem::<Rational>(());
    let levels = eigenvalues_symbolic(&p, 4, 12, &ratio(1, 10i64.pow(12))).unwrap();
    for (n, level) in levels.iter().enumerate() {
        assert!(level.exact);
        assert_eq!(level.epsilon, Rational::from(2 * n as i64 + 1));
    }
    let rho = rho_function(&p, &Rational::ONE, 6).unwrap();
    assert!(rho.eval(&ratio(7, 3)).unwrap().is_zero());
}
