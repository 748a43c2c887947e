//! Prints the Morse ⁷Li₂ spectrum at Δ = 34.997 from the exact AIM solve.

use std::time::Instant;

use aim_core::format::format_significant;
use aim_core::{build_aim_problem, eigenvalues_symbolic, epsilon_to_energy, ratio, Rational, ReducedMorse};

fn main() {
    let reduced = ReducedMorse::from_delta(ratio(34997, 1000)).expect("Δ > 3/8");
    let problem = build_aim_problem::<Rational>(&reduced, ());
    let start = Instant::now();
    let levels = eigenvalues_symbolic(&problem, 25, 50, &ratio(1, 1_000_000_000_000)).expect("converges");
    for level in &levels {
        let energy = epsilon_to_energy(&level.epsilon, reduced.delta());
        println!(
            "{:>2}  k={:>2}  ϵ={}  ε={}",
            level.n.unwrap_or_default(),
            level.k_converged,
            format_significant(&level.epsilon, 19),
            format_significant(&energy, 19)
        );
    }
    eprintln!("elapsed {:.2?}", start.elapsed());
}
