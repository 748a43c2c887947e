//! Asymptotic iteration method (AIM) eigensolver for second-order linear ODEs,
//! with a complete treatment of the Morse oscillator.

pub mod aim;
pub mod constants;
pub mod eigenfunction;
pub mod error;
pub mod format;
pub mod morse;
pub mod oracle;
pub mod poly;
pub mod quadrature;
pub mod reference;
pub mod roots;
pub mod scalar;

pub use aim::{
    aim_step, delta_at, delta_poly, eigenvalue_numeric, eigenvalues_symbolic, iterate, rho_function, AimProblem,
    AimTrace, EigenvalueResult, LevelOrdering, RhoFunction,
};
pub use eigenfunction::{assemble, inner_product, series_solve, Domain, SeriesSolution, Wavefunction};
pub use error::{
    AimError, AlgebraError, EigenfunctionError, MorseError, OracleError, QuadratureError, ReferenceError, SpectrumError,
};
pub use morse::{
    bound_state_count, build_aim_problem, closed_form_spectrum, energy_to_wavenumbers, epsilon_closed_form,
    epsilon_to_energy, potential_eval, reduce_units, MorseParameters, ReducedMorse,
};
pub use oracle::{fd_spectrum, oscillator_problem, FdSpectrum, GridSpec, OracleModel};
pub use poly::{poly_diff_u, poly_eval_u, poly_mul, EpsPoly, LaurentPoly};
pub use reference::{table1, ReferenceTable};
pub use roots::{real_roots, real_roots_with, RealRoot, RootOptions};
pub use scalar::{parse_rational, ratio, BigReal, Mode, Precision, Rational, Scalar};
