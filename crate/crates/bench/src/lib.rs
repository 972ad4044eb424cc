//! Shared inputs for the benchmarks.

use nuvarov_core::oracle::{discretize_morse_x, discretize_radial_s, GridSpec, TridiagSym};
use nuvarov_core::{MorseModel, NuProblem, Poly};

/// The two-level Morse well `V = e^{-2x} - 5 e^{-x}` with `m = 1/2`.
pub fn morse_well() -> MorseModel {
    MorseModel::new(1.0, 5.0, 1.0, 0.5, 1.0).expect("valid model")
}

pub fn morse_operator(points: usize) -> TridiagSym {
    let g = GridSpec::new(-4.0, 16.0, points).expect("valid grid");
    discretize_morse_x(&morse_well(), &g)
}

/// Attractive `-5/s` radial operator on `(1e-4, 60)`.
pub fn coulomb_operator(points: usize) -> TridiagSym {
    let g = GridSpec::new(1e-4, 60.0, points).expect("valid grid");
    discretize_radial_s(-5.0, 0.0, &g).expect("grid away from the origin")
}

/// `psi'' + psi'/s + (-s^2 + 5 s + xi3)/s^2 psi = 0`.
pub fn morse_nu_problem(xi3: f64) -> NuProblem {
    NuProblem::new(Poly::constant(1.0), Poly::new(xi3, 5.0, -1.0)).expect("sigma = s problem")
}
