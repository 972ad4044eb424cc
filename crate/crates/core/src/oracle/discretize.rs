use crate::morse::MorseModel;
use crate::pdm::{effective_potential_at, AmbiguityParams, ExpMassModel};

use super::{GridSpec, OracleError, TridiagSym};

/// `-d/dx (1/m) d/dx + V_eff` with `1/m` sampled at half nodes.
pub fn discretize_pdm_x(m: &ExpMassModel, p: &AmbiguityParams, g: &GridSpec) -> TridiagSym {
    let h = g.spacing();
    let h2 = h * h;
    let inv_mass = |x: f64| (2.0 * m.lambda * x).exp();
    let n = g.points;
    // coupling[i] = 1/m at x_i + h/2, for i = -1 .. n-1
    let coupling: Vec<f64> = (0..=n).map(|i| inv_mass(g.lo + (i as f64 + 0.5) * h) / h2).collect();
    let diag = (0..n)
        .map(|i| coupling[i] + coupling[i + 1] + effective_potential_at(m, p, g.node(i)))
        .collect();
    let offdiag = (1..n).map(|i| -coupling[i]).collect();
    TridiagSym::new(diag, offdiag).expect("consistent lengths")
}

/// `-chi'' + (xi2/s + centrifugal/s^2) chi` on `s > 0`.
///
/// Eigenvalues are `eps / lambda^2` for the PDM reduction.
pub fn discretize_radial_s(xi2: f64, centrifugal: f64, g: &GridSpec) -> Result<TridiagSym, OracleError> {
    if !(g.lo > 0.0) {
        return Err(OracleError::RadialOrigin(g.lo));
    }
    let h2 = g.spacing().powi(2);
    let diag = (0..g.points)
        .map(|i| {
            let s = g.node(i);
            2.0 / h2 + xi2 / s + centrifugal / (s * s)
        })
        .collect();
    TridiagSym::new(diag, vec![-1.0 / h2; g.points - 1])
}

/// `-(hbar^2/2m) psi'' + (V1 e^{-2 a x} - V2 e^{-a x}) psi`.
pub fn discretize_morse_x(m: &MorseModel, g: &GridSpec) -> TridiagSym {
    let kinetic = m.hbar * m.hbar / (2.0 * m.mass) / g.spacing().powi(2);
    let diag = (0..g.points).map(|i| 2.0 * kinetic + m.potential_at(g.node(i))).collect();
    TridiagSym::new(diag, vec![-kinetic; g.points - 1]).expect("consistent lengths")
}

/// Warns when the left wall is lower than ten times the well depth.
///
/// The well depth `V2^2 / (4 V1)` bounds every bound-state energy from below.
pub fn morse_domain_warning(m: &MorseModel, g: &GridSpec) -> Option<String> {
    let depth = m.v2 * m.v2 / (4.0 * m.v1);
    let wall = m.potential_at(g.lo);
    (wall < 10.0 * depth).then(|| {
        format!("left wall V({}) = {wall:.4e} is below 10x the well depth {depth:.4e}; widen the domain", g.lo)
    })
}
