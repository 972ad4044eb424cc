//! Exact bound states of the exponential position-dependent-mass Schrödinger
//! equation and of the generalized Morse potential via the Nikiforov–Uvarov
//! method, together with an independent finite-difference eigenvalue oracle.
//!
//! - [`specfun`]: degree-two polynomials and generalized Laguerre polynomials.
//! - [`nu`]: the NU reduction for `sigma(s) = s`.
//! - [`pdm`]: the position-dependent-mass model, Case I / Case II levels.
//! - [`morse`]: the constant-mass Morse problem and its PDM correspondence.
//! - [`oracle`]: Sturm-sequence bisection on finite-difference discretizations.
//! - [`quadrature`]: composite Gauss–Legendre rules for overlap integrals.
//! - [`verify`]: closed-form levels compared with the oracle.

pub mod morse;
pub mod nu;
pub mod oracle;
pub mod pdm;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use morse::{MorseLevel, MorseModel, PdmCorrespondence};
pub use nu::{FactorizedSolution, NuCandidate, NuProblem};
pub use pdm::{AmbiguityParams, BoundState, Branch, ExpMassModel, XiParams};
pub use specfun::{LaguerreSpec, Poly};
pub use verify::VerificationReport;

/// An ODE residual together with the sum of magnitudes of its terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub value: f64,
    pub scale: f64,
}

impl Residual {
    pub fn from_terms(terms: &[f64]) -> Self {
        Self { value: terms.iter().sum(), scale: terms.iter().map(|t| t.abs()).sum() }
    }

    /// `|value| / scale`, or `|value|` when every term vanishes.
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.value.abs() / self.scale
        } else {
            self.value.abs()
        }
    }
}
