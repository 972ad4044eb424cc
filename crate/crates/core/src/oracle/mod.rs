//! Finite-difference eigenvalue oracle.
//!
//! Three self-adjoint discretizations share one solver: the position-dependent
//! mass operator `-d/dx (1/m) d/dx + V_eff` in `x`, the radial form
//! `-chi'' + (xi2/s + c/s^2) chi` in `s`, and the constant-mass Morse operator
//! in `x`. All use three-point stencils with Dirichlet ends and are solved by
//! Sturm-sequence bisection. Nothing here reads a closed-form energy.

mod discretize;
mod richardson;
mod tridiag;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use discretize::{discretize_morse_x, discretize_pdm_x, discretize_radial_s, morse_domain_warning};
pub use richardson::{convergence_order, richardson};
pub use tridiag::{eigen_lowest_k, TridiagSym};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("grid needs hi > lo and at least {min} interior points, got [{lo}, {hi}] with {points}")]
    BadGrid { lo: f64, hi: f64, points: usize, min: usize },
    #[error("radial grid must start at s > 0, got {0}")]
    RadialOrigin(f64),
    #[error("diagonal of length {diag} does not fit off-diagonal of length {offdiag}")]
    Shape { diag: usize, offdiag: usize },
    #[error("requested {k} eigenvalues from a matrix of size {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("grids are not nested: {0}")]
    GridMismatch(String),
}

/// Minimum number of interior nodes.
pub const MIN_POINTS: usize = 16;

/// Uniform grid of `points` interior nodes on `(lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, points: usize) -> Result<Self, OracleError> {
        if !(hi > lo) || !lo.is_finite() || !hi.is_finite() || points < MIN_POINTS {
            return Err(OracleError::BadGrid { lo, hi, points, min: MIN_POINTS });
        }
        Ok(Self { lo, hi, points })
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.points + 1) as f64
    }

    /// Interior node `i` (0-based).
    pub fn node(&self, i: usize) -> f64 {
        self.lo + (i + 1) as f64 * self.spacing()
    }

    pub fn with_points(&self, points: usize) -> Result<Self, OracleError> {
        Self::new(self.lo, self.hi, points)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub eigenvalues: Vec<f64>,
    pub grid: GridSpec,
    pub richardson_estimate: Option<Vec<f64>>,
    pub convergence_order: Option<f64>,
}

/// Bisection tolerance used by [`solve`].
pub const BISECTION_TOL: f64 = 1e-13;

/// Lowest `k` eigenvalues of an assembled operator.
pub fn solve(t: &TridiagSym, grid: GridSpec, k: usize) -> Result<OracleResult, OracleError> {
    Ok(OracleResult {
        eigenvalues: eigen_lowest_k(t, k, BISECTION_TOL)?,
        grid,
        richardson_estimate: None,
        convergence_order: None,
    })
}
