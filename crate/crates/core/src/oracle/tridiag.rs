//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::OracleError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagSym {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagSym {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self, OracleError> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(OracleError::Shape { diag: diag.len(), offdiag: offdiag.len() });
        }
        Ok(Self { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Number of eigenvalues strictly below `mu`.
    ///
    /// Counts negative pivots of the LDL^T factorization of `T - mu I`.
    pub fn sturm_count(&self, mu: f64) -> usize {
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut pivot = 1.0;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 { 0.0 } else { self.offdiag[i - 1] * self.offdiag[i - 1] / pivot };
            pivot = self.diag[i] - mu - coupling;
            if pivot == 0.0 {
                pivot = -tiny;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin disc `(center, radius)` of each row.
    pub fn gershgorin_discs(&self) -> Vec<(f64, f64)> {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
                (self.diag[i], left + right)
            })
            .collect()
    }

    /// Interval containing the whole spectrum.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        self.gershgorin_discs()
            .into_iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (c, r)| (lo.min(c - r), hi.max(c + r)))
    }

    /// The `index`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, index: usize, tol: f64) -> f64 {
        let (glo, ghi) = self.gershgorin_bounds();
        let pad = 1e-12 * (glo.abs().max(ghi.abs()) + 1.0);
        let (mut lo, mut hi) = (glo - pad, ghi + pad);
        for _ in 0..2048 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= tol * mid.abs().max(1.0) || mid == lo || mid == hi {
                break;
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// The `k` smallest eigenvalues, ascending.
///
/// Each index is bisected independently from the same Gershgorin bracket, so
/// the parallel result is bit-identical to a sequential loop.
pub fn eigen_lowest_k(t: &TridiagSym, k: usize, tol: f64) -> Result<Vec<f64>, OracleError> {
    if k == 0 || k > t.len() {
        return Err(OracleError::KOutOfRange { k, n: t.len() });
    }
    Ok((0..k).into_par_iter().map(|i| t.eigenvalue(i, tol)).collect())
}
