//! Closed-form levels checked against the finite-difference oracle.
//!
//! Each comparison runs the oracle on three nested grids (about `N/4`, `N/2`, `N`),
//! extrapolates the two finest, and compares the extrapolated values with the
//! closed forms at a relative tolerance.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::morse::{self, MorseModel};
use crate::oracle::{
    convergence_order, discretize_morse_x, discretize_pdm_x, discretize_radial_s, morse_domain_warning, richardson,
    solve, GridSpec, OracleError, OracleResult, TridiagSym, MIN_POINTS,
};
use crate::pdm::{self, AmbiguityParams, ExpMassModel};

/// Tolerance of the `x`-space cross-check for the position-dependent mass.
pub const SECONDARY_TOL: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("the finest grid needs at least {min} points, got {points}")]
    TooCoarse { points: usize, min: usize },
    #[error("{points} interior points do not halve into nested grids; pick N + 1 divisible by 4 or N of at least 1000")]
    NotNestable { points: usize },
    #[error("the model has no bound level to compare")]
    NothingToCompare,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// `x`-space check of the position-dependent-mass operator on the window
/// matching the radial grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecondaryCheck {
    pub grid: GridSpec,
    pub oracle: Vec<f64>,
    pub richardson: Vec<f64>,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub closed_form: Vec<f64>,
    /// Eigenvalues on the finest grid.
    pub oracle: Vec<f64>,
    pub richardson: Vec<f64>,
    pub rel_err: Vec<f64>,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub grids: Vec<GridSpec>,
    pub convergence_order: Vec<f64>,
    /// Negative eigenvalues of the finest operator.
    pub oracle_bound_count: usize,
    pub secondary: Option<SecondaryCheck>,
    pub warnings: Vec<String>,
}

/// Interior points of the grid with twice the spacing (`N = 4000` gives 2000).
fn halve(points: usize) -> usize {
    ((points + 1) as f64 / 2.0).round() as usize - 1
}

fn nested_grids(fine: GridSpec) -> Result<[GridSpec; 3], VerifyError> {
    let min = 4 * MIN_POINTS;
    if fine.points < min {
        return Err(VerifyError::TooCoarse { points: fine.points, min });
    }
    let mid = halve(fine.points);
    let coarse = halve(mid);
    let nested = |a: usize, b: usize| ((a + 1) as f64 / (b + 1) as f64 - 2.0).abs() <= 2e-3;
    if !nested(fine.points, mid) || !nested(mid, coarse) {
        return Err(VerifyError::NotNestable { points: fine.points });
    }
    Ok([fine.with_points(coarse)?, fine.with_points(mid)?, fine])
}

fn check_tol(tol: f64) -> Result<(), VerifyError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(VerifyError::BadTolerance(tol))
    }
}

struct Ladder {
    results: [OracleResult; 3],
    extrapolated: Vec<f64>,
    finest: TridiagSym,
}

fn run_ladder<F>(grids: [GridSpec; 3], k: usize, assemble: F) -> Result<Ladder, VerifyError>
where
    F: Fn(&GridSpec) -> Result<TridiagSym, OracleError>,
{
    let mut finest = None;
    let mut results = Vec::with_capacity(3);
    for g in grids {
        let t = assemble(&g)?;
        results.push(solve(&t, g, k)?);
        finest = Some(t);
    }
    let results: [OracleResult; 3] = results.try_into().expect("three grids");
    let extrapolated = richardson(&results[1], &results[2])?.richardson_estimate.expect("estimate attached");
    Ok(Ladder { results, extrapolated, finest: finest.expect("three grids") })
}

fn rel_errors(closed: &[f64], approx: &[f64]) -> Vec<f64> {
    closed.iter().zip(approx).map(|(c, a)| (a - c).abs() / c.abs()).collect()
}

fn max_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(0.0, f64::max)
}

fn report(closed: Vec<f64>, ladder: Ladder, tol: f64, warnings: Vec<String>) -> Result<VerificationReport, VerifyError> {
    let k = closed.len();
    let rel_err = rel_errors(&closed, &ladder.extrapolated);
    let orders = (0..k)
        .map(|i| convergence_order([&ladder.results[0], &ladder.results[1], &ladder.results[2]], i))
        .collect::<Result<Vec<_>, _>>()?;
    let oracle_bound_count = ladder.finest.sturm_count(0.0);
    let max_rel_err = max_of(&rel_err);
    let pass = rel_err.len() == k && rel_err.iter().all(|e| *e <= tol) && oracle_bound_count >= k;
    Ok(VerificationReport {
        closed_form: closed,
        oracle: ladder.results[2].eigenvalues.clone(),
        richardson: ladder.extrapolated,
        rel_err,
        max_rel_err,
        tolerance: tol,
        pass,
        grids: ladder.results.iter().map(|r| r.grid).collect(),
        convergence_order: orders,
        oracle_bound_count,
        secondary: None,
        warnings,
    })
}

/// Compares the Morse levels (at most `max_levels`) with the `x`-space oracle
/// on `grid`, the finest of the three grids.
///
/// The report passes when every level is within `tol` relative and the oracle
/// finds at least as many negative eigenvalues as there are closed-form levels.
pub fn verify_morse(m: &MorseModel, grid: GridSpec, max_levels: usize, tol: f64) -> Result<VerificationReport, VerifyError> {
    check_tol(tol)?;
    let closed: Vec<f64> = morse::spectrum(m, max_levels).iter().map(|l| l.energy).collect();
    if closed.is_empty() {
        return Err(VerifyError::NothingToCompare);
    }
    let grids = nested_grids(grid)?;
    let warnings = morse_domain_warning(m, &grid).into_iter().collect();
    let ladder = run_ladder(grids, closed.len(), |g| Ok(discretize_morse_x(m, g)))?;
    let mut r = report(closed, ladder, tol, warnings)?;
    if r.oracle_bound_count != m.bound_count() {
        r.warnings.push(format!(
            "oracle finds {} negative eigenvalues, the closed form has {} bound levels",
            r.oracle_bound_count,
            m.bound_count()
        ));
    }
    Ok(r)
}

/// Compares the normalizable Case II levels (at most `max_levels`) with the
/// radial oracle on `s_grid`, the finest of three grids in `s = e^{-lambda x}`.
///
/// The radial operator uses the centrifugal strength `Q - 1/4` and its
/// eigenvalues are scaled by `lambda^2`. An `x`-space run of the full
/// Hamiltonian on the matching window is attached as a secondary check; it
/// does not decide `pass`.
pub fn verify_pdm(
    m: &ExpMassModel,
    p: &AmbiguityParams,
    s_grid: GridSpec,
    max_levels: usize,
    tol: f64,
) -> Result<VerificationReport, VerifyError> {
    check_tol(tol)?;
    let closed: Vec<f64> = pdm::physical_levels(m, p, max_levels).iter().map(|st| st.energy).collect();
    if closed.is_empty() {
        return Err(VerifyError::NothingToCompare);
    }
    let grids = nested_grids(s_grid)?;
    let xi = pdm::to_xi(m, p, 0.0);
    let l2 = m.lambda * m.lambda;
    let scaled = |t: TridiagSym| {
        let diag = t.diag().iter().map(|d| d * l2).collect();
        let off = t.offdiag().iter().map(|o| o * l2).collect();
        TridiagSym::new(diag, off)
    };
    let ladder = run_ladder(grids, closed.len(), |g| scaled(discretize_radial_s(xi.xi2, xi.q - 0.25, g)?))?;
    let mut r = report(closed, ladder, tol, Vec::new())?;
    r.secondary = Some(secondary_x_check(m, p, &s_grid, &r.closed_form)?);
    Ok(r)
}

fn secondary_x_check(
    m: &ExpMassModel,
    p: &AmbiguityParams,
    s_grid: &GridSpec,
    closed: &[f64],
) -> Result<SecondaryCheck, VerifyError> {
    let fine = GridSpec::new(m.x_of_s(s_grid.hi), m.x_of_s(s_grid.lo), s_grid.points)?;
    let coarse = fine.with_points(fine.points / 2)?;
    let k = closed.len();
    let a = solve(&discretize_pdm_x(m, p, &coarse), coarse, k)?;
    let b = solve(&discretize_pdm_x(m, p, &fine), fine, k)?;
    let extrapolated = richardson(&a, &b)?.richardson_estimate.expect("estimate attached");
    let max_rel_err = max_of(&rel_errors(closed, &extrapolated));
    Ok(SecondaryCheck {
        grid: fine,
        oracle: b.eigenvalues,
        richardson: extrapolated,
        max_rel_err,
        tolerance: SECONDARY_TOL,
        pass: max_rel_err <= SECONDARY_TOL,
    })
}
