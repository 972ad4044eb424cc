use super::{OracleError, OracleResult};

/// Nested grids must refine by this factor in spacing, up to `RATIO_SLACK`.
const REFINEMENT: f64 = 2.0;
const RATIO_SLACK: f64 = 1e-3;

fn spacing_ratio(coarse: &OracleResult, fine: &OracleResult) -> Result<f64, OracleError> {
    let (c, f) = (&coarse.grid, &fine.grid);
    let span = (c.hi - c.lo).abs().max(1.0);
    if (c.lo - f.lo).abs() > 1e-12 * span || (c.hi - f.hi).abs() > 1e-12 * span {
        return Err(OracleError::GridMismatch(format!(
            "domains differ: [{}, {}] vs [{}, {}]",
            c.lo, c.hi, f.lo, f.hi
        )));
    }
    let ratio = c.spacing() / f.spacing();
    if (ratio - REFINEMENT).abs() > RATIO_SLACK * REFINEMENT {
        return Err(OracleError::GridMismatch(format!("spacing ratio {ratio} is not 2")));
    }
    Ok(ratio)
}

/// Second-order extrapolation `(r^2 E_fine - E_coarse) / (r^2 - 1)` with the
/// actual spacing ratio `r`.
pub fn richardson(coarse: &OracleResult, fine: &OracleResult) -> Result<OracleResult, OracleError> {
    let r2 = spacing_ratio(coarse, fine)?.powi(2);
    let k = coarse.eigenvalues.len().min(fine.eigenvalues.len());
    let estimate = coarse.eigenvalues[..k]
        .iter()
        .zip(&fine.eigenvalues[..k])
        .map(|(c, f)| (r2 * f - c) / (r2 - 1.0))
        .collect();
    Ok(OracleResult {
        eigenvalues: fine.eigenvalues.clone(),
        grid: fine.grid,
        richardson_estimate: Some(estimate),
        convergence_order: fine.convergence_order,
    })
}

/// Observed order `log(|E1 - E2| / |E2 - E3|) / log(r)` for eigenvalue `index`
/// from three successively refined grids.
pub fn convergence_order(grids: [&OracleResult; 3], index: usize) -> Result<f64, OracleError> {
    let r = spacing_ratio(grids[0], grids[1])?;
    spacing_ratio(grids[1], grids[2])?;
    let e = grids.map(|g| g.eigenvalues.get(index).copied());
    let [Some(e1), Some(e2), Some(e3)] = e else {
        return Err(OracleError::GridMismatch(format!("eigenvalue {index} missing on some grid")));
    };
    Ok(((e1 - e2).abs() / (e2 - e3).abs()).ln() / r.ln())
}
