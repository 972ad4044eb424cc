//! Constant-mass generalized Morse potential `V = V1 e^{-2 a x} - V2 e^{-a x}`
//! and its mapping onto the exponential-mass model.
//!
//! With `s = sqrt(V1) e^{-a x}` the Schrödinger equation becomes the
//! `eta = 1/2` member of the reduced PDM equation:
//!
//! ```text
//! psi'' + psi'/s + (-g^2 s^2 + g^2 (V2/sqrt V1) s - 4 e^2)/s^2 psi = 0
//! g^2 = 2 m / (hbar^2 a^2),   e^2 = -m E / (2 hbar^2 a^2)
//! ```
//!
//! Bound levels use the non-negative root `e = [(V2/sqrt V1) g - (2n+1)]/4`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nu::{self, FactorizedSolution, KBranch, NuError, NuProblem};
use crate::pdm::{self, AmbiguityParams, Branch, ExpMassModel, PdmError};
use crate::specfun::{LaguerreSpec, Poly, SQUARE_TOL};
use crate::Residual;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MorseError {
    #[error("Morse parameter {name} must be positive and finite, got {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("level {n} is not bound (the model has {count} bound levels)")]
    NotBound { n: usize, count: usize },
    #[error("correspondence needs gamma* = 1/alpha* = 1, got gamma* = {gamma_star}, alpha* = {alpha_star}")]
    ConventionError { gamma_star: f64, alpha_star: f64 },
    #[error("no PDM level reproduces eps = {target}")]
    NoMatch { target: f64 },
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Pdm(#[from] PdmError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorseModel {
    pub v1: f64,
    pub v2: f64,
    pub alpha_star: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl MorseModel {
    pub fn new(v1: f64, v2: f64, alpha_star: f64, mass: f64, hbar: f64) -> Result<Self, MorseError> {
        for (name, value) in [("V1", v1), ("V2", v2), ("alpha*", alpha_star), ("mass", mass), ("hbar", hbar)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(MorseError::InvalidParameter { name, value });
            }
        }
        Ok(Self { v1, v2, alpha_star, mass, hbar })
    }

    /// `gamma* = sqrt(2 m) / (hbar alpha*)`.
    pub fn gamma_star(&self) -> f64 {
        (2.0 * self.mass).sqrt() / (self.hbar * self.alpha_star)
    }

    /// `(V2 / sqrt V1) gamma*`; levels exist while `2n + 1` stays below it.
    pub fn well_parameter(&self) -> f64 {
        self.v2 / self.v1.sqrt() * self.gamma_star()
    }

    pub fn potential_at(&self, x: f64) -> f64 {
        let e = (-self.alpha_star * x).exp();
        self.v1 * e * e - self.v2 * e
    }

    /// `s = sqrt(V1) e^{-alpha* x}`.
    pub fn s_of_x(&self, x: f64) -> f64 {
        self.v1.sqrt() * (-self.alpha_star * x).exp()
    }

    /// `E = -2 hbar^2 alpha*^2 eps*^2 / m`.
    pub fn energy_from_eps_star(&self, eps_star: f64) -> f64 {
        -2.0 * (self.hbar * self.alpha_star * eps_star).powi(2) / self.mass
    }

    /// Number of bound levels, `ceil((well - 1)/2)` clipped at zero.
    pub fn bound_count(&self) -> usize {
        let w = self.well_parameter();
        (0..).take_while(|&n| w - (2 * n + 1) as f64 > 0.0).count()
    }
}

/// The Morse equation at `eps*` as an NU problem (`tau~ = 1`).
pub fn morse_to_nu(m: &MorseModel, eps_star: f64) -> Result<NuProblem, NuError> {
    let g2 = m.gamma_star().powi(2);
    NuProblem::new(
        Poly::constant(1.0),
        Poly::new(-4.0 * eps_star * eps_star, m.v2 / m.v1.sqrt() * g2, -g2),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorseLevel {
    pub n: usize,
    pub eps_star: f64,
    pub energy: f64,
    pub laguerre_param: f64,
    pub normalizable: bool,
}

impl MorseLevel {
    pub fn with_energy(&self, energy: f64) -> Self {
        Self { energy, ..*self }
    }
}

pub fn level(m: &MorseModel, n: usize) -> Result<MorseLevel, MorseError> {
    let gap = m.well_parameter() - (2 * n + 1) as f64;
    if gap <= 0.0 {
        return Err(MorseError::NotBound { n, count: m.bound_count() });
    }
    let eps_star = 0.25 * gap;
    Ok(MorseLevel {
        n,
        eps_star,
        energy: m.energy_from_eps_star(eps_star),
        laguerre_param: 4.0 * eps_star,
        normalizable: true,
    })
}

/// Bound levels `n = 0, 1, ...`, at most `max_levels`.
pub fn spectrum(m: &MorseModel, max_levels: usize) -> Vec<MorseLevel> {
    (0..max_levels.min(m.bound_count())).filter_map(|n| level(m, n).ok()).collect()
}

/// Solves the NU quantization for `eps*` at index `n` without the closed form.
///
/// Returns `(|eps*|, branch)`: Case II carries the normalizable levels, Case I
/// the indices past the last bound level.
pub fn solve_eps_star(m: &MorseModel, n: usize) -> Result<(f64, Branch), MorseError> {
    let hi = 0.25 * (m.well_parameter() + (2 * n + 1) as f64) + 1.0;
    let build = |e: f64| morse_to_nu(m, e);
    for branch in [Branch::CaseII, Branch::CaseI] {
        match nu::solve_quantization(build, n, branch.k_branch(), (0.0, hi), 1e-15) {
            Ok(e) => return Ok((e, branch)),
            Err(NuError::NoSignChange { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(MorseError::NotBound { n, count: m.bound_count() })
}

/// NU factorization of a bound level: `s^{2 eps*} e^{-gamma* s} L_n^{4 eps*}(2 gamma* s)`.
pub fn level_wavefunction(m: &MorseModel, lvl: &MorseLevel) -> Result<FactorizedSolution, MorseError> {
    let problem = morse_to_nu(m, lvl.eps_star)?;
    let candidate = nu::physical_candidate(&problem, KBranch::Minus, SQUARE_TOL)?;
    Ok(nu::factorize(&candidate, lvl.n)?)
}

/// `psi_n(s) = (1/n!) s^{2 eps*} e^{-gamma* s} L_n^{4 eps*}(2 gamma* s)`.
pub fn wavefunction(m: &MorseModel, n: usize, s: f64) -> Result<f64, MorseError> {
    if s <= 0.0 {
        return Err(NuError::Domain { s, power: f64::NAN }.into());
    }
    let lvl = level(m, n)?;
    Ok(level_wavefunction(m, &lvl)?.value(s)?)
}

/// Residual of the `s`-space Morse equation, with the constant term taken
/// from `lvl.energy` and the wavefunction from `lvl.eps_star`.
pub fn residual_s_space(m: &MorseModel, lvl: &MorseLevel, s: f64) -> Result<Residual, MorseError> {
    let g2 = m.gamma_star().powi(2);
    let wf = level_wavefunction(m, lvl)?;
    let [psi, d1, d2] = wf.derivatives(s)?;
    let constant = g2 * lvl.energy;
    Ok(Residual::from_terms(&[
        d2,
        d1 / s,
        (-g2 * s * s + g2 * m.v2 / m.v1.sqrt() * s + constant) / (s * s) * psi,
    ]))
}

/// Exponential-mass parameters reproducing a Morse level under
/// `lambda = gamma* = 1/alpha* = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PdmCorrespondence {
    pub a: f64,
    pub b: f64,
    pub pdm_epsilon: f64,
    pub n: usize,
    pub params: AmbiguityParams,
}

impl PdmCorrespondence {
    /// `V0 = (n - A)^2 + 4 alpha(alpha + beta + 1) + 2 beta + 1`.
    pub fn v0_of(&self, n: usize) -> f64 {
        let p = &self.params;
        (n as f64 - self.a).powi(2) + 4.0 * p.alpha * (p.alpha + p.beta + 1.0) + 2.0 * p.beta + 1.0
    }

    /// `E* = -(n - A)^2`.
    pub fn e_star_of(&self, n: usize) -> f64 {
        -(n as f64 - self.a).powi(2)
    }

    /// `V0 = -E* + 4 alpha(alpha + beta + 1) + 2 beta + 1`.
    pub fn v0_from_energy(&self, n: usize) -> f64 {
        let p = &self.params;
        -self.e_star_of(n) + 4.0 * p.alpha * (p.alpha + p.beta + 1.0) + 2.0 * p.beta + 1.0
    }

    pub fn v0(&self) -> f64 {
        self.v0_of(self.n)
    }

    pub fn e_star(&self) -> f64 {
        self.e_star_of(self.n)
    }

    pub fn pdm_model(&self, n: usize) -> Result<ExpMassModel, PdmError> {
        ExpMassModel::new(1.0, self.v0_of(n), self.b, self.a)
    }
}

pub fn map_morse_to_pdm(m: &MorseModel, p: &AmbiguityParams, n: usize) -> Result<PdmCorrespondence, MorseError> {
    let gamma_star = m.gamma_star();
    if (gamma_star - 1.0).abs() > 1e-12 || (m.alpha_star - 1.0).abs() > 1e-12 {
        return Err(MorseError::ConventionError { gamma_star, alpha_star: m.alpha_star });
    }
    let ratio = m.v2 / m.v1.sqrt();
    let a = 0.5 * (ratio - 1.0);
    let b = m.v1.sqrt() / m.v2 * (2.0 * a + 1.0);
    Ok(PdmCorrespondence { a, b, pdm_epsilon: -b * b, n, params: *p })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PdmMatch {
    pub branch: Branch,
    pub index: usize,
    pub energy: f64,
    pub normalizable: bool,
    /// `(2A+1)^2 / bracket^2 - 1`, zero when the quantization identity holds.
    pub identity_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub morse_index: usize,
    pub v0: f64,
    pub target_epsilon: f64,
    pub matches: Vec<PdmMatch>,
    /// Power of `s` in the mapped wavefunction, `-(n - A)`.
    pub wf_power: f64,
    /// Laguerre parameter of the mapped wavefunction, `-2(n - A)`.
    pub wf_laguerre_param: f64,
    pub wf_normalizable: bool,
}

/// Highest PDM index scanned when looking for a matching level.
pub const MATCH_SEARCH_LIMIT: usize = 256;

pub fn verify_correspondence(c: &PdmCorrespondence, p: &AmbiguityParams, n: usize) -> Result<CorrespondenceReport, MorseError> {
    let model = c.pdm_model(n)?;
    let q = pdm::q_param(&model, p);
    let target = c.pdm_epsilon;
    let mut matches = Vec::new();
    for branch in [Branch::CaseI, Branch::CaseII] {
        for index in 0..MATCH_SEARCH_LIMIT {
            let Ok(st) = pdm::state(&model, p, index, branch) else { continue };
            if st.branch != branch || (st.energy - target).abs() > 1e-9 {
                continue;
            }
            let br = pdm::bracket(q, index, branch);
            matches.push(PdmMatch {
                branch,
                index,
                energy: st.energy,
                normalizable: st.normalizable,
                identity_residual: (2.0 * c.a + 1.0).powi(2) / (br * br) - 1.0,
            });
        }
    }
    if matches.is_empty() {
        return Err(MorseError::NoMatch { target });
    }
    let wf_power = -(n as f64 - c.a);
    let wf = FactorizedSolution {
        phi_power: wf_power,
        phi_rate: -1.0,
        rho_power: 2.0 * wf_power,
        rho_rate: -2.0,
        laguerre: LaguerreSpec { n, a: 2.0 * wf_power, scale: 2.0 },
    };
    Ok(CorrespondenceReport {
        morse_index: n,
        v0: model.v0,
        target_epsilon: target,
        matches,
        wf_power,
        wf_laguerre_param: 2.0 * wf_power,
        wf_normalizable: pdm::is_normalizable(&p.with_eta(0.5), &wf),
    })
}
