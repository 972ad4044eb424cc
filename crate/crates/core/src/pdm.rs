//! Exponential position-dependent mass with the two-exponential potential.
//!
//! The Hamiltonian is `-d/dx (1/m) d/dx + V_eff` with `m(x) = e^{-2 lambda x}`
//! and `V(x) = V0 e^{2 lambda x} - B(2A+1) e^{lambda x}`. The ordering
//! ambiguity `(alpha, beta)` enters only through `V_eff`. Writing
//! `phi = m^eta psi` and `s = e^{-lambda x}` gives
//!
//! ```text
//! psi'' + (4 eta - 1)/s psi' + (-xi1 s^2 - xi2 s + xi3)/s^2 psi = 0
//! xi1 = -eps/lambda^2,  xi2 = -B(2A+1)/lambda^2,
//! xi3 = -[V0/lambda^2 + 2(beta+1) - 4A* - 4 eta(eta-1)]
//! ```
//!
//! which is handed to the NU engine. The two roots `k = -xi2 ± 2D` are the
//! Case I (`+`) and Case II (`-`) branches.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nu::{self, FactorizedSolution, KBranch, NuError, NuProblem};
use crate::specfun::{Poly, SQUARE_TOL};
use crate::Residual;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PdmError {
    #[error("mass decay rate lambda must be positive and finite, got {0}")]
    InvalidLambda(f64),
    #[error("parameter {name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("no bound state for {branch:?} n = {n}: {reason}")]
    NoBoundState { branch: Branch, n: usize, reason: &'static str },
    #[error(transparent)]
    Nu(#[from] NuError),
}

fn finite(name: &'static str, value: f64) -> Result<f64, PdmError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(PdmError::NonFinite { name, value })
    }
}

/// Ordering-ambiguity parameters `(alpha, beta)` and the wavefunction exponent `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmbiguityParams {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
}

impl AmbiguityParams {
    pub fn new(alpha: f64, beta: f64, eta: f64) -> Result<Self, PdmError> {
        Ok(Self {
            alpha: finite("alpha", alpha)?,
            beta: finite("beta", beta)?,
            eta: finite("eta", eta)?,
        })
    }

    /// `A* = alpha(alpha + beta + 1) + beta + 1`.
    pub fn a_star(&self) -> f64 {
        self.alpha * (self.alpha + self.beta + 1.0) + self.beta + 1.0
    }

    /// Coefficient of `psi'/s` in the reduced equation.
    pub fn first_derivative_coefficient(&self) -> f64 {
        4.0 * self.eta - 1.0
    }

    pub fn with_eta(&self, eta: f64) -> Self {
        Self { eta, ..*self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpMassModel {
    pub lambda: f64,
    pub v0: f64,
    pub b: f64,
    pub a: f64,
}

impl ExpMassModel {
    pub fn new(lambda: f64, v0: f64, b: f64, a: f64) -> Result<Self, PdmError> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(PdmError::InvalidLambda(lambda));
        }
        Ok(Self { lambda, v0: finite("V0", v0)?, b: finite("B", b)?, a: finite("A", a)? })
    }

    /// `B(2A+1)`.
    pub fn coulomb_strength(&self) -> f64 {
        self.b * (2.0 * self.a + 1.0)
    }

    /// `s = e^{-lambda x}`.
    pub fn s_of_x(&self, x: f64) -> f64 {
        (-self.lambda * x).exp()
    }

    pub fn x_of_s(&self, s: f64) -> f64 {
        -s.ln() / self.lambda
    }
}

/// `m(x) = e^{-2 lambda x}`.
pub fn mass_at(m: &ExpMassModel, x: f64) -> f64 {
    (-2.0 * m.lambda * x).exp()
}

/// `V(x) = V0 e^{2 lambda x} - B(2A+1) e^{lambda x}`.
pub fn potential_at(m: &ExpMassModel, x: f64) -> f64 {
    let e = (m.lambda * x).exp();
    m.v0 * e * e - m.coulomb_strength() * e
}

/// `V + (beta+1)/2 m''/m^2 - A* m'^2/m^3`, which for the exponential mass is
/// `V + 4 lambda^2 e^{2 lambda x} [(beta+1)/2 - A*]`.
pub fn effective_potential_at(m: &ExpMassModel, p: &AmbiguityParams, x: f64) -> f64 {
    let correction = 0.5 * (p.beta + 1.0) - p.a_star();
    potential_at(m, x) + 4.0 * m.lambda * m.lambda * (2.0 * m.lambda * x).exp() * correction
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XiParams {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
    /// `(2 eta - 1)^2 - xi3`; independent of `eta`.
    pub q: f64,
    /// `sqrt(xi1 Q)` when both factors are non-negative.
    pub d: Option<f64>,
}

impl XiParams {
    pub fn sigma_tilde(&self) -> Poly {
        Poly::new(self.xi3, -self.xi2, -self.xi1)
    }
}

pub fn to_xi(m: &ExpMassModel, p: &AmbiguityParams, epsilon: f64) -> XiParams {
    let l2 = m.lambda * m.lambda;
    let xi1 = -epsilon / l2;
    let xi2 = -m.coulomb_strength() / l2;
    let xi3 = -(m.v0 / l2 + 2.0 * (p.beta + 1.0) - 4.0 * p.a_star() - 4.0 * p.eta * (p.eta - 1.0));
    let q = (2.0 * p.eta - 1.0).powi(2) - xi3;
    let d = (xi1 >= 0.0 && q >= 0.0).then(|| (xi1 * q).sqrt());
    XiParams { xi1, xi2, xi3, q, d }
}

/// `Q` without reference to an energy.
pub fn q_param(m: &ExpMassModel, p: &AmbiguityParams) -> f64 {
    to_xi(m, p, 0.0).q
}

/// The reduced equation at energy `epsilon` as an NU problem.
pub fn nu_problem(m: &ExpMassModel, p: &AmbiguityParams, epsilon: f64) -> Result<NuProblem, PdmError> {
    let xi = to_xi(m, p, epsilon);
    Ok(NuProblem::new(Poly::constant(p.first_derivative_coefficient()), xi.sigma_tilde())?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "CaseI")]
    CaseI,
    #[serde(rename = "CaseII")]
    CaseII,
}

impl Branch {
    pub fn k_branch(self) -> KBranch {
        match self {
            Branch::CaseI => KBranch::Plus,
            Branch::CaseII => KBranch::Minus,
        }
    }

    /// `+1` for Case I, `-1` for Case II.
    fn sign(self) -> f64 {
        match self {
            Branch::CaseI => 1.0,
            Branch::CaseII => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::CaseI => "CaseI",
            Branch::CaseII => "CaseII",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" | "1" | "CaseI" | "case1" => Ok(Branch::CaseI),
            "II" | "2" | "CaseII" | "case2" => Ok(Branch::CaseII),
            other => Err(format!("unknown branch '{other}', expected I or II")),
        }
    }
}

/// `2n + 1 - 2 sqrt(Q)` for Case I, `2n + 1 + 2 sqrt(Q)` for Case II.
pub fn bracket(q: f64, n: usize, branch: Branch) -> f64 {
    2.0 * n as f64 + 1.0 - branch.sign() * 2.0 * q.sqrt()
}

fn closed_form_energy(m: &ExpMassModel, p: &AmbiguityParams, n: usize, branch: Branch) -> Result<f64, PdmError> {
    let no = |reason| PdmError::NoBoundState { branch, n, reason };
    let q = q_param(m, p);
    if q < 0.0 {
        return Err(no("Q < 0, no real D"));
    }
    let strength = m.coulomb_strength();
    if strength <= 0.0 {
        return Err(no("B(2A+1) <= 0, no attractive term"));
    }
    let br = bracket(q, n, branch);
    if br <= 0.0 {
        return Err(no("quantization bracket is not positive"));
    }
    // sqrt(xi1) = -xi2 / bracket
    Ok(-(strength * strength) / (m.lambda * m.lambda) / (br * br))
}

/// Case I: `eps = -(B^2/lambda^2)(2A+1)^2 [2n+1-2 sqrt(Q)]^{-2}`.
pub fn energy_case1(m: &ExpMassModel, p: &AmbiguityParams, n: usize) -> Result<f64, PdmError> {
    closed_form_energy(m, p, n, Branch::CaseI)
}

/// Case II: `eps = -(B^2/lambda^2)(2A+1)^2 [2n+1+2 sqrt(Q)]^{-2}`.
pub fn energy_case2(m: &ExpMassModel, p: &AmbiguityParams, n: usize) -> Result<f64, PdmError> {
    closed_form_energy(m, p, n, Branch::CaseII)
}

pub fn energy(m: &ExpMassModel, p: &AmbiguityParams, n: usize, branch: Branch) -> Result<f64, PdmError> {
    closed_form_energy(m, p, n, branch)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub n: usize,
    pub energy: f64,
    pub branch: Branch,
    pub wf: FactorizedSolution,
    pub normalizable: bool,
}

impl BoundState {
    pub fn laguerre_param(&self) -> f64 {
        self.wf.laguerre.a
    }

    pub fn psi(&self, s: f64) -> Result<f64, NuError> {
        self.wf.value(s)
    }

    /// Physical-frame `phi(x) = m(x)^eta psi(s(x))`.
    pub fn phi_at(&self, m: &ExpMassModel, p: &AmbiguityParams, x: f64) -> Result<f64, NuError> {
        Ok(mass_at(m, x).powf(p.eta) * self.psi(m.s_of_x(x))?)
    }

    /// Same state with a different energy; the wavefunction is left untouched.
    pub fn with_energy(&self, energy: f64) -> Self {
        Self { energy, ..*self }
    }
}

/// Square integrability of `phi = m^eta psi` under `dx = ds/(lambda s)`.
///
/// Near `s = 0` the integrand behaves as `s^{4 eta - 1 + 2 phi_power}`; at
/// large `s` it needs exponential decay. The Laguerre parameter must exceed -1.
pub fn is_normalizable(p: &AmbiguityParams, wf: &FactorizedSolution) -> bool {
    let origin_exponent = 4.0 * p.eta - 1.0 + 2.0 * wf.phi_power;
    wf.laguerre.a > -1.0 && origin_exponent > -1.0 && wf.phi_rate < 0.0
}

/// Assembles level `n` on `branch` through the NU engine at the closed-form energy.
///
/// When `Q = 0` the branches coincide and the state is labelled Case II.
pub fn state(m: &ExpMassModel, p: &AmbiguityParams, n: usize, branch: Branch) -> Result<BoundState, PdmError> {
    let q = q_param(m, p);
    let branch = if q == 0.0 { Branch::CaseII } else { branch };
    let energy = closed_form_energy(m, p, n, branch)?;
    let problem = nu_problem(m, p, energy)?;
    let candidate = nu::physical_candidate(&problem, branch.k_branch(), SQUARE_TOL)?;
    let wf = nu::factorize(&candidate, n)?;
    Ok(BoundState { n, energy, branch, wf, normalizable: is_normalizable(p, &wf) })
}

/// Level `n` on `branch` found by bisecting the NU quantization condition in
/// `sqrt(xi1)`, without the closed-form energy.
pub fn solve_state(m: &ExpMassModel, p: &AmbiguityParams, n: usize, branch: Branch) -> Result<BoundState, PdmError> {
    let q = q_param(m, p);
    let branch = if q == 0.0 { Branch::CaseII } else { branch };
    let l2 = m.lambda * m.lambda;
    let build = |r: f64| nu_problem(m, p, -r * r * l2).map_err(|_| NuError::NoCandidate);
    let mut hi = 1.0;
    let root = loop {
        match nu::solve_quantization(build, n, branch.k_branch(), (1e-12, hi), 1e-15 * hi) {
            Ok(r) => break r,
            Err(NuError::NoSignChange { .. }) if hi < 1e12 => hi *= 16.0,
            Err(NuError::NoSignChange { .. }) => {
                return Err(PdmError::NoBoundState { branch, n, reason: "quantization condition has no root" })
            }
            Err(e) => return Err(e.into()),
        }
    };
    let energy = -root * root * l2;
    let candidate = nu::physical_candidate(&nu_problem(m, p, energy)?, branch.k_branch(), SQUARE_TOL)?;
    let wf = nu::factorize(&candidate, n)?;
    Ok(BoundState { n, energy, branch, wf, normalizable: is_normalizable(p, &wf) })
}

/// All levels up to `max_levels` per branch that admit a closed-form energy.
pub fn spectrum(m: &ExpMassModel, p: &AmbiguityParams, max_levels: usize) -> Vec<BoundState> {
    let branches: &[Branch] =
        if q_param(m, p) == 0.0 { &[Branch::CaseII] } else { &[Branch::CaseI, Branch::CaseII] };
    let mut out = Vec::new();
    for &branch in branches {
        out.extend((0..max_levels).filter_map(|n| state(m, p, n, branch).ok()));
    }
    out
}

/// Normalizable Case II levels, ascending in energy.
pub fn physical_levels(m: &ExpMassModel, p: &AmbiguityParams, max_levels: usize) -> Vec<BoundState> {
    (0..max_levels)
        .filter_map(|n| state(m, p, n, Branch::CaseII).ok())
        .filter(|st| st.normalizable)
        .collect()
}

/// Residual of the reduced `s`-space equation at the state's energy.
pub fn residual_reduced(m: &ExpMassModel, p: &AmbiguityParams, st: &BoundState, s: f64) -> Result<Residual, NuError> {
    let xi = to_xi(m, p, st.energy);
    let [psi, d1, d2] = st.wf.derivatives(s)?;
    let t = p.first_derivative_coefficient();
    Ok(Residual::from_terms(&[
        d2,
        t / s * d1,
        (-xi.xi1 * s * s - xi.xi2 * s + xi.xi3) / (s * s) * psi,
    ]))
}

/// Residual of `-(1/m) phi'' + (m'/m^2) phi' + (V_eff - eps) phi` in `x`.
pub fn residual_x_space(m: &ExpMassModel, p: &AmbiguityParams, st: &BoundState, x: f64) -> Result<Residual, NuError> {
    let lam = m.lambda;
    let s = m.s_of_x(x);
    let [psi, psi_s, psi_ss] = st.wf.derivatives(s)?;
    // h(x) = psi(s(x))
    let h1 = -lam * s * psi_s;
    let h2 = lam * lam * (s * psi_s + s * s * psi_ss);
    // phi = e^{u x} h with u = -2 eta lambda
    let u = -2.0 * p.eta * lam;
    let e = (u * x).exp();
    let phi = e * psi;
    let phi1 = e * (u * psi + h1);
    let phi2 = e * (u * u * psi + 2.0 * u * h1 + h2);
    let mass = mass_at(m, x);
    // m'/m^2 = -2 lambda / m
    Ok(Residual::from_terms(&[
        -phi2 / mass,
        -2.0 * lam / mass * phi1,
        effective_potential_at(m, p, x) * phi,
        -st.energy * phi,
    ]))
}
