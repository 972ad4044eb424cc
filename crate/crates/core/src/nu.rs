//! Nikiforov–Uvarov reduction for `sigma(s) = s`.
//!
//! An equation `psi'' + (tau~/sigma) psi' + (sigma~/sigma^2) psi = 0` is reduced
//! by choosing a constant `k` that makes
//! `((sigma' - tau~)/2)^2 - sigma~ + k sigma` a perfect square. Each root `k`
//! gives two choices of `pi`; a candidate is physical when
//! `tau = tau~ + 2 pi` has a negative slope. Levels follow from
//! `k + pi' = -n tau'` and the solutions factor as
//! `psi = s^{pi(0)} e^{pi' s} L_n^{tau(0)-1}(-tau' s)`.
//!
//! Only the `sigma = s` class is supported; other `sigma` are rejected.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::specfun::{perfect_square_decompose, LaguerreSpec, Poly, SpecfunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NuError {
    #[error("only sigma(s) = s is supported, got {0}")]
    UnsupportedSigma(Poly),
    #[error("tau~ must have degree <= 1, got {0}")]
    TauTildeDegree(Poly),
    #[error("perfect-square condition has no real root k")]
    NoRealK,
    #[error("radicand vanishes identically at k = {k}; branch pairing is undetermined")]
    DegenerateSquare { k: f64 },
    #[error("radicand has no real square root: {0}")]
    NotSquarable(SpecfunError),
    #[error("radicand at k = {k} failed the perfect-square re-check")]
    SquareCheckFailed { k: f64 },
    #[error("candidate is not physical (tau' = {tau_slope} >= 0)")]
    NotPhysical { tau_slope: f64 },
    #[error("wavefunction with non-integer power {power} is undefined at s = {s}")]
    Domain { s: f64, power: f64 },
    #[error("no physical candidate on the requested branch")]
    NoCandidate,
    #[error("quantization residual does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}

impl From<SpecfunError> for NuError {
    fn from(e: SpecfunError) -> Self {
        NuError::NotSquarable(e)
    }
}

/// `psi'' + (tau~/s) psi' + (sigma~/s^2) psi = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuProblem {
    sigma: Poly,
    tau_tilde: Poly,
    sigma_tilde: Poly,
}

impl NuProblem {
    pub fn new(tau_tilde: Poly, sigma_tilde: Poly) -> Result<Self, NuError> {
        Self::with_sigma(Poly::s(), tau_tilde, sigma_tilde)
    }

    pub fn with_sigma(sigma: Poly, tau_tilde: Poly, sigma_tilde: Poly) -> Result<Self, NuError> {
        if sigma != Poly::s() {
            return Err(NuError::UnsupportedSigma(sigma));
        }
        if tau_tilde.degree() > 1 {
            return Err(NuError::TauTildeDegree(tau_tilde));
        }
        Ok(Self { sigma, tau_tilde, sigma_tilde })
    }

    pub fn sigma(&self) -> Poly {
        self.sigma
    }

    pub fn tau_tilde(&self) -> Poly {
        self.tau_tilde
    }

    pub fn sigma_tilde(&self) -> Poly {
        self.sigma_tilde
    }

    /// `(sigma' - tau~) / 2`.
    pub fn half_shift(&self) -> Poly {
        (self.sigma.derivative() - self.tau_tilde) * 0.5
    }

    /// `((sigma' - tau~)/2)^2 - sigma~ + k sigma`.
    pub fn radicand(&self, k: f64) -> Poly {
        let half = self.half_shift();
        let square = half.checked_mul(&half).expect("tau~ has degree <= 1");
        square - self.sigma_tilde + self.sigma * k
    }

    /// Residual of the original equation multiplied through by `sigma^2`.
    pub fn residual(&self, s: f64, psi: [f64; 3]) -> f64 {
        let sig = self.sigma.eval(s);
        sig * sig * psi[2] + sig * self.tau_tilde.eval(s) * psi[1] + self.sigma_tilde.eval(s) * psi[0]
    }
}

/// Sign of the `±2D` term in `k`; `Double` when both roots coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KBranch {
    Minus,
    Double,
    Plus,
}

/// Sign in front of the square root in `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PiBranch {
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuCandidate {
    pub k: f64,
    pub pi: Poly,
    pub tau: Poly,
    /// Square root of the radicand at this `k`.
    pub root: Poly,
    pub k_branch: KBranch,
    pub pi_branch: PiBranch,
    pub physical: bool,
    sigma: Poly,
}

impl NuCandidate {
    /// `k + pi'`.
    pub fn nu_lambda(&self) -> f64 {
        self.k + self.pi.c1()
    }

    /// `-n tau' - n(n-1)/2 sigma''`.
    pub fn lambda_n(&self, n: usize) -> f64 {
        let nf = n as f64;
        -nf * self.tau.c1() - 0.5 * nf * (nf - 1.0) * self.sigma.second_derivative()
    }

    pub fn tau_slope(&self) -> f64 {
        self.tau.c1()
    }

    fn require_physical(&self) -> Result<(), NuError> {
        if self.physical {
            Ok(())
        } else {
            Err(NuError::NotPhysical { tau_slope: self.tau_slope() })
        }
    }
}

/// All `(k, pi)` pairs that make the radicand a perfect square.
///
/// Ordered by `k` ascending, then `pi` branch. A double root yields two
/// candidates, distinct roots four.
pub fn enumerate_candidates(p: &NuProblem, tol: f64) -> Result<Vec<NuCandidate>, NuError> {
    let base = p.radicand(0.0);
    let (r0, b, r2) = (base.c0(), base.c1(), base.c2());
    // disc_s(R_k) = (b + k)^2 - 4 r2 r0 = 0
    let prod = r2 * r0;
    let scale = 1f64.max(b * b).max(prod.abs());
    if prod < -tol * scale {
        return Err(NuError::NoRealK);
    }
    if r2 < 0.0 {
        return Err(NuError::NotSquarable(SpecfunError::NegativeLeading(base)));
    }
    if r2 == 0.0 && r0 == 0.0 {
        return Err(NuError::DegenerateSquare { k: -b });
    }
    let half_gap = 2.0 * prod.max(0.0).sqrt();
    let roots: Vec<(f64, KBranch)> = if half_gap <= tol * 1f64.max(b.abs()) {
        vec![(-b, KBranch::Double)]
    } else {
        vec![(-b - half_gap, KBranch::Minus), (-b + half_gap, KBranch::Plus)]
    };

    let half = p.half_shift();
    let mut out = Vec::with_capacity(2 * roots.len());
    for (k, k_branch) in roots {
        let radicand = p.radicand(k);
        let root = perfect_square_decompose(&radicand, tol)?
            .ok_or(NuError::SquareCheckFailed { k })?;
        for pi_branch in [PiBranch::Minus, PiBranch::Plus] {
            let pi = match pi_branch {
                PiBranch::Minus => half - root,
                PiBranch::Plus => half + root,
            };
            let tau = p.tau_tilde + pi * 2.0;
            out.push(NuCandidate {
                k,
                pi,
                tau,
                root,
                k_branch,
                pi_branch,
                physical: tau.c1() < 0.0,
                sigma: p.sigma,
            });
        }
    }
    out.sort_by(|a, b| {
        a.k.partial_cmp(&b.k).unwrap_or(Ordering::Equal).then(a.pi_branch.cmp(&b.pi_branch))
    });
    Ok(out)
}

/// `(k + pi') - lambda_n`; zero when index `n` is a consistent level.
pub fn quantize(c: &NuCandidate, n: usize) -> Result<f64, NuError> {
    c.require_physical()?;
    Ok(c.nu_lambda() - c.lambda_n(n))
}

/// `psi = B_n s^{phi_power} e^{phi_rate s} L_n^a(scale s)`, with weight
/// `rho = s^{rho_power} e^{rho_rate s}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FactorizedSolution {
    pub phi_power: f64,
    pub phi_rate: f64,
    pub rho_power: f64,
    pub rho_rate: f64,
    pub laguerre: LaguerreSpec,
}

pub fn factorize(c: &NuCandidate, n: usize) -> Result<FactorizedSolution, NuError> {
    c.require_physical()?;
    let rho_power = c.tau.c0() - 1.0;
    let rho_rate = c.tau.c1();
    Ok(FactorizedSolution {
        phi_power: c.pi.c0(),
        phi_rate: c.pi.c1(),
        rho_power,
        rho_rate,
        laguerre: LaguerreSpec::new(n, rho_power, -rho_rate)?,
    })
}

impl FactorizedSolution {
    pub fn order(&self) -> usize {
        self.laguerre.n
    }

    /// `s^{phi_power} e^{phi_rate s}`.
    pub fn phi(&self, s: f64) -> Result<f64, NuError> {
        Ok(power(s, self.phi_power)? * (self.phi_rate * s).exp())
    }

    /// `s^{rho_power} e^{rho_rate s}`.
    pub fn rho(&self, s: f64) -> Result<f64, NuError> {
        Ok(power(s, self.rho_power)? * (self.rho_rate * s).exp())
    }

    /// `B_n L_n^a(scale s)`.
    pub fn y(&self, s: f64) -> f64 {
        self.laguerre.normalization() * self.laguerre.eval(s)
    }

    pub fn value(&self, s: f64) -> Result<f64, NuError> {
        Ok(self.phi(s)? * self.y(s))
    }

    /// `[psi, psi', psi'']` at `s > 0`.
    pub fn derivatives(&self, s: f64) -> Result<[f64; 3], NuError> {
        if s <= 0.0 {
            return Err(NuError::Domain { s, power: self.phi_power });
        }
        let f = self.phi(s)?;
        let g = self.laguerre.derivative(0, s);
        let g1 = self.laguerre.derivative(1, s);
        let g2 = self.laguerre.derivative(2, s);
        let log_d = self.phi_power / s + self.phi_rate;
        let f1 = f * log_d;
        let f2 = f * (log_d * log_d - self.phi_power / (s * s));
        let b = self.laguerre.normalization();
        Ok([b * f * g, b * (f1 * g + f * g1), b * (f2 * g + 2.0 * f1 * g1 + f * g2)])
    }

    pub fn with_order(&self, n: usize) -> Self {
        let mut out = *self;
        out.laguerre.n = n;
        out
    }
}

fn power(s: f64, p: f64) -> Result<f64, NuError> {
    if s > 0.0 {
        Ok(s.powf(p))
    } else if p.fract() == 0.0 && p.abs() < i32::MAX as f64 {
        Ok(s.powi(p as i32))
    } else {
        Err(NuError::Domain { s, power: p })
    }
}

/// `psi_n(s) = (1/n!) s^{phi_power} e^{phi_rate s} L_n^a(scale s)`.
pub fn evaluate_wavefunction(f: &FactorizedSolution, n: usize, s: f64) -> Result<f64, NuError> {
    f.with_order(n).value(s)
}

/// The physical candidate of `problem` on `branch` (a double root matches either).
pub fn physical_candidate(
    problem: &NuProblem,
    branch: KBranch,
    tol: f64,
) -> Result<NuCandidate, NuError> {
    enumerate_candidates(problem, tol)?
        .into_iter()
        .find(|c| c.physical && (c.k_branch == branch || c.k_branch == KBranch::Double))
        .ok_or(NuError::NoCandidate)
}

/// Solves the quantization condition for a spectral parameter embedded in the problem.
///
/// `build` maps the parameter to an NU problem; the residual of the physical
/// candidate on `branch` at index `n` is bisected on `bracket` to absolute
/// width `tol`.
pub fn solve_quantization<F>(
    build: F,
    n: usize,
    branch: KBranch,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64, NuError>
where
    F: Fn(f64) -> Result<NuProblem, NuError>,
{
    let residual = |x: f64| -> Result<f64, NuError> {
        let c = physical_candidate(&build(x)?, branch, crate::specfun::SQUARE_TOL)?;
        quantize(&c, n)
    };
    let (mut lo, mut hi) = bracket;
    let mut f_lo = residual(lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = residual(hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(NuError::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = residual(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{laguerre_eval, SQUARE_TOL};

    const E1: f64 = std::f64::consts::E;

    fn problem(xi1: f64, xi2: f64, xi3: f64, tau0: f64) -> NuProblem {
        NuProblem::new(Poly::constant(tau0), Poly::new(xi3, -xi2, -xi1)).unwrap()
    }

    #[test]
    fn rejects_other_sigma() {
        let err = NuProblem::with_sigma(Poly::new(0.0, 0.0, 1.0), Poly::ZERO, Poly::ZERO);
        assert!(matches!(err, Err(NuError::UnsupportedSigma(_))));
        let err = NuProblem::new(Poly::new(0.0, 0.0, 1.0), Poly::ZERO);
        assert!(matches!(err, Err(NuError::TauTildeDegree(_))));
    }

    #[test]
    fn double_root_example() {
        // sigma~ = -s^2 + 5s, tau~ = 1
        let p = problem(1.0, -5.0, 0.0, 1.0);
        let cands = enumerate_candidates(&p, SQUARE_TOL).unwrap();
        assert_eq!(cands.len(), 2);
        for c in &cands {
            assert_eq!(c.k, 5.0);
            assert_eq!(c.k_branch, KBranch::Double);
        }
        assert_eq!(cands[0].pi, Poly::linear(0.0, -1.0));
        assert_eq!(cands[1].pi, Poly::linear(0.0, 1.0));
        let phys: Vec<_> = cands.iter().filter(|c| c.physical).collect();
        assert_eq!(phys.len(), 1);
        assert_eq!(phys[0].tau, Poly::linear(1.0, -2.0));
    }

    #[test]
    fn ground_state_example() {
        // sigma~ = -s^2 + s, tau~ = 1: k = 1 double root, nu_lambda = 0
        let p = NuProblem::new(Poly::constant(1.0), Poly::new(0.0, 1.0, -1.0)).unwrap();
        let cands = enumerate_candidates(&p, SQUARE_TOL).unwrap();
        assert_eq!(cands.len(), 2);
        let c = cands.iter().find(|c| c.physical).unwrap();
        assert_eq!(c.k, 1.0);
        assert_eq!(c.tau, Poly::linear(1.0, -2.0));
        assert_eq!(c.nu_lambda(), 0.0);
        assert_eq!(quantize(c, 0).unwrap(), 0.0);

        // sigma~ = -s^2 - s: the root moves to k = -1 and no index quantizes
        let p = NuProblem::new(Poly::constant(1.0), Poly::new(0.0, -1.0, -1.0)).unwrap();
        let cands = enumerate_candidates(&p, SQUARE_TOL).unwrap();
        let c = cands.iter().find(|c| c.physical).unwrap();
        assert_eq!(c.k, -1.0);
        assert_eq!(c.nu_lambda(), -2.0);
        assert!((0..10).all(|n| quantize(c, n).unwrap() < 0.0));
    }

    #[test]
    fn generic_roots_follow_d_structure() {
        let (xi1, xi2, xi3, eta) = (2.0, -3.0, -1.5, 0.75);
        let p = problem(xi1, xi2, xi3, 3.0 - 4.0 * eta);
        let d = (xi1 * ((2.0 * eta - 1.0f64).powi(2) - xi3)).sqrt();
        let cands = enumerate_candidates(&p, SQUARE_TOL).unwrap();
        assert_eq!(cands.len(), 4);
        assert!((cands[0].k - (-xi2 - 2.0 * d)).abs() < 1e-12);
        assert!((cands[3].k - (-xi2 + 2.0 * d)).abs() < 1e-12);
        assert_eq!(cands[0].k_branch, KBranch::Minus);
        assert_eq!(cands[3].k_branch, KBranch::Plus);
        for c in &cands {
            // tau = tau~ + 2 pi
            let tau = p.tau_tilde() + c.pi * 2.0;
            assert_eq!(c.tau, tau);
            assert_eq!(c.physical, c.tau.c1() < 0.0);
            let r = p.radicand(c.k);
            let sq = c.root.checked_mul(&c.root).unwrap();
            for (a, b) in r.coeffs().iter().zip(sq.coeffs()) {
                assert!((a - b).abs() < 1e-9 * (1.0 + a.abs()));
            }
        }
        assert_eq!(cands.iter().filter(|c| c.physical).count(), 2);
    }

    #[test]
    fn no_real_k() {
        // r2 = xi1 > 0, r0 = Q < 0
        let p = problem(1.0, -5.0, 2.0, 1.0);
        assert_eq!(enumerate_candidates(&p, SQUARE_TOL), Err(NuError::NoRealK));
    }

    #[test]
    fn degenerate_square_reported() {
        let p = NuProblem::new(Poly::constant(1.0), Poly::linear(0.0, 2.0)).unwrap();
        assert!(matches!(
            enumerate_candidates(&p, SQUARE_TOL),
            Err(NuError::DegenerateSquare { .. })
        ));
    }

    fn candidate(k: f64) -> NuCandidate {
        NuCandidate {
            k,
            pi: Poly::linear(0.0, -1.0),
            tau: Poly::linear(1.0, -2.0),
            root: Poly::linear(0.0, 1.0),
            k_branch: KBranch::Double,
            pi_branch: PiBranch::Minus,
            physical: true,
            sigma: Poly::s(),
        }
    }

    #[test]
    fn quantize_examples() {
        assert_eq!(quantize(&candidate(5.0), 2).unwrap(), 0.0);
        assert_eq!(quantize(&candidate(1.0), 0).unwrap(), 0.0);
        assert_eq!(quantize(&candidate(5.0), 0).unwrap(), 4.0);
        let mut bad = candidate(5.0);
        bad.tau = Poly::linear(1.0, 2.0);
        bad.physical = false;
        assert!(matches!(quantize(&bad, 0), Err(NuError::NotPhysical { .. })));
        assert!(factorize(&bad, 0).is_err());
    }

    #[test]
    fn factorize_simple() {
        let f = factorize(&candidate(5.0), 3).unwrap();
        assert_eq!((f.phi_power, f.phi_rate), (0.0, -1.0));
        assert_eq!((f.rho_power, f.rho_rate), (0.0, -2.0));
        assert_eq!(f.laguerre, LaguerreSpec::new(3, 0.0, 2.0).unwrap());
        // (s rho)' = tau rho
        let s = 0.8;
        let h = 1e-6;
        let srho = |s: f64| s * f.rho(s).unwrap();
        let lhs = (srho(s + h) - srho(s - h)) / (2.0 * h);
        assert!((lhs - (1.0 - 2.0 * s) * f.rho(s).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn factorize_case_one_rows() {
        // tau~ = 3 - 4 eta form; physical Case I on the Plus k-branch
        let (xi1, xi2, xi3, eta) = (1.7, -4.0, -0.6, 0.3);
        let p = problem(xi1, xi2, xi3, 3.0 - 4.0 * eta);
        let d = (xi1 * ((2.0 * eta - 1.0f64).powi(2) - xi3)).sqrt();
        let r = xi1.sqrt();
        let c = physical_candidate(&p, KBranch::Plus, SQUARE_TOL).unwrap();
        let f = factorize(&c, 2).unwrap();
        assert!((f.rho_power + 2.0 * d / r).abs() < 1e-12);
        assert!((f.rho_rate + 2.0 * r).abs() < 1e-12);
        assert!((f.phi_power - (2.0 * eta - 1.0 - d / r)).abs() < 1e-12);
        assert!((f.phi_rate + r).abs() < 1e-12);
        let c2 = physical_candidate(&p, KBranch::Minus, SQUARE_TOL).unwrap();
        let f2 = factorize(&c2, 2).unwrap();
        assert!((f2.phi_power - (2.0 * eta - 1.0 + d / r)).abs() < 1e-12);
        assert!((f2.rho_power - 2.0 * d / r).abs() < 1e-12);
    }

    #[test]
    fn wavefunction_examples() {
        let f = FactorizedSolution {
            phi_power: 0.0,
            phi_rate: -1.0,
            rho_power: 0.0,
            rho_rate: -2.0,
            laguerre: LaguerreSpec::new(0, 0.0, 2.0).unwrap(),
        };
        assert!((evaluate_wavefunction(&f, 0, 1.0).unwrap() - 1.0 / E1).abs() < 1e-15);
        let g = FactorizedSolution {
            phi_power: 2.0,
            phi_rate: -1.0,
            rho_power: 4.0,
            rho_rate: -2.0,
            laguerre: LaguerreSpec::new(0, 4.0, 2.0).unwrap(),
        };
        assert!((evaluate_wavefunction(&g, 0, 1.0).unwrap() - 1.0 / E1).abs() < 1e-15);
        let v = evaluate_wavefunction(&g, 1, 2.0).unwrap();
        assert!((v - 4.0 * (-2.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn wavefunction_domain() {
        let f = FactorizedSolution {
            phi_power: 0.5,
            phi_rate: -1.0,
            rho_power: 1.0,
            rho_rate: -2.0,
            laguerre: LaguerreSpec::new(1, 1.0, 2.0).unwrap(),
        };
        assert!(matches!(evaluate_wavefunction(&f, 1, -1.0), Err(NuError::Domain { .. })));
        assert!(evaluate_wavefunction(&f, 1, 0.0).is_err());
        let g = FactorizedSolution { phi_power: 2.0, ..f };
        assert_eq!(evaluate_wavefunction(&g, 0, 0.0).unwrap(), 0.0);
        assert!(evaluate_wavefunction(&g, 0, -1.0).unwrap().is_finite());
    }

    #[test]
    fn factorization_identity_pointwise() {
        let p = problem(2.25, -6.0, -1.0, 1.0);
        for c in enumerate_candidates(&p, SQUARE_TOL).unwrap().iter().filter(|c| c.physical) {
            let f = factorize(c, 3).unwrap();
            for &s in &[0.1f64, 0.7, 1.9, 4.2] {
                let direct = s.powf(c.pi.c0())
                    * (c.pi.c1() * s).exp()
                    * laguerre_eval(3, c.tau.c0() - 1.0, -c.tau.c1() * s)
                    / 6.0;
                let psi = f.value(s).unwrap();
                assert!((psi - direct).abs() <= 1e-12 * direct.abs().max(1e-300));
                assert!((psi - f.phi(s).unwrap() * f.y(s)).abs() <= 1e-12 * psi.abs());
            }
        }
    }

    #[test]
    fn solved_level_satisfies_equation() {
        // sigma~ = -xi1 s^2 + 5 s - q with xi1 unknown; tau~ = 1
        let build = |r: f64| NuProblem::new(Poly::constant(1.0), Poly::new(-0.25, 5.0, -r * r));
        for n in 0..3 {
            let r = solve_quantization(build, n, KBranch::Minus, (0.1, 10.0), 1e-14).unwrap();
            let expected = 5.0 / (2.0 * n as f64 + 2.0);
            assert!((r - expected).abs() < 1e-12, "n={n} r={r}");
            let p = build(r).unwrap();
            let c = physical_candidate(&p, KBranch::Minus, SQUARE_TOL).unwrap();
            let f = factorize(&c, n).unwrap();
            for &s in &[0.3, 1.0, 2.5] {
                let d = f.derivatives(s).unwrap();
                let scale = (s * s * d[2]).abs() + (s * d[1]).abs() + (5.0 * s * d[0]).abs();
                assert!(p.residual(s, d).abs() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn solve_reports_missing_sign_change() {
        let build = |r: f64| NuProblem::new(Poly::constant(1.0), Poly::new(-0.25, 5.0, -r * r));
        assert!(matches!(
            solve_quantization(build, 0, KBranch::Minus, (3.0, 10.0), 1e-12),
            Err(NuError::NoSignChange { .. })
        ));
    }
}
