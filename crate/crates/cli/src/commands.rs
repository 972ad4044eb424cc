use serde::Serialize;

use nuvarov_core::morse::{self, CorrespondenceReport, MorseError, MorseModel};
use nuvarov_core::oracle::GridSpec;
use nuvarov_core::pdm::{self, AmbiguityParams, BoundState, Branch, ExpMassModel};
use nuvarov_core::verify::{verify_morse, verify_pdm, VerificationReport};

use crate::args::{AmbiguityArgs, Cli, Command, GridArgs, MorseArgs, OutputArgs, PdmArgs, SamplingArgs};
use crate::output::{emit, num, Report, Table};
use crate::CliError;

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    /// A report was written but closed forms and oracle disagree.
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Done => 0,
            Outcome::VerificationFailed => 3,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn ambiguity(a: &AmbiguityArgs) -> Result<AmbiguityParams, CliError> {
    AmbiguityParams::new(a.alpha, a.beta, a.eta).map_err(invalid)
}

fn pdm_inputs(a: &PdmArgs) -> Result<(ExpMassModel, AmbiguityParams), CliError> {
    Ok((ExpMassModel::new(a.lambda, a.v0, a.b, a.a).map_err(invalid)?, ambiguity(&a.ambiguity)?))
}

fn morse_input(a: &MorseArgs) -> Result<MorseModel, CliError> {
    MorseModel::new(a.v1, a.v2, a.alpha_star, a.mass, a.hbar).map_err(invalid)
}

#[derive(Debug, Serialize)]
struct PdmInput {
    #[serde(flatten)]
    model: ExpMassModel,
    #[serde(flatten)]
    params: AmbiguityParams,
}

#[derive(Debug, Serialize)]
struct WithLevel<T> {
    #[serde(flatten)]
    inputs: T,
    level: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<Branch>,
}

#[derive(Debug, Serialize)]
struct LevelRow {
    n: usize,
    energy: f64,
    branch: Branch,
    normalizable: bool,
    laguerre_param: f64,
}

impl From<&BoundState> for LevelRow {
    fn from(st: &BoundState) -> Self {
        Self { n: st.n, energy: st.energy, branch: st.branch, normalizable: st.normalizable, laguerre_param: st.laguerre_param() }
    }
}

#[derive(Debug, Serialize)]
struct Levels {
    levels: Vec<LevelRow>,
}

impl Table for Levels {
    fn header(&self) -> Vec<&'static str> {
        vec!["n", "energy", "branch", "normalizable", "laguerre_param"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.levels
            .iter()
            .map(|l| {
                vec![
                    l.n.to_string(),
                    num(l.energy),
                    l.branch.label().to_string(),
                    l.normalizable.to_string(),
                    num(l.laguerre_param),
                ]
            })
            .collect()
    }
}

#[derive(Debug, Serialize)]
struct Sample {
    x: f64,
    s: f64,
    psi: f64,
    phi: f64,
}

#[derive(Debug, Serialize)]
struct Samples {
    samples: Vec<Sample>,
}

impl Table for Samples {
    fn header(&self) -> Vec<&'static str> {
        vec!["x", "s", "psi", "phi"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.samples.iter().map(|p| vec![num(p.x), num(p.s), num(p.psi), num(p.phi)]).collect()
    }
}

#[derive(Debug, Serialize)]
struct Verification {
    verification: VerificationReport,
}

impl Table for Verification {
    fn header(&self) -> Vec<&'static str> {
        vec!["n", "closed_form", "oracle", "richardson", "rel_err", "convergence_order", "pass"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let v = &self.verification;
        (0..v.closed_form.len())
            .map(|i| {
                vec![
                    i.to_string(),
                    num(v.closed_form[i]),
                    num(v.oracle[i]),
                    num(v.richardson[i]),
                    num(v.rel_err[i]),
                    num(v.convergence_order[i]),
                    (v.rel_err[i] <= v.tolerance).to_string(),
                ]
            })
            .collect()
    }
}

#[derive(Debug, Serialize)]
struct CorrespondenceSummary {
    a: f64,
    b: f64,
    pdm_epsilon: f64,
    v0: f64,
    e_star: f64,
}

#[derive(Debug, Serialize)]
struct MapCheck {
    #[serde(flatten)]
    report: Option<CorrespondenceReport>,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct Mapping {
    correspondence: CorrespondenceSummary,
    verification: MapCheck,
}

impl Table for Mapping {
    fn header(&self) -> Vec<&'static str> {
        vec!["branch", "index", "energy", "normalizable", "identity_residual"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let Some(r) = &self.verification.report else { return Vec::new() };
        r.matches
            .iter()
            .map(|m| {
                vec![
                    m.branch.label().to_string(),
                    m.index.to_string(),
                    num(m.energy),
                    m.normalizable.to_string(),
                    num(m.identity_residual),
                ]
            })
            .collect()
    }
}

fn branches(case: Option<Branch>) -> Vec<Branch> {
    case.map_or_else(|| vec![Branch::CaseI, Branch::CaseII], |b| vec![b])
}

fn linspace(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>, CliError> {
    if count == 0 {
        return Err(CliError::Invalid("--samples must be at least 1".into()));
    }
    if !(hi > lo) {
        return Err(CliError::Invalid(format!("sampling window needs xlo < xhi, got [{lo}, {hi}]")));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { hi } else { lo + i as f64 * step }).collect())
}

/// Window in `x` covering `s` from `1e-3` to `20` decay lengths.
fn default_window(decay: f64, x_of_s: impl Fn(f64) -> f64) -> (f64, f64) {
    (x_of_s(20.0 / decay), x_of_s(1e-3 / decay))
}

fn window(s: &SamplingArgs, default: (f64, f64)) -> (f64, f64) {
    (s.xlo.unwrap_or(default.0), s.xhi.unwrap_or(default.1))
}

fn finish<M: Serialize, B: Serialize + Table>(report: Report<M, B>, out: &OutputArgs) -> Result<(), CliError> {
    emit(&report, out.format, out.output.as_deref())
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::PdmSpectrum { model, levels, case, out } => {
            let (m, p) = pdm_inputs(&model)?;
            let rows = pdm::spectrum(&m, &p, levels)
                .iter()
                .filter(|st| case.map_or(true, |c| st.branch == c))
                .map(LevelRow::from)
                .collect();
            let report = Report { model: PdmInput { model: m, params: p }, method: "closed-form", body: Levels { levels: rows } };
            finish(report, &out)?;
        }
        Command::NuSolve { model, levels, case, out } => {
            let (m, p) = pdm_inputs(&model)?;
            let mut rows = Vec::new();
            for branch in branches(case) {
                for n in 0..levels {
                    match pdm::solve_state(&m, &p, n, branch) {
                        Ok(st) if st.branch == branch => rows.push(LevelRow::from(&st)),
                        Ok(_) | Err(pdm::PdmError::NoBoundState { .. }) => {}
                        Err(e) => return Err(invalid(e)),
                    }
                }
            }
            let report = Report {
                model: PdmInput { model: m, params: p },
                method: "nikiforov-uvarov quantization by bisection",
                body: Levels { levels: rows },
            };
            finish(report, &out)?;
        }
        Command::PdmWavefunction { model, level, case, sampling, out } => {
            let (m, p) = pdm_inputs(&model)?;
            let st = pdm::state(&m, &p, level, case).map_err(invalid)?;
            let (lo, hi) = window(&sampling, default_window(-st.wf.phi_rate, |s| m.x_of_s(s)));
            let samples = linspace(lo, hi, sampling.samples)?
                .into_iter()
                .map(|x| {
                    let s = m.s_of_x(x);
                    Ok(Sample { x, s, psi: st.psi(s).map_err(invalid)?, phi: st.phi_at(&m, &p, x).map_err(invalid)? })
                })
                .collect::<Result<_, CliError>>()?;
            let inputs = WithLevel { inputs: PdmInput { model: m, params: p }, level, case: Some(st.branch) };
            finish(Report { model: inputs, method: "closed-form", body: Samples { samples } }, &out)?;
        }
        Command::MorseSpectrum { model, levels, out } => {
            let m = morse_input(&model)?;
            let rows = morse::spectrum(&m, levels)
                .iter()
                .map(|l| LevelRow {
                    n: l.n,
                    energy: l.energy,
                    branch: Branch::CaseII,
                    normalizable: l.normalizable,
                    laguerre_param: l.laguerre_param,
                })
                .collect();
            finish(Report { model: m, method: "closed-form", body: Levels { levels: rows } }, &out)?;
        }
        Command::MorseWavefunction { model, level, sampling, out } => {
            let m = morse_input(&model)?;
            let lvl = morse::level(&m, level).map_err(invalid)?;
            let wf = morse::level_wavefunction(&m, &lvl).map_err(invalid)?;
            let x_of_s = |s: f64| -(s / m.v1.sqrt()).ln() / m.alpha_star;
            let (lo, hi) = window(&sampling, default_window(m.gamma_star(), x_of_s));
            let samples = linspace(lo, hi, sampling.samples)?
                .into_iter()
                .map(|x| {
                    let s = m.s_of_x(x);
                    let psi = wf.value(s).map_err(invalid)?;
                    Ok(Sample { x, s, psi, phi: psi })
                })
                .collect::<Result<_, CliError>>()?;
            let inputs = WithLevel { inputs: m, level, case: None };
            finish(Report { model: inputs, method: "closed-form", body: Samples { samples } }, &out)?;
        }
        Command::VerifyPdm { model, levels, grid, out } => {
            let (m, p) = pdm_inputs(&model)?;
            let s_grid = pdm_grid(&m, &grid)?;
            let report = verify_pdm(&m, &p, s_grid, levels, grid.tol).map_err(invalid)?;
            return finish_verification(PdmInput { model: m, params: p }, report, &out);
        }
        Command::VerifyMorse { model, levels, grid, out } => {
            let m = morse_input(&model)?;
            let g = GridSpec::new(grid.xlo.unwrap_or(-4.0), grid.xhi.unwrap_or(16.0), grid.n.unwrap_or(4000))
                .map_err(invalid)?;
            let report = verify_morse(&m, g, levels, grid.tol).map_err(invalid)?;
            return finish_verification(m, report, &out);
        }
        Command::Map { model, ambiguity: amb, level, out } => {
            let m = morse_input(&model)?;
            let p = ambiguity(&amb)?;
            let c = morse::map_morse_to_pdm(&m, &p, level).map_err(invalid)?;
            let report = match morse::verify_correspondence(&c, &p, level) {
                Ok(r) => Some(r),
                Err(MorseError::NoMatch { .. }) => None,
                Err(e) => return Err(invalid(e)),
            };
            let pass = report.is_some();
            let body = Mapping {
                correspondence: CorrespondenceSummary {
                    a: c.a,
                    b: c.b,
                    pdm_epsilon: c.pdm_epsilon,
                    v0: c.v0(),
                    e_star: c.e_star(),
                },
                verification: MapCheck { report, pass },
            };
            let inputs = MapInput { morse: m, params: p, level };
            finish(Report { model: inputs, method: "morse-to-pdm correspondence", body }, &out)?;
            if !pass {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Done)
}

#[derive(Debug, Serialize)]
struct MapInput {
    #[serde(flatten)]
    morse: MorseModel,
    #[serde(flatten)]
    params: AmbiguityParams,
    level: usize,
}

/// The radial grid for an `x` window; defaults to `s` in `(1e-4, 60)`.
fn pdm_grid(m: &ExpMassModel, g: &GridArgs) -> Result<GridSpec, CliError> {
    let xlo = g.xlo.unwrap_or_else(|| m.x_of_s(60.0));
    let xhi = g.xhi.unwrap_or_else(|| m.x_of_s(1e-4));
    if !(xhi > xlo) {
        return Err(CliError::Invalid(format!("grid needs xlo < xhi, got [{xlo}, {xhi}]")));
    }
    GridSpec::new(m.s_of_x(xhi), m.s_of_x(xlo), g.n.unwrap_or(8000)).map_err(invalid)
}

fn finish_verification<M: Serialize>(model: M, report: VerificationReport, out: &OutputArgs) -> Result<Outcome, CliError> {
    let pass = report.pass;
    let body = Verification { verification: report };
    finish(Report { model, method: "finite-difference oracle with richardson extrapolation", body }, out)?;
    Ok(if pass { Outcome::Done } else { Outcome::VerificationFailed })
}
