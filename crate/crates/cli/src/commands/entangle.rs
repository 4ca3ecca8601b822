use serde::Serialize;
use xwave::fockspace::{evaluate_family, spectral_sweep, CriterionReport, FamilyMember, FamilySpec, SweepRow};
use xwave::squeezing::optimal_velocity;

use super::{report_format, Rendered};
use crate::config::{RunConfig, Window};
use crate::error::CliResult;
use crate::output::render_json;

pub struct Request {
    pub j: u32,
    pub m: i32,
    pub window: Option<Window>,
    pub nodes: usize,
    pub matched: bool,
    pub time: Option<f64>,
    pub phi: f64,
    pub phase_fix: bool,
    pub sweep_max: u32,
}

#[derive(Serialize)]
struct Report {
    j: u32,
    m: i32,
    x_lo: f64,
    x_hi: f64,
    nodes: usize,
    matched: bool,
    time: f64,
    phi: f64,
    phase_fix: bool,
    phi_effective: f64,
    n_max: usize,
    normalization: f64,
    kx_weighted: f64,
    kx_normalized: f64,
    kx_closed: f64,
    rhs_closed: f64,
    criterion: CriterionReport,
    members: Vec<FamilyMember>,
    sweep: Vec<SweepRow>,
    warnings: Vec<String>,
}

pub fn run(req: &Request, cfg: &RunConfig) -> CliResult<Rendered> {
    report_format(cfg, "entangle")?;
    let window = match req.window.or(cfg.window) {
        Some(w) => w,
        None => {
            let x = optimal_velocity(req.j, req.m).x_opt;
            Window { lo: x - 0.5, hi: x + 0.5 }
        }
    };
    window.check()?;
    let spec = FamilySpec {
        nodes: req.nodes,
        phi: req.phi,
        phase_fix: req.phase_fix,
        matched: req.matched,
        time: req.time,
        n_max: cfg.n_max,
        tail_eps: cfg.tail_eps,
        ..FamilySpec::new(req.j, req.m, window.lo, window.hi)
    };
    let family = evaluate_family(&spec, &cfg.params)?;
    let sweep = spectral_sweep(&spec, 0..=req.sweep_max, &cfg.params)?;

    let mut warnings = Vec::new();
    if !family.criterion.truncation_safe {
        warnings.push("family contains truncation-unsafe members; raise --n-max".to_string());
    }
    for row in sweep.iter().filter(|r| !r.truncation_safe) {
        warnings.push(format!("sweep j = {}: truncation unsafe at n_max = {}", row.j, cfg.n_max));
    }
    let report = Report {
        j: req.j,
        m: req.m,
        x_lo: family.x_lo,
        x_hi: family.x_hi,
        nodes: req.nodes,
        matched: req.matched,
        time: family.time,
        phi: req.phi,
        phase_fix: req.phase_fix,
        phi_effective: family.phi_effective,
        n_max: cfg.n_max,
        normalization: family.normalization,
        kx_weighted: family.kx_weighted,
        kx_normalized: family.criterion.mean_kx,
        kx_closed: family.kx_closed,
        rhs_closed: family.rhs_closed,
        criterion: family.criterion,
        members: family.members,
        sweep,
        warnings: warnings.clone(),
    };
    Ok(Rendered {
        bytes: render_json(&report)?,
        warnings,
    })
}
