use serde::Serialize;
use xwave::fockspace::{joint_quadrature_variances, tmsv_analytic, tmsv_tail_bound, JointVariances};

use super::{report_format, Rendered};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::render_json;

#[derive(Debug, Serialize)]
struct Report {
    xi: f64,
    phi: f64,
    n_max: usize,
    tail_eps: f64,
    norm: f64,
    tail_mass: f64,
    tail_bound: f64,
    truncation_safe: bool,
    warning: Option<String>,
    mean_n_a: f64,
    mean_n_b: f64,
    joint_variances: JointVariances,
    /// `P(n_A = n)` for `n = 0..=n_max`; the state is diagonal so this is
    /// also the pair-number distribution.
    distribution: Vec<f64>,
}

pub fn run(xi: f64, phi: f64, cfg: &RunConfig) -> CliResult<Rendered> {
    if !xi.is_finite() || !phi.is_finite() {
        return Err(CliError::Config("--xi and --phi must be finite".into()));
    }
    report_format(cfg, "tmsv")?;
    let state = tmsv_analytic(xi, phi, cfg.n_max).with_tail_eps(cfg.tail_eps);
    let dist = state.marginal_a();
    let mean = |d: &[f64]| d.iter().enumerate().map(|(n, p)| n as f64 * p).sum::<f64>();
    let safe = state.truncation_safe();
    let warning = (!safe).then(|| {
        format!(
            "truncation unsafe: outer-shell mass {:.3e} exceeds {:.1e}; raise --n-max",
            state.tail_mass(),
            cfg.tail_eps
        )
    });
    let report = Report {
        xi,
        phi,
        n_max: cfg.n_max,
        tail_eps: cfg.tail_eps,
        norm: state.norm(),
        tail_mass: state.tail_mass(),
        tail_bound: tmsv_tail_bound(xi, cfg.n_max),
        truncation_safe: safe,
        warning: warning.clone(),
        mean_n_a: mean(&dist),
        mean_n_b: mean(&state.marginal_b()),
        joint_variances: joint_quadrature_variances(&state),
        distribution: dist,
    };
    Ok(Rendered {
        bytes: render_json(&report)?,
        warnings: warning.into_iter().collect(),
    })
}
