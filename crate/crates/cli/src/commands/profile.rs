use serde::Serialize;
use xwave::medium::{xwave_profile, XWaveMode};

use super::{table_format, Rendered};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::render_table;

pub struct Request {
    pub m: i32,
    pub p: u32,
    pub v: f64,
    pub r_max: Option<f64>,
    pub zeta_max: Option<f64>,
    pub nr: usize,
    pub nz: usize,
}

#[derive(Debug, Serialize)]
struct Row {
    r: f64,
    zeta: f64,
    intensity: Option<f64>,
    error: String,
}

pub fn run(req: &Request, cfg: &RunConfig) -> CliResult<Rendered> {
    let params = &cfg.params;
    if req.nr < 2 || req.nz < 2 {
        return Err(CliError::Config("--nr and --nz must be at least 2".into()));
    }
    let kappa = (params.omega_dprime * params.wavenumber / params.omega_prime).sqrt();
    let r_max = req.r_max.unwrap_or(10.0 * params.delta / kappa);
    let zeta_max = req.zeta_max.unwrap_or(5.0 * params.delta);
    if !(r_max > 0.0 && r_max.is_finite() && zeta_max > 0.0 && zeta_max.is_finite()) {
        return Err(CliError::Config(format!("grid extents must be positive, got R = {r_max}, ζ = {zeta_max}")));
    }
    let mode = XWaveMode {
        m: req.m,
        p: req.p,
        v: req.v,
    };
    let mut rows = Vec::with_capacity(req.nr * req.nz);
    let mut failures = 0;
    for ir in 0..req.nr {
        let r = r_max * ir as f64 / (req.nr - 1) as f64;
        for iz in 0..req.nz {
            let zeta = -zeta_max + 2.0 * zeta_max * iz as f64 / (req.nz - 1) as f64;
            let row = match xwave_profile(&mode, r, zeta, 0.0, params) {
                Ok(psi) => Row {
                    r,
                    zeta,
                    intensity: Some(psi.norm_sqr()),
                    error: String::new(),
                },
                Err(e) => {
                    failures += 1;
                    Row {
                        r,
                        zeta,
                        intensity: None,
                        error: e.to_string(),
                    }
                }
            };
            rows.push(row);
        }
    }
    let warnings = if failures > 0 {
        vec![format!("{failures} grid points failed to integrate and are marked")]
    } else {
        Vec::new()
    };
    Ok(Rendered {
        bytes: render_table(&rows, table_format(cfg))?,
        warnings,
    })
}
