use serde::Serialize;
use xwave::squeezing::{axicon_angle, optimal_velocity, pulse_scaled_squeezing, rate_from_normalized};

use super::{table_format, Rendered};
use crate::config::RunConfig;
use crate::error::CliResult;
use crate::output::render_table;

#[derive(Debug, Serialize)]
struct Row {
    j: u32,
    m: i32,
    x_opt: f64,
    v_opt: f64,
    xi_n_max: f64,
    theta_opt_deg: Option<f64>,
    /// `χ|ξ^(N)|/τ` with `τ = Δ/c`, 1/s.
    squeezing_pulse_scaled: f64,
    /// `4χ|ξ^(N)|/Δ`, 1/s.
    rate_si: f64,
}

pub fn run(js: &[u32], m: i32, cfg: &RunConfig) -> CliResult<Rendered> {
    let p = &cfg.params;
    let mut warnings = Vec::new();
    let rows: Vec<Row> = js
        .iter()
        .map(|&j| {
            let opt = optimal_velocity(j, m);
            let theta = match axicon_angle(opt.x_opt, p.delta, p.lambda) {
                Ok(t) => Some(t.to_degrees()),
                Err(e) => {
                    warnings.push(format!("j = {j}: axicon angle omitted ({e})"));
                    None
                }
            };
            Row {
                j,
                m,
                x_opt: opt.x_opt,
                v_opt: p.velocity_from_normalized(opt.x_opt),
                xi_n_max: opt.xi_normalized.abs(),
                theta_opt_deg: theta,
                squeezing_pulse_scaled: pulse_scaled_squeezing(opt.xi_normalized, p),
                rate_si: rate_from_normalized(opt.xi_normalized, p),
            }
        })
        .collect();
    Ok(Rendered {
        bytes: render_table(&rows, table_format(cfg))?,
        warnings,
    })
}
