use serde::Serialize;
use xwave::squeezing::{normalized_squeezing, scan_window};

use super::{table_format, Rendered};
use crate::config::{RunConfig, Window};
use crate::error::{CliError, CliResult};
use crate::output::render_table;

#[derive(Debug, Serialize)]
struct Row {
    x: f64,
    j: u32,
    xi_n_abs: f64,
}

pub fn run(js: &[u32], m: i32, window: Option<Window>, step: Option<f64>, cfg: &RunConfig) -> CliResult<Rendered> {
    let j_max = js.iter().copied().max().ok_or_else(|| CliError::Config("--j needs at least one order".into()))?;
    let window = window.or(cfg.window).unwrap_or(Window {
        lo: 0.0,
        hi: scan_window(j_max),
    });
    window.check()?;
    let step = step.unwrap_or(cfg.step);
    if !(step > 0.0 && step.is_finite()) {
        return Err(CliError::Config(format!("step must be positive, got {step}")));
    }
    // round so that 0:12 with step 0.01 gives exactly 1200 samples
    let n = ((window.hi - window.lo) / step + 1e-9).floor() as usize;
    if n == 0 {
        return Err(CliError::Config("window is narrower than one step".into()));
    }
    let mut rows = Vec::with_capacity(n * js.len());
    for &j in js {
        for i in 1..=n {
            let x = window.lo + i as f64 * step;
            rows.push(Row {
                x,
                j,
                xi_n_abs: normalized_squeezing(x, m, j).abs(),
            });
        }
    }
    Ok(Rendered {
        bytes: render_table(&rows, table_format(cfg))?,
        warnings: Vec::new(),
    })
}
