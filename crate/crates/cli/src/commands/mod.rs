mod entangle;
mod ellipse;
mod optimize;
mod phasematch;
mod profile;
mod scan;
mod tmsv;

use crate::args::Command;
use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};

/// Rendered output plus warnings for the error stream.
#[derive(Debug, Default)]
pub struct Rendered {
    pub bytes: Vec<u8>,
    pub warnings: Vec<String>,
}

pub fn run(command: &Command, cfg: &RunConfig) -> CliResult<Rendered> {
    match command {
        Command::Scan { j, m, window, step } => scan::run(j, *m, *window, *step, cfg),
        Command::Optimize { j, m } => optimize::run(j, *m, cfg),
        Command::Phasematch {
            v,
            x,
            orders,
            form,
            delta_omega_prime,
            time,
            length,
        } => {
            let v = match (v, x) {
                (Some(v), _) => *v,
                (None, Some(x)) => cfg.params.velocity_from_normalized(*x),
                (None, None) => return Err(CliError::Config("one of --v or --x is required".into())),
            };
            phasematch::run(
                &phasematch::Request {
                    v,
                    orders,
                    form: *form,
                    delta_omega_prime: *delta_omega_prime,
                    time: *time,
                    length: *length,
                },
                cfg,
            )
        }
        Command::Ellipse { j, m, at } => ellipse::run(*j, *m, *at, cfg),
        Command::Tmsv { xi, phi } => tmsv::run(*xi, *phi, cfg),
        Command::Entangle {
            j,
            m,
            window,
            nodes,
            matched,
            time,
            phi,
            phase_fix,
            sweep_max,
        } => entangle::run(
            &entangle::Request {
                j: *j,
                m: *m,
                window: *window,
                nodes: *nodes,
                matched: *matched,
                time: *time,
                phi: *phi,
                phase_fix: *phase_fix,
                sweep_max: *sweep_max,
            },
            cfg,
        ),
        Command::Profile {
            m,
            p,
            x,
            v,
            r_max,
            zeta_max,
            nr,
            nz,
        } => profile::run(
            &profile::Request {
                m: *m,
                p: *p,
                v: v.unwrap_or_else(|| cfg.params.velocity_from_normalized(*x)),
                r_max: *r_max,
                zeta_max: *zeta_max,
                nr: *nr,
                nz: *nz,
            },
            cfg,
        ),
    }
}

fn table_format(cfg: &RunConfig) -> Format {
    cfg.format.unwrap_or(Format::Csv)
}

fn report_format(cfg: &RunConfig, command: &str) -> CliResult<Format> {
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => Ok(Format::Json),
        Format::Csv => Err(CliError::Config(format!("`{command}` writes a JSON report; csv is not available"))),
    }
}

/// Non-finite values become JSON null / empty CSV cells.
fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}
