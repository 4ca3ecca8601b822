mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, GlobalArgs};
use config::RunConfig;
use error::CliResult;

fn build_config(g: &GlobalArgs) -> CliResult<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &g.config {
        cfg.apply_file(path)?;
    }
    let p = &mut cfg.params;
    let overrides = [
        (&mut p.omega_prime, g.omega_prime),
        (&mut p.omega_dprime, g.omega_dprime),
        (&mut p.wavenumber, g.wavenumber),
        (&mut p.lambda, g.lambda),
        (&mut p.delta, g.delta),
        (&mut p.chi, g.chi),
    ];
    for (slot, value) in overrides {
        if let Some(v) = value {
            *slot = v;
        }
    }
    if let Some(tau) = g.pulse_duration {
        cfg.set("pulse_duration", &tau.to_string())?;
    }
    if let Some(n) = g.n_max {
        cfg.n_max = n;
    }
    if let Some(e) = g.tail_eps {
        cfg.tail_eps = e;
    }
    if g.format.is_some() {
        cfg.format = g.format;
    }
    if g.out.is_some() {
        cfg.out = g.out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> CliResult<()> {
    let cfg = build_config(&cli.global)?;
    let rendered = commands::run(&cli.command, &cfg)?;
    for w in &rendered.warnings {
        eprintln!("warning: {w}");
    }
    output::write_output(&rendered.bytes, cfg.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
