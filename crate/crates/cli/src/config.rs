//! Run configuration: built-in defaults, then a `key = value` file, then flags.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use xwave::fockspace::{DEFAULT_N_MAX, DEFAULT_TAIL_EPS};
use xwave::medium::SPEED_OF_LIGHT;
use xwave::MediumParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Config(format!("format must be csv or json, got {other:?}"))),
        }
    }
}

/// Closed normalized-velocity window `a:b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("window must look like a:b, got {s:?}"))?;
        let lo: f64 = a.trim().parse().map_err(|_| format!("bad window start {a:?}"))?;
        let hi: f64 = b.trim().parse().map_err(|_| format!("bad window end {b:?}"))?;
        Ok(Window { lo, hi })
    }
}

impl Window {
    pub fn check(&self) -> CliResult<()> {
        if !(self.lo.is_finite() && self.hi.is_finite()) || self.hi <= self.lo {
            return Err(CliError::Config(format!(
                "empty window {}:{}; the end must exceed the start",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: MediumParams,
    pub window: Option<Window>,
    pub step: f64,
    pub n_max: usize,
    pub tail_eps: f64,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: MediumParams::femtosecond_850nm(),
            window: None,
            step: 0.01,
            n_max: DEFAULT_N_MAX,
            tail_eps: DEFAULT_TAIL_EPS,
            format: None,
            out: None,
        }
    }
}

fn number<T: FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("{key}: cannot parse {value:?}")))
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> CliResult<()> {
        let p = &mut self.params;
        match key {
            "omega_prime" => p.omega_prime = number(key, value)?,
            "omega_dprime" => p.omega_dprime = number(key, value)?,
            "wavenumber" => p.wavenumber = number(key, value)?,
            "lambda" => p.lambda = number(key, value)?,
            "delta" => p.delta = number(key, value)?,
            "pulse_duration" => p.delta = SPEED_OF_LIGHT * number::<f64>(key, value)?,
            "chi" => p.chi = number(key, value)?,
            "window" => self.window = Some(value.parse().map_err(CliError::Config)?),
            "step" => self.step = number(key, value)?,
            "n_max" => self.n_max = number(key, value)?,
            "tail_eps" => self.tail_eps = number(key, value)?,
            "format" => self.format = Some(value.parse()?),
            "out" => self.out = Some(PathBuf::from(value.trim())),
            other => return Err(CliError::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Applies a flat `key = value` file; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> CliResult<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> CliResult<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        self.apply_text(&text)
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(CliError::Config(format!("step must be positive, got {}", self.step)));
        }
        if self.n_max < 1 {
            return Err(CliError::Config("n_max must be at least 1".into()));
        }
        if !(self.tail_eps > 0.0 && self.tail_eps.is_finite()) {
            return Err(CliError::Config(format!("tail_eps must be positive, got {}", self.tail_eps)));
        }
        if let Some(w) = self.window {
            w.check()?;
        }
        self.params.validate().map_err(|e| CliError::Config(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let mut c = RunConfig::default();
        c.apply_text("# medium\nchi = 2e-12\nlambda=1e-6 # trailing\n\nwindow = 1:4\nformat = JSON\n")
            .unwrap();
        assert_eq!(c.params.chi, 2e-12);
        assert_eq!(c.params.lambda, 1e-6);
        assert_eq!(c.window, Some(Window { lo: 1.0, hi: 4.0 }));
        assert_eq!(c.format, Some(Format::Json));
    }

    #[test]
    fn rejects_unknown_keys_and_garbage() {
        let mut c = RunConfig::default();
        assert!(c.apply_text("colour = blue").is_err());
        assert!(c.apply_text("chi").is_err());
        assert!(c.apply_text("chi = lots").is_err());
    }

    #[test]
    fn pulse_duration_sets_delta() {
        let mut c = RunConfig::default();
        c.set("pulse_duration", "8e-15").unwrap();
        assert_eq!(c.params.delta, MediumParams::femtosecond_850nm().delta);
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.window = Some(Window { lo: 5.0, hi: 5.0 });
        assert!(c.validate().is_err());
        c.window = None;
        c.step = 0.0;
        assert!(c.validate().is_err());
    }
}
