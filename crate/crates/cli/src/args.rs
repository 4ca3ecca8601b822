use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Format, Window};

/// Velocity phase matching, spectral-order squeezing and entanglement checks
/// for down-converted X-wave pairs.
#[derive(Debug, Parser)]
#[command(name = "xwave", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Flat `key = value` config file; flags take precedence over it.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// First-order dispersion ω' (m/s).
    #[arg(long, global = true)]
    pub omega_prime: Option<f64>,
    /// Second-order dispersion ω'' (m²/s).
    #[arg(long, global = true)]
    pub omega_dprime: Option<f64>,
    /// Carrier wavenumber k (1/m).
    #[arg(long, global = true)]
    pub wavenumber: Option<f64>,
    /// Carrier wavelength λ (m).
    #[arg(long, global = true)]
    pub lambda: Option<f64>,
    /// Spectral length scale Δ (m).
    #[arg(long, global = true)]
    pub delta: Option<f64>,
    /// Sets Δ = c·τ from a pulse duration τ (s).
    #[arg(long, global = true, conflicts_with = "delta")]
    pub pulse_duration: Option<f64>,
    /// Quadratic coupling χ.
    #[arg(long, global = true)]
    pub chi: Option<f64>,
    /// Fock cutoff per mode.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Outermost-shell probability above which a state is flagged.
    #[arg(long, global = true)]
    pub tail_eps: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Time,
    Length,
}

/// Normalized velocity for the ellipse: the optimum or an explicit value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum At {
    Opt,
    X(f64),
}

impl std::str::FromStr for At {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("opt") {
            return Ok(At::Opt);
        }
        s.parse().map(At::X).map_err(|_| format!("expected `opt` or a number, got {s:?}"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate |ξ^(N)(x)| over a normalized-velocity window.
    Scan {
        #[arg(long, value_delimiter = ',', default_value = "0")]
        j: Vec<u32>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        /// Window `a:b`; rows are at x = a + i·step, i = 1..=(b−a)/step.
        #[arg(long)]
        window: Option<Window>,
        #[arg(long)]
        step: Option<f64>,
    },
    /// Optimal normalized velocity, peak squeezing and axicon angle per order.
    Optimize {
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5")]
        j: Vec<u32>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
    },
    /// Velocity matching: partner velocity, interaction time and length per order.
    Phasematch {
        /// Idler velocity (m/s).
        #[arg(long, required_unless_present = "x", conflicts_with = "x")]
        v: Option<f64>,
        /// Idler velocity in normalized units x = vΔ/ω''.
        #[arg(long)]
        x: Option<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        orders: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Form::Time)]
        form: Form,
        /// Δω' = ω'₁ − ω'₂ (m/s).
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta_omega_prime: f64,
        /// Fixed interaction time (s); defaults to the matched time of each order.
        #[arg(long)]
        time: Option<f64>,
        /// Fixed crystal length (m); defaults to the matched length of each order.
        #[arg(long)]
        length: Option<f64>,
    },
    /// Squeezing ellipse in quadrature space.
    Ellipse {
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        /// `opt` or a normalized velocity.
        #[arg(long, default_value = "opt")]
        at: At,
    },
    /// Two-mode squeezed vacuum report.
    Tmsv {
        #[arg(long, allow_hyphen_values = true)]
        xi: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi: f64,
    },
    /// Separability criterion on the velocity-window pair family.
    Entangle {
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        /// Normalized velocity window; defaults to x_opt ± 0.5.
        #[arg(long)]
        window: Option<Window>,
        #[arg(long, default_value_t = 16)]
        nodes: usize,
        /// Take every channel as phase matched (|ℱ|² = 4).
        #[arg(long)]
        matched: bool,
        /// Interaction time (s) for unmatched weights.
        #[arg(long)]
        time: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi: f64,
        /// Rotate mode A by −φ before evaluating.
        #[arg(long)]
        phase_fix: bool,
        /// Highest order of the spectral sweep.
        #[arg(long, default_value_t = 5)]
        sweep_max: u32,
    },
    /// |ψ|² of one X-wave mode on an (R, ζ) grid at θ = 0.
    Profile {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value_t = 0)]
        p: u32,
        /// Mode velocity in normalized units.
        #[arg(long, default_value_t = 3.0, conflicts_with = "v")]
        x: f64,
        /// Mode velocity (m/s).
        #[arg(long)]
        v: Option<f64>,
        /// Largest radius (m); defaults to 10Δ/κ with κ² = ω''k/ω'.
        #[arg(long)]
        r_max: Option<f64>,
        /// Half-width of the ζ range (m); defaults to 5Δ.
        #[arg(long)]
        zeta_max: Option<f64>,
        #[arg(long, default_value_t = 21)]
        nr: usize,
        #[arg(long, default_value_t = 21)]
        nz: usize,
    },
}
