//! Squeezing of down-converted X-wave pairs.
//!
//! Interaction and vertex functions, two-photon amplitudes, the squeezing
//! parameter `ξ_mj(v)` with its normalized form, and the optimal-velocity
//! analysis over the normalized velocity `x = vΔ/ω''`.

mod search;

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use search::{
    count_peaks, golden_section_max, optimal_velocity, scan_window, Optimum, PeakScan, GRID_STEP,
    PEAK_THRESHOLD,
};

use crate::error::{ensure_finite, Error, Result};
use crate::medium::{mode_frequency, MediumParams, XWaveMode, SPEED_OF_LIGHT};
use crate::phasematch::{mismatch_time, VelocityPair};
use crate::specfun::laguerre_unchecked;

/// `(-1)^m` for any integer OAM number.
pub fn parity(m: i32) -> f64 {
    if m.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Interaction function `χ_mpq(u+v)` of the time-dependent Hamiltonian.
/// Vanishes for `u + v ≤ 0` (Heaviside step).
pub fn interaction_function(u: f64, v: f64, m: i32, p: u32, q: u32, params: &MediumParams) -> f64 {
    let sum = u + v;
    if !(sum > 0.0) {
        return 0.0;
    }
    let w = params.omega_dprime;
    let y = sum * params.delta / (2.0 * w);
    let norm = (f64::from(1 + p) * f64::from(1 + q)).sqrt();
    parity(m) * params.chi * params.delta * params.delta / (w * w * norm)
        * sum
        * laguerre_unchecked(p, 1, y)
        * laguerre_unchecked(q, 1, y)
        * (-y).exp()
}

/// `χ_mj(2v)`: the interaction function at equal velocities and equal
/// spectral orders.
pub fn degenerate_interaction(v: f64, m: i32, j: u32, params: &MediumParams) -> Result<f64> {
    ensure_finite("v", v)?;
    if v <= 0.0 {
        return Err(Error::Domain(format!("velocity must be positive, got {v}")));
    }
    let w = params.omega_dprime;
    let x = params.normalized_velocity(v);
    let l = laguerre_unchecked(j, 1, x);
    Ok(2.0 * parity(m) * params.chi * params.delta * params.delta * v / (w * w * f64::from(1 + j))
        * l
        * l
        * (-x).exp())
}

/// Modified vertex function `Ξ_mpq(u,v)` of the finite-length Hamiltonian,
/// evaluated at `(u²+v²)Δ / ((u+v)ω'')`.
pub fn vertex_function(u: f64, v: f64, m: i32, p: u32, q: u32, params: &MediumParams) -> Result<f64> {
    let sum = u + v;
    if sum == 0.0 {
        return Err(Error::Singularity("u + v = 0 in the vertex function".into()));
    }
    let w = params.omega_dprime;
    let r = (u * u + v * v) / sum;
    let y = r * params.delta / w;
    let norm = (f64::from(1 + p) * f64::from(1 + q)).sqrt();
    Ok(parity(m) * 2.0 * params.chi * params.delta * params.delta / (w * w * norm)
        * r
        * laguerre_unchecked(p, 1, y)
        * laguerre_unchecked(q, 1, y)
        * (-y).exp())
}

/// Two-photon amplitude `𝒢 = −i sqrt(ω(u)ω(v)) χ_mpq(u+v) / F(u,v)` of the
/// time-dependent interaction. Diverges where `F = 0`.
pub fn amplitude_time(pair: &VelocityPair, m: i32, p: u32, q: u32, params: &MediumParams) -> Result<Complex64> {
    check_velocities(pair)?;
    let f = mismatch_time(pair, params);
    if f == 0.0 {
        return Err(Error::Singularity(
            "F(u,v) = 0: first-order amplitude diverges; use the regularized product with ℱ".into(),
        ));
    }
    let omega = (mode_frequency(pair.u, params) * mode_frequency(pair.v, params)).sqrt();
    let chi = interaction_function(pair.u, pair.v, m, p, q, params);
    Ok(Complex64::new(0.0, -omega * chi / f))
}

/// Two-photon amplitude of the finite-length interaction,
/// `ℒ = −(i/2) sqrt(ω(u)ω(v)) [ω''(u+v)/uv] Ξ_mpq(u,v)`.
pub fn amplitude_length(pair: &VelocityPair, m: i32, p: u32, q: u32, params: &MediumParams) -> Result<Complex64> {
    let uv = pair.u * pair.v;
    if uv == 0.0 {
        return Err(Error::Singularity("uv = 0 in the length amplitude".into()));
    }
    let omega = (mode_frequency(pair.u, params) * mode_frequency(pair.v, params)).sqrt();
    let xi = vertex_function(pair.u, pair.v, m, p, q, params)?;
    let geom = params.omega_dprime * (pair.u + pair.v) / uv;
    Ok(Complex64::new(0.0, -0.5 * omega * geom * xi))
}

fn check_velocities(pair: &VelocityPair) -> Result<()> {
    ensure_finite("u", pair.u)?;
    ensure_finite("v", pair.v)?;
    if pair.u <= 0.0 || pair.v <= 0.0 {
        return Err(Error::Domain(format!(
            "velocities must be positive, got u = {}, v = {}",
            pair.u, pair.v
        )));
    }
    Ok(())
}

/// Normalized squeezing parameter
/// `ξ^(N) = ((−1)^m / 2(1+j)) x³ (L_j^(1)(x))² e^{−x}` at normalized
/// velocity `x = vΔ/ω''`.
pub fn normalized_squeezing(x: f64, m: i32, j: u32) -> f64 {
    let l = laguerre_unchecked(j, 1, x);
    parity(m) / (2.0 * f64::from(1 + j)) * x * x * x * l * l * (-x).exp()
}

/// Output of the squeezing analysis for one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeSpec {
    /// Signed squeezing parameter `ξ = βt`; its sign is the OAM parity.
    pub xi: f64,
    /// `ξ^(N) = Δξ / 4χt`, dimensionless and independent of `t`.
    pub xi_normalized: f64,
    /// Squeeze phase once the sign has been moved into `xi`. The
    /// Hamiltonian fixes it at `−π/2`; a local phase rotation brings it to 0.
    pub phi: f64,
    /// Squeezing rate `β = |α|` with `α = −2iω(v)χ_mj(2v)`, 1/s.
    pub rate: f64,
    /// Mode labels; `mode.p` is the spectral order `j`.
    pub mode: XWaveMode,
}

/// Squeezing parameter of mode `(m, j)` at velocity `v` after interaction
/// time `t`.
///
/// Built from the Heisenberg solution: `α = −2iω(v)χ_mj(2v)`,
/// `β = sqrt(αα*)`, `ξ = ±βt`.
pub fn squeezing_parameter(v: f64, t: f64, m: i32, j: u32, params: &MediumParams) -> Result<SqueezeSpec> {
    ensure_finite("t", t)?;
    if t < 0.0 {
        return Err(Error::Domain(format!("interaction time must be non-negative, got {t}")));
    }
    let coupling = degenerate_interaction(v, m, j, params)?;
    let alpha = Complex64::new(0.0, -2.0 * mode_frequency(v, params) * coupling);
    let rate = (alpha * alpha.conj()).re.sqrt();
    let sign = if coupling < 0.0 { -1.0 } else { 1.0 };
    let xi = sign * rate * t;
    let phi = if rate > 0.0 {
        (alpha / (sign * rate)).arg()
    } else {
        -FRAC_PI_2
    };
    let x = params.normalized_velocity(v);
    debug_assert!({
        let closed = squeezing_closed_form(v, t, m, j, params);
        (xi - closed).abs() <= 1e-12 * closed.abs().max(f64::MIN_POSITIVE)
    });
    Ok(SqueezeSpec {
        xi,
        xi_normalized: normalized_squeezing(x, m, j),
        phi,
        rate,
        mode: XWaveMode { m, p: j, v },
    })
}

/// `ξ_mj(v) = (2(−1)^m χt / (1+j)Δ) x³ (L_j^(1)(x))² e^{−x}` written
/// directly in the normalized velocity.
pub fn squeezing_closed_form(v: f64, t: f64, m: i32, j: u32, params: &MediumParams) -> f64 {
    let x = params.normalized_velocity(v);
    let l = laguerre_unchecked(j, 1, x);
    2.0 * parity(m) * params.chi * t / (f64::from(1 + j) * params.delta) * x * x * x * l * l * (-x).exp()
}

/// Optimal axicon angle, `cos θ = Δ / (n_j λ)`, in radians.
pub fn axicon_angle(n_j: f64, delta: f64, lambda: f64) -> Result<f64> {
    let cos_theta = delta / (n_j * lambda);
    if !(cos_theta > 0.0) || !cos_theta.is_finite() {
        return Err(Error::Domain(format!(
            "Δ/(n_j λ) must be positive and finite, got {cos_theta}"
        )));
    }
    if cos_theta > 1.0 {
        return Err(Error::NoRealAngle { cos_theta });
    }
    Ok(cos_theta.acos())
}

/// Squeezing expressed per unit pulse duration, `χ |ξ^(N)| / τ` with
/// `τ = Δ/c`. This is the scale on which maximal squeezing is quoted for
/// the 8 fs example (about 100 s⁻¹ for `j = 0`).
pub fn pulse_scaled_squeezing(xi_normalized: f64, params: &MediumParams) -> f64 {
    params.chi * xi_normalized.abs() * SPEED_OF_LIGHT / params.delta
}

/// SI squeezing rate `β = 4χ|ξ^(N)|/Δ` for a given normalized squeezing.
pub fn rate_from_normalized(xi_normalized: f64, params: &MediumParams) -> f64 {
    4.0 * params.chi * xi_normalized.abs() / params.delta
}

/// Coefficients of the Bogoliubov evolution
/// `a(t) = cosh(ξ) a + sinh(ξ) e^{iφ} b†`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureCoefficients {
    pub cosh: f64,
    pub sinh: f64,
    pub phase: Complex64,
}

pub fn quadrature_coefficients(spec: &SqueezeSpec) -> QuadratureCoefficients {
    QuadratureCoefficients {
        cosh: spec.xi.cosh(),
        sinh: spec.xi.sinh(),
        phase: Complex64::from_polar(1.0, spec.phi),
    }
}

/// Which joint quadrature is squeezed for a given sign of `ξ` at `φ = 0`:
/// `Y` for `ξ > 0` (even OAM), `X` for `ξ < 0` (odd OAM).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SqueezedAxis {
    X,
    Y,
}

impl SqueezedAxis {
    pub fn for_oam(m: i32) -> Self {
        if parity(m) > 0.0 {
            SqueezedAxis::Y
        } else {
            SqueezedAxis::X
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SqueezedAxis::X => "X",
            SqueezedAxis::Y => "Y",
        }
    }
}
