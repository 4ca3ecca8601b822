//! Medium and dispersion constants, X-wave mode labels, and the mode
//! structure built on them: mode frequency, X-wave mass, spectrum function
//! and the generalized X-wave profile.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::quad::{integrate, QuadConfig};
use crate::specfun::{bessel_j_unchecked, laguerre_unchecked};

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Dispersion and coupling constants of the nonlinear medium (SI units).
///
/// Both down-converted modes share one parameter set, which amounts to
/// taking `sqrt(k1 ω'2 / k2 ω'1) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MediumParams {
    /// `ω' = c² dk/dω`, m/s.
    pub omega_prime: f64,
    /// `ω'' = c² d²k/dω²`, m²/s.
    pub omega_dprime: f64,
    /// Carrier wavenumber `k = n(ω) ω / c`, 1/m.
    pub wavenumber: f64,
    /// Carrier wavelength, m.
    pub lambda: f64,
    /// Reference length `Δ` of the spectral extension, m.
    pub delta: f64,
    /// Quadratic coupling strength.
    pub chi: f64,
}

impl MediumParams {
    /// Everything set to one. Handy for checking formulas in natural units.
    pub fn unit() -> Self {
        Self {
            omega_prime: 1.0,
            omega_dprime: 1.0,
            wavenumber: 1.0,
            lambda: 1.0,
            delta: 1.0,
            chi: 1.0,
        }
    }

    /// An 8 fs pulse at 850 nm with `χ = 1e-12`; `Δ = c · 8 fs`.
    ///
    /// The dispersion constants are those of fused silica near 850 nm
    /// (group index 1.45, GVD 36 fs²/mm). They only enter conversions
    /// between normalized and SI velocities.
    pub fn femtosecond_850nm() -> Self {
        let lambda = 850e-9;
        let index = 1.45;
        Self {
            omega_prime: SPEED_OF_LIGHT * index,
            omega_dprime: SPEED_OF_LIGHT * SPEED_OF_LIGHT * 36e-27,
            wavenumber: 2.0 * PI * index / lambda,
            lambda,
            delta: SPEED_OF_LIGHT * EXAMPLE_PULSE_DURATION,
            chi: 1e-12,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("omega_prime", self.omega_prime),
            ("omega_dprime", self.omega_dprime),
            ("wavenumber", self.wavenumber),
            ("lambda", self.lambda),
            ("delta", self.delta),
            ("chi", self.chi),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParams(format!("{name} must be finite, got {value}")));
            }
        }
        if self.omega_dprime == 0.0 {
            return Err(Error::SingularDispersion);
        }
        if self.delta <= 0.0 {
            return Err(Error::InvalidParams(format!("delta must be positive, got {}", self.delta)));
        }
        if self.wavenumber <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "wavenumber must be positive, got {}",
                self.wavenumber
            )));
        }
        if self.lambda <= 0.0 {
            return Err(Error::InvalidParams(format!("lambda must be positive, got {}", self.lambda)));
        }
        Ok(())
    }

    /// Normalized velocity `x = vΔ/ω''`.
    pub fn normalized_velocity(&self, v: f64) -> f64 {
        v * self.delta / self.omega_dprime
    }

    /// Inverse of [`normalized_velocity`](Self::normalized_velocity).
    pub fn velocity_from_normalized(&self, x: f64) -> f64 {
        x * self.omega_dprime / self.delta
    }
}

impl Default for MediumParams {
    fn default() -> Self {
        Self::femtosecond_850nm()
    }
}

/// Pulse duration of the worked example, s.
pub const EXAMPLE_PULSE_DURATION: f64 = 8e-15;

/// Labels of one X-wave channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XWaveMode {
    /// OAM number.
    pub m: i32,
    /// Spectral order.
    pub p: u32,
    /// Velocity relative to the group frame, m/s.
    pub v: f64,
}

/// `ω(v) = v² / 2ω''`.
pub fn mode_frequency(v: f64, params: &MediumParams) -> f64 {
    v * v / (2.0 * params.omega_dprime)
}

/// X-wave mass `M = ħ/ω''`.
pub fn xwave_mass(params: &MediumParams) -> Result<f64> {
    if params.omega_dprime == 0.0 {
        return Err(Error::SingularDispersion);
    }
    Ok(HBAR / params.omega_dprime)
}

/// Spectrum function
/// `f_p(α) = sqrt(k / (π² ω' (1+p))) (Δα) L_p^(1)(2αΔ) e^{-αΔ}`.
pub fn spectrum_function(alpha: f64, p: u32, params: &MediumParams) -> Result<f64> {
    ensure_finite("alpha", alpha)?;
    if alpha < 0.0 {
        return Err(Error::Domain(format!("alpha must be non-negative, got {alpha}")));
    }
    if params.omega_prime <= 0.0 {
        return Err(Error::Domain("omega_prime must be positive".into()));
    }
    let s = alpha * params.delta;
    Ok(spectrum_prefactor(p, params) * spectrum_shape(s, p))
}

fn spectrum_prefactor(p: u32, params: &MediumParams) -> f64 {
    (params.wavenumber / (PI * PI * params.omega_prime * f64::from(1 + p))).sqrt()
}

// s L_p^(1)(2s) e^{-s} with s = αΔ
fn spectrum_shape(s: f64, p: u32) -> f64 {
    s * laguerre_unchecked(p, 1, 2.0 * s) * (-s).exp()
}

/// Upper end of the α-integration in units of `1/Δ`. Starts at 40 and grows
/// until the spectral envelope has decayed by 14 orders of magnitude, which
/// matters only for high spectral orders where `L_p^(1)(2s)` is large.
pub fn spectral_cutoff(p: u32) -> f64 {
    let envelope = |s: f64| spectrum_shape(s, p).abs();
    let peak = (0..=4000)
        .map(|i| envelope(i as f64 * 0.01))
        .fold(0.0f64, f64::max);
    let mut s_max = 40.0;
    while envelope(s_max).max(envelope(s_max - 0.5)) > 1e-14 * peak && s_max < 400.0 {
        s_max += 10.0;
    }
    s_max
}

/// Generalized X wave
/// `ψ = ∫₀^∞ dα f_p(α) J_m(sqrt(ω''k/ω') α R) e^{i(α − v/ω'')ζ} e^{imθ}`,
/// unnormalized.
pub fn xwave_profile(
    mode: &XWaveMode,
    radius: f64,
    zeta: f64,
    theta: f64,
    params: &MediumParams,
) -> Result<Complex64> {
    ensure_finite("R", radius)?;
    ensure_finite("zeta", zeta)?;
    ensure_finite("theta", theta)?;
    if radius < 0.0 {
        return Err(Error::Domain(format!("R must be non-negative, got {radius}")));
    }
    let kappa_sq = params.omega_dprime * params.wavenumber / params.omega_prime;
    if !(kappa_sq >= 0.0) {
        return Err(Error::Domain("omega'' k / omega' must be non-negative".into()));
    }
    let delta = params.delta;
    // integrate in s = αΔ so the quadrature tolerances are dimensionless
    let bessel_scale = kappa_sq.sqrt() * radius / delta;
    let phase_scale = zeta / delta;
    let m = mode.m;
    let p = mode.p;
    let integrand = |s: f64| {
        let amp = spectrum_shape(s, p) * bessel_j_unchecked(m, bessel_scale * s);
        Complex64::from_polar(amp, phase_scale * s)
    };
    let cfg = QuadConfig {
        abs_tol: 1e-13,
        rel_tol: 1e-10,
        max_intervals: 4000,
    };
    let r = integrate(integrand, 0.0, spectral_cutoff(p), cfg)?;
    let carrier = Complex64::from_polar(1.0, -mode.v * zeta / params.omega_dprime);
    let azimuth = Complex64::from_polar(1.0, f64::from(m) * theta);
    Ok(r.value * spectrum_prefactor(p, params) / delta * carrier * azimuth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate_real;
    use approx::assert_relative_eq;

    #[test]
    fn mode_frequency_examples() {
        let mut p = MediumParams::unit();
        assert_eq!(mode_frequency(0.0, &p), 0.0);
        assert_eq!(mode_frequency(2.0, &p), 2.0);
        p.omega_dprime = 4.5e-2;
        assert_relative_eq!(mode_frequency(3e5, &p), 1e12, max_relative = 1e-14);
    }

    #[test]
    fn xwave_mass_examples() {
        let mut p = MediumParams::unit();
        p.omega_dprime = HBAR;
        assert_eq!(xwave_mass(&p).unwrap(), 1.0);
        p.omega_dprime = 1.0;
        assert_eq!(xwave_mass(&p).unwrap(), 1.054571817e-34);
        p.omega_dprime = 2.6364e-35;
        assert_relative_eq!(xwave_mass(&p).unwrap(), 4.0, max_relative = 1e-4);
        p.omega_dprime = 0.0;
        assert_eq!(xwave_mass(&p), Err(Error::SingularDispersion));
    }

    #[test]
    fn spectrum_examples() {
        let mut p = MediumParams::unit();
        for order in 0..4 {
            assert_eq!(spectrum_function(0.0, order, &p).unwrap(), 0.0);
        }
        // 2αΔ = 2 is the root of L_1^(1)
        assert_eq!(spectrum_function(1.0, 1, &p).unwrap(), 0.0);
        p.wavenumber = PI * PI;
        assert_relative_eq!(spectrum_function(1.0, 0, &p).unwrap(), (-1f64).exp(), epsilon = 1e-15);
        assert_relative_eq!((-1f64).exp(), 0.367879, epsilon = 1e-6);
        assert!(spectrum_function(-0.1, 0, &p).is_err());
    }

    #[test]
    fn spectrum_energy_is_stable_under_cutoff_doubling() {
        let params = MediumParams::femtosecond_850nm();
        for order in 0..=5 {
            let cutoff = spectral_cutoff(order) / params.delta;
            let energy = |upper: f64| {
                integrate_real(
                    |a| spectrum_function(a, order, &params).unwrap().powi(2),
                    0.0,
                    upper,
                    QuadConfig::default(),
                )
                .unwrap()
            };
            let e1 = energy(cutoff);
            let e2 = energy(2.0 * cutoff);
            assert!(e1 > 0.0);
            assert!(((e2 - e1) / e1).abs() <= 1e-8, "p={order}: {e1} vs {e2}");
        }
    }

    #[test]
    fn validation() {
        assert!(MediumParams::femtosecond_850nm().validate().is_ok());
        let mut p = MediumParams::unit();
        p.delta = 0.0;
        assert!(p.validate().is_err());
        let mut p = MediumParams::unit();
        p.omega_dprime = 0.0;
        assert_eq!(p.validate(), Err(Error::SingularDispersion));
    }

    #[test]
    fn femtosecond_850nm_reference_length() {
        let p = MediumParams::femtosecond_850nm();
        assert_relative_eq!(p.delta, 2.398e-6, max_relative = 1e-3);
    }

    fn mode(m: i32, p: u32) -> XWaveMode {
        XWaveMode { m, p, v: 0.7 }
    }

    #[test]
    fn profile_vanishes_on_axis_for_nonzero_oam() {
        let params = MediumParams::unit();
        let psi = xwave_profile(&mode(1, 0), 0.0, 0.3, 0.4, &params).unwrap();
        assert_eq!(psi.norm(), 0.0);
    }

    #[test]
    fn profile_without_oam_ignores_azimuth() {
        let params = MediumParams::unit();
        let a = xwave_profile(&mode(0, 1), 0.8, 0.2, 0.7, &params).unwrap();
        let b = xwave_profile(&mode(0, 1), 0.8, 0.2, 0.0, &params).unwrap();
        assert_eq!(a, b);
    }

    // Composite Simpson on a fixed grid, independent of the adaptive rule.
    fn simpson_profile(m: i32, p: u32, radius: f64, zeta: f64, params: &MediumParams) -> Complex64 {
        let kappa = (params.omega_dprime * params.wavenumber / params.omega_prime).sqrt();
        let upper = 60.0 / params.delta;
        let n = 200_000;
        let h = upper / n as f64;
        let f = |a: f64| {
            let amp = spectrum_function(a, p, params).unwrap() * bessel_j_unchecked(m, kappa * a * radius);
            Complex64::from_polar(amp, (a - 0.7 / params.omega_dprime) * zeta)
        };
        let mut sum = f(0.0) + f(upper);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += f(i as f64 * h) * w;
        }
        sum * h / 3.0
    }

    #[test]
    fn profile_modulus_is_azimuth_independent_and_matches_simpson() {
        let params = MediumParams::unit();
        let a = xwave_profile(&mode(2, 1), 1.5, 0.4, 1.3, &params).unwrap();
        let b = xwave_profile(&mode(2, 1), 1.5, 0.4, 0.0, &params).unwrap();
        assert!((a.norm() - b.norm()).abs() <= 1e-12);
        let oracle = simpson_profile(2, 1, 1.5, 0.4, &params);
        assert!((b - oracle).norm() <= 1e-9 * oracle.norm(), "{b} vs {oracle}");
    }

    #[test]
    fn profile_opposite_oam_relation() {
        let params = MediumParams::unit();
        for m in 1..=4 {
            for &(r, z, th) in &[(0.5, 0.1, 0.3), (2.0, -0.7, 2.1), (1.1, 1.5, -0.9)] {
                let plus = xwave_profile(&mode(m, 2), r, z, th, &params).unwrap();
                let minus = xwave_profile(&mode(-m, 2), r, z, -th, &params).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                assert!((minus - plus * sign).norm() <= 1e-9 * plus.norm().max(1e-300));
            }
        }
    }

    #[test]
    fn profile_rejects_negative_radius() {
        assert!(xwave_profile(&mode(0, 0), -1.0, 0.0, 0.0, &MediumParams::unit()).is_err());
    }
}
