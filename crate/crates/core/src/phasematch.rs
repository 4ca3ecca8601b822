//! Velocity phase matching for down-converted X-wave pairs.
//!
//! Two conventions coexist. The time form matches odd multiples of π,
//! `F(u,v) t = (2·order + 1)π`; the finite-length form matches
//! `uv/(u+v) = (order + ½)πω''/L`. The integer is called `order` in both to
//! keep it apart from the OAM number.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::medium::MediumParams;

/// Phase-matching order (the non-negative integer in `(2·order+1)π` or
/// `(order+½)π`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MatchOrder(pub u32);

impl MatchOrder {
    fn odd_multiple(self) -> f64 {
        2.0 * f64::from(self.0) + 1.0
    }
}

/// Signal/idler velocities and the first-order dispersion mismatch
/// `Δω' = ω'₁ − ω'₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VelocityPair {
    pub u: f64,
    pub v: f64,
    pub delta_omega_prime: f64,
}

impl VelocityPair {
    pub fn new(u: f64, v: f64, delta_omega_prime: f64) -> Self {
        Self {
            u,
            v,
            delta_omega_prime,
        }
    }

    /// Equal velocities with no dispersion mismatch.
    pub fn degenerate(v: f64) -> Self {
        Self::new(v, v, 0.0)
    }
}

/// `F(u,v) = [2uv + (v−u)Δω'] / 2ω''`, the phase-mismatch rate of the
/// time-dependent interaction.
pub fn mismatch_time(pair: &VelocityPair, params: &MediumParams) -> f64 {
    let VelocityPair {
        u,
        v,
        delta_omega_prime,
    } = *pair;
    (2.0 * u * v + (v - u) * delta_omega_prime) / (2.0 * params.omega_dprime)
}

/// `Λ(u,v) = 2uv / ω''(u+v)`, the phase-mismatch wavenumber of the
/// finite-length interaction.
pub fn mismatch_length(pair: &VelocityPair, params: &MediumParams) -> Result<f64> {
    let sum = pair.u + pair.v;
    if sum == 0.0 {
        return Err(Error::Singularity("u + v = 0 in the length mismatch".into()));
    }
    Ok(2.0 * pair.u * pair.v / (params.omega_dprime * sum))
}

/// `|ℱ(u,v,t)|² = 2[1 − cos(F t)]`.
pub fn transition_probability_time(pair: &VelocityPair, t: f64, params: &MediumParams) -> Result<f64> {
    ensure_finite("t", t)?;
    if t < 0.0 {
        return Err(Error::Domain(format!("interaction time must be non-negative, got {t}")));
    }
    Ok(2.0 * (1.0 - (mismatch_time(pair, params) * t).cos()))
}

/// `|ℱ(u,v,L)|² = |e^{iΛL} − 1|² = 2[1 − cos(Λ L)]`.
pub fn transition_probability_length(pair: &VelocityPair, length: f64, params: &MediumParams) -> Result<f64> {
    ensure_finite("L", length)?;
    if length < 0.0 {
        return Err(Error::Domain(format!("crystal length must be non-negative, got {length}")));
    }
    Ok(2.0 * (1.0 - (mismatch_length(pair, params)? * length).cos()))
}

/// Signal velocity `u = (2k'_m − vΔω') / (2v − Δω')` with
/// `k'_m = (2·order+1)πω''/t`, the exact root of `F(u,v)t = (2·order+1)π`.
/// The often-quoted `(2k'_m + vΔω') / (2v + Δω')` is this formula with the
/// opposite sign convention for `Δω'`.
pub fn matched_velocity_time(
    v: f64,
    order: MatchOrder,
    t: f64,
    delta_omega_prime: f64,
    params: &MediumParams,
) -> Result<f64> {
    ensure_finite("t", t)?;
    if t <= 0.0 {
        return Err(Error::Domain(format!("interaction time must be positive, got {t}")));
    }
    let denom = 2.0 * v - delta_omega_prime;
    if denom == 0.0 {
        return Err(Error::Singularity("2v − Δω' = 0 in the matched velocity".into()));
    }
    let k = order.odd_multiple() * PI * params.omega_dprime / t;
    let u = (2.0 * k - v * delta_omega_prime) / denom;
    positive(u, "time-form matching")
}

/// Signal velocity `u = k_n v / (v − k_n)` with `k_n = (order+½)πω''/L`.
pub fn matched_velocity_length(v: f64, order: MatchOrder, length: f64, params: &MediumParams) -> Result<f64> {
    ensure_finite("L", length)?;
    if length <= 0.0 {
        return Err(Error::Domain(format!("crystal length must be positive, got {length}")));
    }
    let k = length_matching_constant(order, length, params);
    if v <= k {
        return Err(Error::NoPhysicalSolution(format!(
            "v = {v} does not exceed k_n = {k}; no positive signal velocity"
        )));
    }
    positive(k * v / (v - k), "length-form matching")
}

/// `k_n = (order + ½)πω''/L`.
pub fn length_matching_constant(order: MatchOrder, length: f64, params: &MediumParams) -> f64 {
    (f64::from(order.0) + 0.5) * PI * params.omega_dprime / length
}

fn positive(u: f64, what: &str) -> Result<f64> {
    if u > 0.0 && u.is_finite() {
        Ok(u)
    } else {
        Err(Error::NoPhysicalSolution(format!("{what} gives non-positive velocity u = {u}")))
    }
}

/// Degenerate interaction time `t = (2·order+1)πω''/v²`.
pub fn interaction_time(v: f64, order: MatchOrder, params: &MediumParams) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("velocity must be positive, got {v}")));
    }
    Ok(order.odd_multiple() * PI * params.omega_dprime / (v * v))
}

/// Degenerate crystal length `L = (2·order+1)πω''/v`.
pub fn crystal_length(v: f64, order: MatchOrder, params: &MediumParams) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("velocity must be positive, got {v}")));
    }
    Ok(order.odd_multiple() * PI * params.omega_dprime / v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn with_dprime(w: f64) -> MediumParams {
        MediumParams {
            omega_dprime: w,
            ..MediumParams::unit()
        }
    }

    #[test]
    fn mismatch_time_examples() {
        let p = MediumParams::unit();
        assert_eq!(mismatch_time(&VelocityPair::new(1.7, 1.7, 3.0), &p), 1.7 * 1.7);
        assert_eq!(mismatch_time(&VelocityPair::new(1.0, 2.0, 0.0), &p), 2.0);
        assert_eq!(mismatch_time(&VelocityPair::new(1.0, 3.0, 2.0), &with_dprime(0.5)), 10.0);
    }

    #[test]
    fn mismatch_length_examples() {
        assert_eq!(mismatch_length(&VelocityPair::degenerate(1.0), &MediumParams::unit()).unwrap(), 1.0);
        assert_eq!(mismatch_length(&VelocityPair::degenerate(2.0), &with_dprime(2.0)).unwrap(), 1.0);
        assert_eq!(mismatch_length(&VelocityPair::new(1.0, 3.0, 0.0), &with_dprime(0.5)).unwrap(), 3.0);
        assert!(matches!(
            mismatch_length(&VelocityPair::new(1.0, -1.0, 0.0), &MediumParams::unit()),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn transition_probability_examples() {
        let p = MediumParams::unit();
        let pair = VelocityPair::new(1.0, 2.0, 0.0); // F = 2
        assert_eq!(transition_probability_time(&pair, 0.0, &p).unwrap(), 0.0);
        assert_relative_eq!(transition_probability_time(&pair, PI / 2.0, &p).unwrap(), 4.0, epsilon = 1e-12);
        assert_relative_eq!(transition_probability_time(&pair, PI / 4.0, &p).unwrap(), 2.0, epsilon = 1e-12);

        let pair = VelocityPair::new(1.0, 3.0, 0.0);
        let p = with_dprime(0.5); // Λ = 3
        assert_eq!(transition_probability_length(&pair, 0.0, &p).unwrap(), 0.0);
        assert_relative_eq!(transition_probability_length(&pair, PI / 3.0, &p).unwrap(), 4.0, epsilon = 1e-12);
        assert!(transition_probability_length(&pair, -1.0, &p).is_err());
    }

    #[test]
    fn matched_velocity_time_examples() {
        let p = MediumParams::unit();
        // k'_0 = 1: (2 + 2)/(4 + 1) under Δω' = −1
        assert_relative_eq!(matched_velocity_time(2.0, MatchOrder(0), PI, -1.0, &p).unwrap(), 0.8, epsilon = 1e-15);
        // (2 − 2)/(4 − 1) = 0 is no physical velocity
        assert!(matches!(
            matched_velocity_time(2.0, MatchOrder(0), PI, 1.0, &p),
            Err(Error::NoPhysicalSolution(_))
        ));
        let t = 0.37;
        let v = (PI / t).sqrt();
        assert_relative_eq!(matched_velocity_time(v, MatchOrder(0), t, 0.0, &p).unwrap(), v, max_relative = 1e-14);
        assert!(matched_velocity_time(1.0, MatchOrder(0), 0.0, 0.0, &p).is_err());
        assert!(matches!(
            matched_velocity_time(1.0, MatchOrder(0), 1.0, 2.0, &p),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn matched_velocity_length_examples() {
        let p = MediumParams::unit();
        assert_relative_eq!(matched_velocity_length(1.0, MatchOrder(0), PI, &p).unwrap(), 1.0, epsilon = 1e-15);
        // k_n = 1 with L = π/2
        assert_relative_eq!(matched_velocity_length(3.0, MatchOrder(0), PI / 2.0, &p).unwrap(), 1.5, epsilon = 1e-14);
        assert_relative_eq!(matched_velocity_length(2.0, MatchOrder(0), PI / 2.0, &p).unwrap(), 2.0, epsilon = 1e-14);
        assert!(matches!(
            matched_velocity_length(1.0, MatchOrder(0), PI / 2.0, &p),
            Err(Error::NoPhysicalSolution(_))
        ));
    }

    #[test]
    fn time_and_length_examples() {
        let p = MediumParams::unit();
        assert_relative_eq!(interaction_time(1.0, MatchOrder(0), &p).unwrap(), PI);
        assert_relative_eq!(interaction_time(1.0, MatchOrder(1), &p).unwrap(), 3.0 * PI);
        assert_relative_eq!(interaction_time(2.0, MatchOrder(2), &with_dprime(0.5)).unwrap(), 1.963_495_408_493_620_8);
        assert_relative_eq!(crystal_length(1.0, MatchOrder(0), &p).unwrap(), PI);
        assert_relative_eq!(crystal_length(4.0, MatchOrder(1), &with_dprime(2.0)).unwrap(), 3.0 * PI / 2.0);
        assert!(interaction_time(0.0, MatchOrder(0), &p).is_err());
        assert!(crystal_length(-1.0, MatchOrder(0), &p).is_err());
    }

    #[test]
    fn mismatch_time_symmetry_depends_on_dispersion_mismatch() {
        let p = MediumParams::unit();
        let a = mismatch_time(&VelocityPair::new(1.2, 3.4, 0.0), &p);
        let b = mismatch_time(&VelocityPair::new(3.4, 1.2, 0.0), &p);
        assert_eq!(a, b);
        let a = mismatch_time(&VelocityPair::new(1.2, 3.4, 0.5), &p);
        let b = mismatch_time(&VelocityPair::new(3.4, 1.2, 0.5), &p);
        assert!((a - b).abs() > 1.0);
    }

    proptest! {
        #[test]
        fn length_equals_velocity_times_time(v in 1e-3f64..1e3, order in 0u32..20, w in 1e-3f64..10.0) {
            let p = with_dprime(w);
            let l = crystal_length(v, MatchOrder(order), &p).unwrap();
            let t = interaction_time(v, MatchOrder(order), &p).unwrap();
            prop_assert!((l - v * t).abs() <= 4.0 * f64::EPSILON * l);
        }

        #[test]
        fn time_matching_saturates_probability(
            v in 0.1f64..10.0, t in 0.05f64..5.0, order in 0u32..6, dw in -0.05f64..2.0
        ) {
            let p = MediumParams::unit();
            if let Ok(u) = matched_velocity_time(v, MatchOrder(order), t, dw, &p) {
                let prob = transition_probability_time(&VelocityPair::new(u, v, dw), t, &p).unwrap();
                prop_assert!((prob - 4.0).abs() <= 1e-9);
            }
        }

        #[test]
        fn length_matching_saturates_probability(v in 0.1f64..10.0, length in 0.1f64..50.0, order in 0u32..6) {
            let p = MediumParams::unit();
            if let Ok(u) = matched_velocity_length(v, MatchOrder(order), length, &p) {
                let prob = transition_probability_length(&VelocityPair::new(u, v, 0.0), length, &p).unwrap();
                prop_assert!((prob - 4.0).abs() <= 1e-9);
            }
        }

        #[test]
        fn degenerate_time_matching_product(v in 0.1f64..10.0, t in 0.05f64..5.0, order in 0u32..6) {
            let p = MediumParams::unit();
            let u = matched_velocity_time(v, MatchOrder(order), t, 0.0, &p).unwrap();
            let want = (2.0 * order as f64 + 1.0) * PI / t;
            prop_assert!(((u * v - want) / want).abs() <= 1e-12);
        }

        #[test]
        fn length_mismatch_is_symmetric(u in 0.01f64..10.0, v in 0.01f64..10.0) {
            let p = MediumParams::unit();
            let a = mismatch_length(&VelocityPair::new(u, v, 0.0), &p).unwrap();
            let b = mismatch_length(&VelocityPair::new(v, u, 0.0), &p).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
