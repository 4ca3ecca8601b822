//! Superposition of pair states over a velocity window.
//!
//! Channels at different velocities are orthogonal, so the window is
//! represented by Gauss–Legendre nodes, each carrying a single-pair state
//! `|1,1,ξ(v_k)⟩` and a weight `w_k |𝒢(v_k)|² |ℱ(v_k)|²`.

use serde::Serialize;

use super::moments::{kx_closed_form, moments, CriterionReport, Moments};
use super::state::{tms_number_state, DEFAULT_N_MAX, DEFAULT_TAIL_EPS};
use crate::error::{Error, Result};
use crate::medium::MediumParams;
use crate::phasematch::{interaction_time, transition_probability_time, MatchOrder, VelocityPair};
use crate::quad::gauss_legendre;
use crate::squeezing::{amplitude_time, normalized_squeezing, optimal_velocity};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpec {
    pub j: u32,
    pub m: i32,
    /// Normalized velocity window `[x_lo, x_hi]`, `x = vΔ/ω''`.
    pub x_lo: f64,
    pub x_hi: f64,
    pub nodes: usize,
    pub phi: f64,
    /// Rotate mode A by `−φ` so every member is evaluated at `φ = 0`.
    pub phase_fix: bool,
    /// Treat every node as phase matched (`|ℱ|² = 4`).
    pub matched: bool,
    /// Interaction time; defaults to the first matched time at the window centre.
    pub time: Option<f64>,
    pub n_max: usize,
    pub tail_eps: f64,
}

impl FamilySpec {
    pub fn new(j: u32, m: i32, x_lo: f64, x_hi: f64) -> Self {
        Self {
            j,
            m,
            x_lo,
            x_hi,
            nodes: 16,
            phi: 0.0,
            phase_fix: false,
            matched: true,
            time: None,
            n_max: DEFAULT_N_MAX,
            tail_eps: DEFAULT_TAIL_EPS,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.x_lo.is_finite() && self.x_hi.is_finite()) || self.x_lo <= 0.0 || self.x_hi <= self.x_lo {
            return Err(Error::InvalidParams(format!(
                "velocity window must satisfy 0 < x_lo < x_hi, got [{}, {}]",
                self.x_lo, self.x_hi
            )));
        }
        if self.nodes == 0 || self.n_max < 1 {
            return Err(Error::InvalidParams("nodes and n_max must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyMember {
    pub x: f64,
    pub v: f64,
    /// Signed `ξ^(N)(x)`.
    pub xi: f64,
    pub weight: f64,
    pub mean_kx: f64,
    pub kx_closed: f64,
    pub truncation_safe: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub j: u32,
    pub m: i32,
    pub x_lo: f64,
    pub x_hi: f64,
    pub time: f64,
    /// Pair phase the members were evaluated at.
    pub phi_effective: f64,
    /// `Σ w_k`; the family state has squared norm equal to this.
    pub normalization: f64,
    /// Unnormalized `Σ w_k ⟨K_x⟩_k`.
    pub kx_weighted: f64,
    /// Closed-form counterpart of the normalized `⟨K_x⟩`.
    pub kx_closed: f64,
    pub rhs_closed: f64,
    pub moments: Moments,
    pub criterion: CriterionReport,
    pub members: Vec<FamilyMember>,
}

/// Builds the weighted family and aggregates its moments after normalizing
/// by `Σ w_k`.
pub fn evaluate_family(spec: &FamilySpec, params: &MediumParams) -> Result<FamilyReport> {
    spec.validate()?;
    params.validate()?;
    let scale = params.omega_dprime / params.delta;
    let time = match spec.time {
        Some(t) => t,
        None => interaction_time(0.5 * (spec.x_lo + spec.x_hi) * scale, MatchOrder(0), params)?,
    };
    let phi_eff = if spec.phase_fix { 0.0 } else { spec.phi };

    let mut members = Vec::with_capacity(spec.nodes);
    for (x, w) in gauss_legendre(spec.nodes, spec.x_lo, spec.x_hi) {
        let v = x * scale;
        let pair = VelocityPair::degenerate(v);
        let g = amplitude_time(&pair, spec.m, spec.j, spec.j, params)?.norm_sqr();
        let f = if spec.matched {
            4.0
        } else {
            transition_probability_time(&pair, time, params)?
        };
        let xi = normalized_squeezing(x, spec.m, spec.j);
        let mut state = tms_number_state(1, 1, xi, spec.phi, spec.n_max).with_tail_eps(spec.tail_eps);
        if spec.phase_fix {
            state = state.rotate_phase_a(-spec.phi);
        }
        members.push((
            FamilyMember {
                x,
                v,
                xi,
                weight: w * scale * g * f,
                mean_kx: 0.0,
                kx_closed: kx_closed_form(1, 1, xi, phi_eff),
                truncation_safe: state.truncation_safe(),
            },
            moments(&state),
        ));
    }

    let total: f64 = members.iter().map(|(m, _)| m.weight).sum();
    if !(total.is_finite() && total > 0.0) {
        return Err(Error::EmptySupport);
    }

    // mixture over orthogonal channels: first and second moments average
    let avg = |f: &dyn Fn(&Moments) -> f64| members.iter().map(|(mb, mo)| mb.weight * f(mo)).sum::<f64>() / total;
    let mean_jz = avg(&|m| m.mean_jz);
    let mean_kx = avg(&|m| m.mean_kx);
    let mean_ky = avg(&|m| m.mean_ky);
    let second = |mean: fn(&Moments) -> f64, var: fn(&Moments) -> f64| avg(&|m| var(m) + mean(m) * mean(m));
    let mixed = Moments {
        mean_jz,
        var_jz: (second(|m| m.mean_jz, |m| m.var_jz) - mean_jz * mean_jz).max(0.0),
        mean_kx,
        var_kx: (second(|m| m.mean_kx, |m| m.var_kx) - mean_kx * mean_kx).max(0.0),
        mean_ky,
        var_ky: (second(|m| m.mean_ky, |m| m.var_ky) - mean_ky * mean_ky).max(0.0),
    };
    let safe = members.iter().all(|(m, _)| m.truncation_safe);
    let kx_closed = members.iter().map(|(m, _)| m.weight * m.kx_closed).sum::<f64>() / total;
    let members: Vec<FamilyMember> = members
        .into_iter()
        .map(|(mut m, mo)| {
            m.mean_kx = mo.mean_kx;
            m
        })
        .collect();

    Ok(FamilyReport {
        j: spec.j,
        m: spec.m,
        x_lo: spec.x_lo,
        x_hi: spec.x_hi,
        time,
        phi_effective: phi_eff,
        normalization: total,
        kx_weighted: members.iter().map(|m| m.weight * m.mean_kx).sum(),
        kx_closed,
        rhs_closed: 0.25 * kx_closed * kx_closed,
        moments: mixed,
        criterion: CriterionReport::from_moments(&mixed, safe),
        members,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub j: u32,
    pub x_opt: f64,
    pub x_lo: f64,
    pub x_hi: f64,
    pub rhs: f64,
    pub rhs_closed: f64,
    pub violated: bool,
    pub truncation_safe: bool,
}

/// Re-centres the window of `base` on `x_opt(j)` for each order, keeping
/// its half-width (clipped at `x > 0`).
pub fn spectral_sweep(base: &FamilySpec, orders: impl IntoIterator<Item = u32>, params: &MediumParams) -> Result<Vec<SweepRow>> {
    let half = 0.5 * (base.x_hi - base.x_lo);
    orders
        .into_iter()
        .map(|j| {
            let x_opt = optimal_velocity(j, base.m).x_opt;
            let spec = FamilySpec {
                j,
                x_lo: (x_opt - half).max(1e-6 * x_opt),
                x_hi: x_opt + half,
                time: None,
                ..base.clone()
            };
            let r = evaluate_family(&spec, params)?;
            Ok(SweepRow {
                j,
                x_opt,
                x_lo: spec.x_lo,
                x_hi: spec.x_hi,
                rhs: r.criterion.rhs,
                rhs_closed: r.rhs_closed,
                violated: r.criterion.violated,
                truncation_safe: r.criterion.truncation_safe,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn window_near_first_optimum_violates() {
        let p = MediumParams::femtosecond_850nm();
        let r = evaluate_family(&FamilySpec::new(0, 0, 2.5, 3.5), &p).unwrap();
        assert!(r.criterion.violated);
        assert!(r.criterion.truncation_safe);
        assert!(r.criterion.var_jz <= 1e-10);
        assert_relative_eq!(r.criterion.mean_kx, r.kx_closed, max_relative = 1e-8);
        assert_relative_eq!(r.kx_weighted / r.normalization, r.criterion.mean_kx, max_relative = 1e-12);
        assert_eq!(r.members.len(), 16);
    }

    #[test]
    fn odd_oam_with_quarter_phase_and_fix() {
        let p = MediumParams::femtosecond_850nm();
        let mut spec = FamilySpec::new(1, 1, 5.5, 6.5);
        spec.phi = std::f64::consts::FRAC_PI_2;
        let r = evaluate_family(&spec, &p).unwrap();
        assert!(r.criterion.mean_kx.abs() <= 1e-10);
        assert!(!r.criterion.violated);
        spec.phase_fix = true;
        let fixed = evaluate_family(&spec, &p).unwrap();
        assert!(fixed.criterion.violated);
        // ξ < 0 for odd m makes ⟨K_x⟩ negative; the criterion uses its square
        assert!(fixed.criterion.mean_kx < 0.0);
    }

    #[test]
    fn unmatched_weights_are_bounded_by_matched() {
        let p = MediumParams::femtosecond_850nm();
        let mut spec = FamilySpec::new(0, 0, 2.0, 4.0);
        let matched = evaluate_family(&spec, &p).unwrap();
        spec.matched = false;
        let unmatched = evaluate_family(&spec, &p).unwrap();
        for (a, b) in matched.members.iter().zip(&unmatched.members) {
            assert!(b.weight <= a.weight * (1.0 + 1e-12));
        }
    }

    #[test]
    fn rejects_bad_window() {
        let p = MediumParams::femtosecond_850nm();
        assert!(matches!(evaluate_family(&FamilySpec::new(0, 0, 3.0, 3.0), &p), Err(Error::InvalidParams(_))));
        assert!(matches!(evaluate_family(&FamilySpec::new(0, 0, -1.0, 3.0), &p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn sweep_reports_each_order() {
        let p = MediumParams::femtosecond_850nm();
        let rows = spectral_sweep(&FamilySpec::new(0, 0, 2.9, 3.1), 0..=2, &p).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.windows(2).all(|w| w[1].rhs_closed > w[0].rhs_closed));
        assert!(rows.iter().all(|r| r.violated));
    }
}
