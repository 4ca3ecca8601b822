use num_complex::Complex64;
use serde::Serialize;

use super::ops::{apply_ladder, apply_pair, index, Ladder};
use super::state::TwoModeState;

/// Means and variances of `J_z = (N_A − N_B)/2`, `K_x = (a†b† + ab)/2` and
/// `K_y = (a†b† − ab)/2i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Moments {
    pub mean_jz: f64,
    pub var_jz: f64,
    pub mean_kx: f64,
    pub var_kx: f64,
    pub mean_ky: f64,
    pub var_ky: f64,
}

/// Verdict of the fourth-order separability inequality
/// `[⟨Δ²K_y⟩ − ¼]⟨Δ²J_z⟩ ≥ ¼|⟨K_x⟩|²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriterionReport {
    pub var_jz: f64,
    pub var_ky: f64,
    pub mean_kx: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub violated: bool,
    pub truncation_safe: bool,
}

/// Guard against declaring a violation on rounding noise.
pub const VIOLATION_GUARD: f64 = 1e-12;

impl CriterionReport {
    pub fn from_moments(m: &Moments, truncation_safe: bool) -> Self {
        let lhs = (m.var_ky - 0.25) * m.var_jz;
        let rhs = 0.25 * m.mean_kx * m.mean_kx;
        Self {
            var_jz: m.var_jz,
            var_ky: m.var_ky,
            mean_kx: m.mean_kx,
            lhs,
            rhs,
            violated: lhs < rhs - VIOLATION_GUARD,
            truncation_safe,
        }
    }
}

/// Variances of `X_A ± X_B` and `Y_A ± Y_B` with `X = a + a†`, `Y = i(a† − a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JointVariances {
    pub x_sum: f64,
    pub x_diff: f64,
    pub y_sum: f64,
    pub y_diff: f64,
}

fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(p, q)| p.conj() * q).sum()
}

/// Mean and variance of a Hermitian `O`, given `ψ` and `Oψ`, normalized by `⟨ψ|ψ⟩`.
/// The variance is `‖(O − ⟨O⟩)ψ‖²` so it never goes negative.
fn mean_var(psi: &[Complex64], o_psi: &[Complex64], norm2: f64) -> (f64, f64) {
    let mean = dot(psi, o_psi).re / norm2;
    let var = psi
        .iter()
        .zip(o_psi)
        .map(|(p, q)| (q - p * mean).norm_sqr())
        .sum::<f64>()
        / norm2;
    (mean, var)
}

/// Moments of the state, normalized by its squared norm so truncated or
/// unnormalized vectors still yield expectation values.
pub fn moments(state: &TwoModeState) -> Moments {
    let n = state.n_max();
    let psi = state.amplitudes();
    let norm2 = state.norm_sqr();

    let mut jz_psi = vec![Complex64::new(0.0, 0.0); psi.len()];
    for na in 0..=n {
        for nb in 0..=n {
            let i = index(n, na, nb);
            jz_psi[i] = psi[i] * (0.5 * (na as f64 - nb as f64));
        }
    }
    let raise = apply_pair(true, psi, n);
    let lower = apply_pair(false, psi, n);
    let half = Complex64::new(0.5, 0.0);
    let minus_half_i = Complex64::new(0.0, -0.5);
    let kx_psi: Vec<_> = raise.iter().zip(&lower).map(|(r, l)| half * (r + l)).collect();
    let ky_psi: Vec<_> = raise.iter().zip(&lower).map(|(r, l)| minus_half_i * (r - l)).collect();

    let (mean_jz, var_jz) = mean_var(psi, &jz_psi, norm2);
    let (mean_kx, var_kx) = mean_var(psi, &kx_psi, norm2);
    let (mean_ky, var_ky) = mean_var(psi, &ky_psi, norm2);
    Moments {
        mean_jz,
        var_jz,
        mean_kx,
        var_kx,
        mean_ky,
        var_ky,
    }
}

pub fn separability_check(state: &TwoModeState) -> CriterionReport {
    CriterionReport::from_moments(&moments(state), state.truncation_safe())
}

pub fn joint_quadrature_variances(state: &TwoModeState) -> JointVariances {
    let n = state.n_max();
    let psi = state.amplitudes();
    let norm2 = state.norm_sqr();
    let a = apply_ladder(Ladder::A, psi, n);
    let ad = apply_ladder(Ladder::ADag, psi, n);
    let b = apply_ladder(Ladder::B, psi, n);
    let bd = apply_ladder(Ladder::BDag, psi, n);
    let i = Complex64::new(0.0, 1.0);
    let combo = |sign: f64, quad_y: bool| -> f64 {
        let v: Vec<Complex64> = (0..psi.len())
            .map(|k| {
                let (qa, qb) = if quad_y {
                    (i * (ad[k] - a[k]), i * (bd[k] - b[k]))
                } else {
                    (a[k] + ad[k], b[k] + bd[k])
                };
                qa + qb * sign
            })
            .collect();
        mean_var(psi, &v, norm2).1
    };
    JointVariances {
        x_sum: combo(1.0, false),
        x_diff: combo(-1.0, false),
        y_sum: combo(1.0, true),
        y_diff: combo(-1.0, true),
    }
}

/// `⟨K_x⟩` on `|n_a, n_b, ξ⟩`: `(n_a + n_b + 1) cos φ sinh ξ cosh ξ`.
pub fn kx_closed_form(n_a: usize, n_b: usize, xi: f64, phi: f64) -> f64 {
    (n_a + n_b + 1) as f64 * phi.cos() * xi.sinh() * xi.cosh()
}
