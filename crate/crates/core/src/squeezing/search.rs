use serde::{Deserialize, Serialize};

use super::normalized_squeezing;

/// Spacing of the dense scan over the normalized velocity.
pub const GRID_STEP: f64 = 1e-3;

/// Local maxima at or below this value are treated as numerical zeros.
pub const PEAK_THRESHOLD: f64 = 1e-12;

const GOLDEN_TOL: f64 = 1e-9;

/// Upper end of the search window, `X_max = 8(j+2)`.
pub fn scan_window(j: u32) -> f64 {
    8.0 * f64::from(j + 2)
}

/// Maximizes a unimodal `f` on `[a, b]` by golden-section search; returns
/// `(x, f(x))` once the bracket is narrower than `tol`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

fn grid(j: u32) -> Vec<(f64, f64)> {
    let n = (scan_window(j) / GRID_STEP).round() as usize;
    (1..=n)
        .map(|i| {
            let x = i as f64 * GRID_STEP;
            (x, normalized_squeezing(x, 0, j).abs())
        })
        .collect()
}

fn refine(j: u32, left: f64, right: f64) -> (f64, f64) {
    golden_section_max(|x| normalized_squeezing(x, 0, j).abs(), left, right, GOLDEN_TOL)
}

/// Location and height of the largest squeezing for spectral order `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Optimum {
    pub j: u32,
    pub m: i32,
    /// Optimal normalized velocity `n_j = v_opt Δ/ω''`.
    pub x_opt: f64,
    /// Signed `ξ^(N)` at the optimum.
    pub xi_normalized: f64,
}

/// Global maximizer of `|ξ^(N)|` over `(0, 8(j+2)]`: dense scan with step
/// [`GRID_STEP`] and golden-section refinement around the best sample.
///
/// The window is calibrated for `j ≤ 12`.
pub fn optimal_velocity(j: u32, m: i32) -> Optimum {
    let samples = grid(j);
    let best = samples
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    let left = samples[best.saturating_sub(1)].0;
    let right = samples[(best + 1).min(samples.len() - 1)].0;
    let (x_opt, _) = refine(j, left, right);
    Optimum {
        j,
        m,
        x_opt,
        xi_normalized: normalized_squeezing(x_opt, m, j),
    }
}

/// Dense scan of `|ξ^(N)|` with every local maximum located.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeakScan {
    pub j: u32,
    /// `(x, |ξ^(N)|)` samples.
    pub grid: Vec<(f64, f64)>,
    /// Refined local maxima `(x, |ξ^(N)|)`, ascending in `x`.
    pub peaks: Vec<(f64, f64)>,
    /// Index into `peaks` of the global maximum.
    pub global: usize,
}

impl PeakScan {
    pub fn count(&self) -> usize {
        self.peaks.len()
    }

    pub fn global_peak(&self) -> (f64, f64) {
        self.peaks[self.global]
    }
}

/// Finds every strict local maximum of `|ξ^(N)|` on `(0, 8(j+2)]` from
/// sign changes of the discrete derivative, each refined by golden section.
pub fn count_peaks(j: u32) -> PeakScan {
    let grid = grid(j);
    let mut peaks = Vec::new();
    for w in grid.windows(3) {
        let (prev, here, next) = (w[0], w[1], w[2]);
        if here.1 - prev.1 > 0.0 && next.1 - here.1 <= 0.0 && here.1 > PEAK_THRESHOLD {
            peaks.push(refine(j, prev.0, next.0));
        }
    }
    let global = peaks
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    PeakScan { j, grid, peaks, global }
}
