//! Numerical quadrature: adaptive Gauss–Kronrod (7/15) for the X-wave
//! profile integrals and fixed Gauss–Legendre rules for velocity windows.

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Tolerances for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-10,
            max_intervals: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kron += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    let value = kron * half;
    let error = ((kron - gauss) * half).norm();
    Segment { a, b, value, error }
}

/// Adaptive integration of a complex-valued integrand over `[a, b]`.
///
/// The interval with the largest local error estimate is bisected until the
/// summed estimate falls under `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<F>(f: F, a: f64, b: f64, cfg: QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration bounds must be finite".into()));
    }
    if a == b {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            intervals: 0,
        });
    }
    let mut segments = vec![kronrod(&f, a, b)];
    loop {
        let value: Complex64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        let tolerance = cfg.abs_tol.max(cfg.rel_tol * value.norm());
        if error <= tolerance {
            return Ok(QuadResult {
                value,
                error,
                intervals: segments.len(),
            });
        }
        if segments.len() >= cfg.max_intervals {
            return Err(Error::Integration {
                estimate: error,
                tolerance,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        segments.push(kronrod(&f, seg.a, mid));
        segments.push(kronrod(&f, mid, seg.b));
    }
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, cfg: QuadConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate(|x| Complex64::new(f(x), 0.0), a, b, cfg).map(|r| r.value.re)
}

/// Gauss–Legendre nodes and weights mapped onto `[a, b]`.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let (pn, pn1) = (p1, p0);
            dp = nf * (x * pn - pn1) / (x * x - 1.0);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((center - half * x, half * w));
    }
    rule
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_and_exponential_integrals() {
        let cfg = QuadConfig::default();
        let v = integrate_real(|x| x * x, 0.0, 3.0, cfg).unwrap();
        assert_relative_eq!(v, 9.0, epsilon = 1e-12);
        let v = integrate_real(|x| (-x).exp(), 0.0, 40.0, cfg).unwrap();
        assert_relative_eq!(v, 1.0 - (-40f64).exp(), epsilon = 1e-12);
    }

    #[test]
    fn oscillatory_complex_integral() {
        // int_0^pi e^{i x} dx = 2i
        let r = integrate(|x| Complex64::new(0.0, x).exp(), 0.0, std::f64::consts::PI, QuadConfig::default())
            .unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn reports_non_convergence() {
        let cfg = QuadConfig {
            max_intervals: 2,
            ..QuadConfig::default()
        };
        let err = integrate_real(|x| (200.0 * x).sin() * x.sqrt(), 0.0, 10.0, cfg).unwrap_err();
        assert!(matches!(err, Error::Integration { .. }));
    }

    #[test]
    fn gauss_legendre_is_exact_for_low_degree() {
        for n in 1..=20 {
            let rule = gauss_legendre(n, -1.0, 2.0);
            let w: f64 = rule.iter().map(|p| p.1).sum();
            assert_relative_eq!(w, 3.0, epsilon = 1e-13);
            // degree 2n-1 exactness
            let deg = 2 * n - 1;
            let got: f64 = rule.iter().map(|&(x, w)| w * x.powi(deg as i32)).sum();
            let want = (2f64.powi(deg as i32 + 1) - (-1f64).powi(deg as i32 + 1)) / (deg as f64 + 1.0);
            assert_relative_eq!(got, want, epsilon = 1e-11, max_relative = 1e-12);
        }
    }
}
