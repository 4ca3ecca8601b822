//! Special functions used by the X-wave spectrum and profile:
//! generalized Laguerre polynomials and integer-order Bessel functions
//! of the first kind.

use crate::error::{ensure_finite, Result};

/// Degree and superscript of a generalized Laguerre polynomial `L_p^(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyOrder {
    pub p: u32,
    pub k: u32,
}

impl PolyOrder {
    /// The `L_p^(1)` family used by the X-wave spectrum.
    pub fn spectral(p: u32) -> Self {
        Self { p, k: 1 }
    }

    pub fn eval(self, x: f64) -> Result<f64> {
        laguerre(self.p, self.k, x)
    }
}

/// Generalized Laguerre polynomial `L_p^(k)(x)` by ascending three-term
/// recurrence.
pub fn laguerre(p: u32, k: u32, x: f64) -> Result<f64> {
    ensure_finite("x", x)?;
    Ok(laguerre_unchecked(p, k, x))
}

/// Recurrence without the finiteness check, for hot loops whose argument is
/// already known to be finite.
pub(crate) fn laguerre_unchecked(p: u32, k: u32, x: f64) -> f64 {
    let k = f64::from(k);
    let mut prev = 1.0;
    if p == 0 {
        return prev;
    }
    let mut cur = 1.0 + k - x;
    for n in 1..p {
        let n = f64::from(n);
        let next = ((2.0 * n + k + 1.0 - x) * cur - (n + k) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

// Below this |x| the power series is used; above it, Miller's backward
// recurrence normalized by J_0 + 2 sum J_2k = 1.
const SERIES_LIMIT: f64 = 12.0;

/// Bessel function of the first kind `J_m(x)` for integer `m`.
pub fn bessel_j(m: i32, x: f64) -> Result<f64> {
    ensure_finite("x", x)?;
    Ok(bessel_j_unchecked(m, x))
}

pub(crate) fn bessel_j_unchecked(m: i32, x: f64) -> f64 {
    let order = m.unsigned_abs();
    // J_{-m}(x) = (-1)^m J_m(x) and J_m(-x) = (-1)^m J_m(x)
    let odd = order % 2 == 1;
    let mut sign = 1.0;
    if m < 0 && odd {
        sign = -sign;
    }
    if x < 0.0 && odd {
        sign = -sign;
    }
    let ax = x.abs();
    let value = if ax < SERIES_LIMIT {
        bessel_series(order, ax)
    } else {
        bessel_miller(order, ax)
    };
    sign * value
}

fn bessel_series(m: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    let mut term = 1.0;
    for i in 1..=m {
        term *= half / f64::from(i);
    }
    let q = half * half;
    let mut sum = term;
    let m = f64::from(m);
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -q / (k * (k + m));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            break;
        }
        if k > 500.0 {
            break;
        }
    }
    sum
}

fn bessel_miller(m: u32, x: f64) -> f64 {
    const BIG: f64 = 1e250;
    let reach = (m as f64).max(x);
    let mut start = (reach + 30.0 + (40.0 * reach).sqrt()) as u32;
    start += start % 2;
    let two_over_x = 2.0 / x;
    let mut upper = 0.0; // J_{n+1}
    let mut cur = 1e-30; // J_n
    let mut norm = 0.0;
    let mut wanted = 0.0;
    let mut n = start;
    while n > 0 {
        let lower = f64::from(n) * two_over_x * cur - upper;
        upper = cur;
        cur = lower;
        n -= 1;
        if cur.abs() > BIG {
            cur /= BIG;
            upper /= BIG;
            norm /= BIG;
            wanted /= BIG;
        }
        if n.is_multiple_of(2) && n > 0 {
            norm += cur;
        }
        if n == m {
            wanted = cur;
        }
    }
    norm = 2.0 * norm + cur;
    wanted / norm
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // Independent oracle: L_p^(k)(x) = sum_i (-1)^i C(p+k, p-i) x^i / i!
    /// Explicit alternating sum, returned with the sum of term magnitudes
    /// (its cancellation scale).
    fn laguerre_explicit_scaled(p: u32, k: u32, x: f64) -> (f64, f64) {
        let binom = |n: u32, r: u32| -> f64 {
            (0..r).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
        };
        let mut sum = 0.0;
        let mut mag = 0.0;
        let mut fact = 1.0;
        for i in 0..=p {
            if i > 0 {
                fact *= f64::from(i);
            }
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let term = binom(p + k, p - i) * x.powi(i as i32) / fact;
            sum += sign * term;
            mag += term;
        }
        (sum, mag)
    }

    // Plain power series, independent of the switching logic above.
    fn j0_series(x: f64) -> f64 {
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..200 {
            term *= -q / (k as f64 * k as f64);
            sum += term;
        }
        sum
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 1, 7.3).unwrap(), 1.0);
        assert_eq!(laguerre(1, 1, 2.0).unwrap(), 0.0);
        let oracle = 9.36f64 * 9.36 / 2.0 - 3.0 * 9.36 + 3.0;
        assert_relative_eq!(oracle, 18.7248, epsilon = 1e-12);
        assert_relative_eq!(laguerre(2, 1, 9.36).unwrap(), oracle, epsilon = 1e-12);
    }

    #[test]
    fn laguerre_rejects_non_finite() {
        assert!(laguerre(2, 1, f64::NAN).is_err());
        assert!(laguerre(2, 1, f64::INFINITY).is_err());
    }

    #[test]
    fn laguerre_at_origin() {
        for p in 0..=12 {
            assert_relative_eq!(laguerre(p, 1, 0.0).unwrap(), f64::from(p + 1), epsilon = 1e-12);
        }
    }

    proptest! {
        #[test]
        fn laguerre_matches_explicit_sum(p in 0u32..=12, k in 0u32..=3, x in 0.0f64..30.0) {
            let got = laguerre(p, k, x).unwrap();
            let (want, scale) = laguerre_explicit_scaled(p, k, x);
            prop_assert!((got - want).abs() <= 1e-10 * scale, "p={p} k={k} x={x}: {got} vs {want}");
        }

        #[test]
        fn bessel_reflection(m in 0i32..=10, x in -40.0f64..40.0) {
            let pos = bessel_j(m, x).unwrap();
            let neg = bessel_j(-m, x).unwrap();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert_eq!(neg, sign * pos);
        }
    }

    #[test]
    fn bessel_examples() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert!(bessel_j(0, f64::NAN).is_err());
    }

    #[test]
    fn bessel_first_zero_of_j0() {
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if j0_series(lo) * j0_series(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 2.404826).abs() < 1e-6);
        assert!(bessel_j(0, 2.404826).unwrap().abs() < 1e-6);
    }

    #[test]
    fn bessel_sum_rule() {
        for i in 0..=100 {
            let x = 0.1 * i as f64;
            let mut s = bessel_j(0, x).unwrap().powi(2);
            for m in 1..=40 {
                s += 2.0 * bessel_j(m, x).unwrap().powi(2);
            }
            assert!((s - 1.0).abs() <= 1e-8, "x={x}: {s}");
        }
    }

    #[test]
    fn bessel_series_and_recurrence_agree_at_switch() {
        for m in 0..8 {
            for &x in &[11.5, 12.0, 12.5] {
                let a = bessel_series(m, x);
                let b = bessel_miller(m, x);
                assert!((a - b).abs() < 1e-11, "m={m} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn bessel_large_argument_reference_values() {
        // Reference values from scipy.special.jv.
        assert_relative_eq!(bessel_j(0, 20.0).unwrap(), 0.16702466434058322, epsilon = 1e-12);
        assert_relative_eq!(bessel_j(1, 50.0).unwrap(), -0.09751182812517514, epsilon = 1e-12);
        assert_relative_eq!(bessel_j(5, 30.0).unwrap(), -0.14324029551207706, epsilon = 1e-12);
    }
}
