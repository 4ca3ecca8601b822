use num_complex::Complex64;

use super::ops::{apply_ladder, apply_pair, index, Ladder};

/// Default tolerance on the outermost-shell probability mass.
pub const DEFAULT_TAIL_EPS: f64 = 1e-10;
/// Default Fock cutoff per mode.
pub const DEFAULT_N_MAX: usize = 40;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Amplitudes `c(n_A, n_B)` on the truncated space `0 ≤ n_A, n_B ≤ n_max`,
/// stored row-major in `n_A`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    amplitudes: Vec<Complex64>,
    n_max: usize,
    tail_eps: f64,
}

impl TwoModeState {
    /// Wraps a raw amplitude vector of length `(n_max+1)²`.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, n_max: usize) -> Self {
        assert_eq!(amplitudes.len(), (n_max + 1) * (n_max + 1), "amplitude length");
        Self {
            amplitudes,
            n_max,
            tail_eps: DEFAULT_TAIL_EPS,
        }
    }

    pub fn with_tail_eps(mut self, tail_eps: f64) -> Self {
        self.tail_eps = tail_eps;
        self
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn tail_eps(&self) -> f64 {
        self.tail_eps
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, na: usize, nb: usize) -> Complex64 {
        if na > self.n_max || nb > self.n_max {
            return ZERO;
        }
        self.amplitudes[index(self.n_max, na, nb)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Probability mass on the shell `n_A = n_max` or `n_B = n_max`.
    pub fn tail_mass(&self) -> f64 {
        let n = self.n_max;
        (0..=n)
            .flat_map(|na| (0..=n).map(move |nb| (na, nb)))
            .filter(|&(na, nb)| na == n || nb == n)
            .map(|(na, nb)| self.amplitudes[index(n, na, nb)].norm_sqr())
            .sum()
    }

    pub fn truncation_safe(&self) -> bool {
        self.tail_mass() < self.tail_eps
    }

    /// `⟨ψ|φ⟩`.
    pub fn inner(&self, other: &TwoModeState) -> Complex64 {
        assert_eq!(self.n_max, other.n_max, "cutoff mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        let mut out = self.clone();
        if n > 0.0 {
            out.amplitudes.iter_mut().for_each(|c| *c /= n);
        }
        out
    }

    /// Re-embeds into cutoff `n_max`, dropping components beyond it.
    pub fn resized(&self, n_max: usize) -> Self {
        let mut amps = vec![ZERO; (n_max + 1) * (n_max + 1)];
        let keep = self.n_max.min(n_max);
        for na in 0..=keep {
            for nb in 0..=keep {
                amps[index(n_max, na, nb)] = self.amplitudes[index(self.n_max, na, nb)];
            }
        }
        Self {
            amplitudes: amps,
            n_max,
            tail_eps: self.tail_eps,
        }
    }

    /// Marginal photon-number distribution of mode A.
    pub fn marginal_a(&self) -> Vec<f64> {
        let n = self.n_max;
        (0..=n)
            .map(|na| (0..=n).map(|nb| self.amplitudes[index(n, na, nb)].norm_sqr()).sum())
            .collect()
    }

    pub fn marginal_b(&self) -> Vec<f64> {
        let n = self.n_max;
        (0..=n)
            .map(|nb| (0..=n).map(|na| self.amplitudes[index(n, na, nb)].norm_sqr()).sum())
            .collect()
    }

    pub fn apply(&self, op: Ladder) -> Self {
        self.with_amplitudes(apply_ladder(op, &self.amplitudes, self.n_max))
    }

    /// Local phase rotation `exp(iθ N_A)`. Maps the pair phase `φ` to `φ + θ`.
    pub fn rotate_phase_a(&self, theta: f64) -> Self {
        let n = self.n_max;
        let mut out = self.clone();
        for na in 0..=n {
            let ph = Complex64::from_polar(1.0, theta * na as f64);
            for nb in 0..=n {
                out.amplitudes[index(n, na, nb)] *= ph;
            }
        }
        out
    }

    pub(crate) fn with_amplitudes(&self, amplitudes: Vec<Complex64>) -> Self {
        Self {
            amplitudes,
            n_max: self.n_max,
            tail_eps: self.tail_eps,
        }
    }

    pub(crate) fn combine(&self, x: &[Complex64], cx: Complex64, y: &[Complex64], cy: Complex64) -> Self {
        self.with_amplitudes(x.iter().zip(y).map(|(p, q)| cx * p + cy * q).collect())
    }
}

pub fn vacuum(n_max: usize) -> TwoModeState {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut amps = vec![ZERO; (n_max + 1) * (n_max + 1)];
    amps[0] = Complex64::new(1.0, 0.0);
    TwoModeState::from_amplitudes(amps, n_max)
}

/// Two-mode squeezed vacuum with `c(N,N) = (e^{iφ} tanh ξ)^N / cosh ξ`.
/// Not renormalized: the missing norm is the mass beyond the cutoff.
pub fn tmsv_analytic(xi: f64, phi: f64, n_max: usize) -> TwoModeState {
    let mut state = vacuum(n_max);
    let ratio = Complex64::from_polar(xi.tanh(), phi);
    let mut c = Complex64::new(1.0 / xi.cosh(), 0.0);
    for n in 0..=n_max {
        state.amplitudes[index(n_max, n, n)] = c;
        c *= ratio;
    }
    state
}

/// Analytic outermost-shell mass of the truncated TMSV.
pub fn tmsv_tail_bound(xi: f64, n_max: usize) -> f64 {
    xi.abs().tanh().powi(2 * n_max as i32) / xi.cosh().powi(2)
}

/// Applies `V = exp(ξ(e^{iφ} a†b† − e^{−iφ} ab))`, whose action on the vacuum
/// is [`tmsv_analytic`].
///
/// The series runs in a padded workspace of cutoff `2·n_max` and is projected
/// back, so the artificial reflection at the cutoff does not reach the
/// retained amplitudes.
pub fn squeeze_operator_apply(state: &TwoModeState, xi: f64, phi: f64) -> TwoModeState {
    if xi == 0.0 {
        return state.clone();
    }
    let work = 2 * state.n_max;
    let mut v = state.resized(work).amplitudes;
    let up = Complex64::from_polar(xi, phi);
    let down = -up.conj();
    let steps = (2.0 * xi.abs() * work as f64).ceil().max(1.0) as usize;
    let h = 1.0 / steps as f64;
    for _ in 0..steps {
        let mut term = v.clone();
        let mut acc = v.clone();
        for k in 1..=80 {
            let raised = apply_pair(true, &term, work);
            let lowered = apply_pair(false, &term, work);
            let scale = h / k as f64;
            term = raised
                .iter()
                .zip(&lowered)
                .map(|(r, l)| (up * r + down * l) * scale)
                .collect();
            let tn: f64 = term.iter().map(|c| c.norm_sqr()).sum();
            acc.iter_mut().zip(&term).for_each(|(a, t)| *a += t);
            let an: f64 = acc.iter().map(|c| c.norm_sqr()).sum();
            if tn <= 1e-34 * an {
                break;
            }
        }
        v = acc;
    }
    TwoModeState {
        amplitudes: v,
        n_max: work,
        tail_eps: state.tail_eps,
    }
    .resized(state.n_max)
}

/// Which nonlocal operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nonlocal {
    /// `A = cosh ξ a − e^{iφ} sinh ξ b†`
    A,
    /// `A† = cosh ξ a† − e^{−iφ} sinh ξ b`
    ADag,
    /// `B = cosh ξ b − e^{iφ} sinh ξ a†`
    B,
    /// `B† = cosh ξ b† − e^{−iφ} sinh ξ a`
    BDag,
}

/// Applies a Bogoliubov (nonlocal) mode operator; the result is unnormalized.
pub fn apply_nonlocal(state: &TwoModeState, op: Nonlocal, xi: f64, phi: f64) -> TwoModeState {
    let c = Complex64::new(xi.cosh(), 0.0);
    let e = Complex64::from_polar(xi.sinh(), phi);
    let (local, cross, coeff) = match op {
        Nonlocal::A => (Ladder::A, Ladder::BDag, -e),
        Nonlocal::ADag => (Ladder::ADag, Ladder::B, -e.conj()),
        Nonlocal::B => (Ladder::B, Ladder::ADag, -e),
        Nonlocal::BDag => (Ladder::BDag, Ladder::A, -e.conj()),
    };
    let x = apply_ladder(local, &state.amplitudes, state.n_max);
    let y = apply_ladder(cross, &state.amplitudes, state.n_max);
    state.combine(&x, c, &y, coeff)
}

pub fn nonlocal_create_a(state: &TwoModeState, xi: f64, phi: f64) -> TwoModeState {
    apply_nonlocal(state, Nonlocal::ADag, xi, phi)
}

pub fn nonlocal_create_b(state: &TwoModeState, xi: f64, phi: f64) -> TwoModeState {
    apply_nonlocal(state, Nonlocal::BDag, xi, phi)
}

pub fn nonlocal_annihilate_a(state: &TwoModeState, xi: f64, phi: f64) -> TwoModeState {
    apply_nonlocal(state, Nonlocal::A, xi, phi)
}

pub fn nonlocal_annihilate_b(state: &TwoModeState, xi: f64, phi: f64) -> TwoModeState {
    apply_nonlocal(state, Nonlocal::B, xi, phi)
}

/// `(A†)^{n_a} (B†)^{n_b} |TMSV⟩ / √(n_a! n_b!)`.
///
/// Built on a TMSV with cutoff `n_max + n_a + n_b`, which is exactly the
/// headroom the lowering parts of `A†`, `B†` can pull back below `n_max`.
pub fn tms_number_state(n_a: usize, n_b: usize, xi: f64, phi: f64, n_max: usize) -> TwoModeState {
    let work = n_max + n_a + n_b;
    let mut s = tmsv_analytic(xi, phi, work);
    let mut fact = 1.0;
    for k in 1..=n_b {
        s = nonlocal_create_b(&s, xi, phi);
        fact *= k as f64;
    }
    for k in 1..=n_a {
        s = nonlocal_create_a(&s, xi, phi);
        fact *= k as f64;
    }
    let scale = 1.0 / fact.sqrt();
    s.amplitudes.iter_mut().for_each(|c| *c *= scale);
    s.resized(n_max)
}
