//! Truncated two-mode Fock space.
//!
//! States live on `0 ≤ n_A, n_B ≤ n_max`. The squeeze operator is
//! `V = exp(ξ(e^{iφ} a†b† − e^{−iφ} ab))`, which sends the vacuum to
//! `Σ (e^{iφ} tanh ξ)^N |N,N⟩ / cosh ξ`, and the nonlocal modes are
//! `A = V a V† = cosh ξ a − e^{iφ} sinh ξ b†` and its mirror `B`.

mod family;
mod moments;
mod ops;
mod state;

pub use family::{evaluate_family, spectral_sweep, FamilyMember, FamilyReport, FamilySpec, SweepRow};
pub use moments::{
    joint_quadrature_variances, kx_closed_form, moments, separability_check, CriterionReport, JointVariances,
    Moments, VIOLATION_GUARD,
};
pub use ops::{Ladder, ModeOperators, SparseOp};
pub use state::{
    apply_nonlocal, nonlocal_annihilate_a, nonlocal_annihilate_b, nonlocal_create_a, nonlocal_create_b,
    squeeze_operator_apply, tms_number_state, tmsv_analytic, tmsv_tail_bound, vacuum, Nonlocal, TwoModeState,
    DEFAULT_N_MAX, DEFAULT_TAIL_EPS,
};
