//! Quantum X waves in a dispersive nonlinear medium.
//!
//! The crate covers the classical mode structure ([`medium`]), velocity
//! phase matching of down-converted pairs ([`phasematch`]), the squeezing
//! parameter and its dependence on the spectral order ([`squeezing`]), and a
//! truncated two-mode Fock-space simulator that checks entanglement of the
//! resulting squeezed states ([`fockspace`]).
//!
//! ```
//! use xwave::squeezing::optimal_velocity;
//! use xwave::fockspace::{separability_check, tmsv_analytic};
//!
//! let opt = optimal_velocity(0, 0);
//! assert!((opt.x_opt - 3.0).abs() < 1e-6);
//! let report = separability_check(&tmsv_analytic(opt.xi_normalized, 0.0, 40));
//! assert!(report.violated);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fockspace;
pub mod medium;
pub mod phasematch;
pub mod quad;
pub mod specfun;
pub mod squeezing;

pub use error::{Error, Result};
pub use medium::MediumParams;
