use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the physics and numerics layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("second-order dispersion is zero; the X-wave mass is undefined")]
    SingularDispersion,

    #[error("singular expression: {0}")]
    Singularity(String),

    #[error("no physical solution: {0}")]
    NoPhysicalSolution(String),

    #[error("no real axicon angle: cos(theta) = {cos_theta} exceeds 1")]
    NoRealAngle { cos_theta: f64 },

    #[error("numerical integration did not converge: error estimate {estimate:e} above tolerance {tolerance:e}")]
    Integration { estimate: f64, tolerance: f64 },

    #[error("quadrature weights vanish over the whole velocity window")]
    EmptySupport,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub(crate) fn ensure_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {x}")))
    }
}
