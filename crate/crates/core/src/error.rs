use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the special functions, the integrators and the catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Γ(z) evaluated at a nonpositive integer.
    #[error("gamma function pole at z = {0}")]
    Pole(Complex64),

    /// A denominator parameter of a hypergeometric series hit a nonpositive integer.
    #[error("parameter {name} = {value} is a nonpositive integer")]
    ParameterPole { name: &'static str, value: Complex64 },

    /// A series or an adaptive integrator ran out of budget.
    #[error("{what} did not converge (partial value {partial:?}, error estimate {error_estimate:?})")]
    NonConvergence { what: &'static str, partial: Option<Complex64>, error_estimate: Option<f64> },

    /// Arguments outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation produced NaN or infinity.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// Parameters violate the validity conditions of an identity.
    #[error("invalid parameters for {case}: {condition}")]
    InvalidParams { case: String, condition: String },

    #[error("unknown case id: {0}")]
    UnknownCase(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Reject NaN/inf results instead of passing them on.
pub(crate) fn finite(value: Complex64, what: &'static str) -> Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(what))
    }
}
