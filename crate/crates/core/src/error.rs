use thiserror::Error;

/// Errors raised by the model, the closed forms and the quadrature oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The bath pole coincides with one of the oscillator poles.
    #[error("degenerate poles: {a} and {b} coincide within relative tolerance {tolerance:e}")]
    DegeneratePoles { a: f64, b: f64, tolerance: f64 },

    /// The relaxation cubic returned no positive real root.
    #[error("internal error: relaxation cubic has no positive real root")]
    NoPhysicalRoot,

    /// Ω² − γΩ + ω₀² is too close to zero for the partial-fraction closed forms.
    #[error("near-degenerate denominator Ω²−γΩ+ω₀² = {value:e} (scale {scale:e}); use the quadrature oracle")]
    NearDegenerateDenominator { value: f64, scale: f64 },

    #[error("quadrature tolerance not met after {subdivisions} subdivisions: estimate {value:e}, achieved error {achieved:e}, requested {requested:e}")]
    ToleranceNotMet {
        value: f64,
        achieved: f64,
        requested: f64,
        subdivisions: usize,
    },

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        })
    }
}
