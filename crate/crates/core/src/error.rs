//! Error taxonomy shared by the model, oracle, sweep, and analysis modules.
//!
//! The split mirrors how callers must react:
//! - [`ModelError::Domain`] / [`ModelError::Inconsistent`]: the caller supplied
//!   an invalid or contradictory input (CLI maps these to exit code 2),
//! - [`ModelError::MathDomain`]: the request is structurally valid but the
//!   underlying math is singular there (exit code 3),
//! - [`ModelError::Io`]: the computation succeeded but an artifact could not
//!   be written/read (exit code 4).

use std::path::PathBuf;

/// Unified error type for all library operations.
#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    /// A single input violates its documented domain (e.g. a negative length).
    #[error("{field}: {message}")]
    Domain {
        /// Dotted path of the offending input, e.g. `section.h_mm`.
        field: String,
        /// Human-readable constraint that was violated.
        message: String,
    },

    /// Two or more inputs are individually valid but mutually contradictory.
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),

    /// The math itself is undefined or degenerate for the given state
    /// (e.g. strain-energy quadrature over a straight beam).
    #[error("math domain: {0}")]
    MathDomain(String),

    /// File I/O failed; `path` gives the artifact the caller asked for.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ModelError {
    /// Convenience constructor for [`ModelError::Domain`].
    pub fn domain(field: impl Into<String>, message: impl Into<String>) -> Self {
        ModelError::Domain {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Validates that `value` is finite and strictly positive.
    pub fn require_positive(field: &str, value: f64) -> Result<f64, ModelError> {
        if value.is_finite() && value > 0.0 {
            Ok(value)
        } else {
            Err(ModelError::domain(field, format!("must be finite and > 0, got {value}")))
        }
    }

    /// Validates that `value` is finite and non-negative.
    pub fn require_non_negative(field: &str, value: f64) -> Result<f64, ModelError> {
        if value.is_finite() && value >= 0.0 {
            Ok(value)
        } else {
            Err(ModelError::domain(field, format!("must be finite and >= 0, got {value}")))
        }
    }
}

/// Shorthand used across the crate.
pub type Result<T, E = ModelError> = std::result::Result<T, E>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_error_message_names_the_field() {
        let err = ModelError::require_positive("material.E_MPa", -3.0).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("material.E_MPa"), "message should carry the field path: {text}");
        assert!(text.contains("-3"), "message should echo the offending value: {text}");
    }

    #[test]
    fn positive_check_rejects_zero_nan_and_infinity() {
        assert!(ModelError::require_positive("x", 0.0).is_err());
        assert!(ModelError::require_positive("x", f64::NAN).is_err());
        assert!(ModelError::require_positive("x", f64::INFINITY).is_err());
        assert_eq!(ModelError::require_positive("x", 2.5).unwrap(), 2.5);
    }

    #[test]
    fn non_negative_check_accepts_zero() {
        assert_eq!(ModelError::require_non_negative("w", 0.0).unwrap(), 0.0);
        assert!(ModelError::require_non_negative("w", -1e-12).is_err());
    }
}
