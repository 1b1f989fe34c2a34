//! Unit newtypes for measured quantities.
//!
//! Each wraps an `f64` but offers no implicit conversion and no cross-unit
//! arithmetic, so code cannot hand a pressure to a function expecting a
//! stiffness. Dividing two [`Stiffness`] values is dimensionless and yields
//! a plain `f64` — the only arithmetic the analysis needs.

use std::ops::Div;

use crate::error::{ModelError, Result};

macro_rules! unit_newtype {
    ($(#[$doc:meta])* $name:ident, $accessor:ident, $field:literal, $check:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            pub fn new(value: f64) -> Result<Self> {
                ModelError::$check($field, value)?;
                Ok(Self(value))
            }

            pub fn $accessor(self) -> f64 {
                self.0
            }
        }
    };
}

unit_newtype!(
    /// Chamber pressure in kPa, non-negative.
    PressureKpa,
    kpa,
    "pressure_kPa",
    require_non_negative
);

unit_newtype!(
    /// Rope-pull weight in kg (0 when no lateral load is attached).
    WeightKg,
    kg,
    "weight_kg",
    require_non_negative
);

/// Bending angle in degrees, restricted to `[0, 360)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AngleDeg(f64);

impl AngleDeg {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..360.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(ModelError::domain(
                "bending_angle_deg",
                format!("must lie in [0, 360), got {value}"),
            ))
        }
    }

    pub fn degrees(self) -> f64 {
        self.0
    }
}

/// Fitted stiffness in N/mm. Finite; may legitimately be zero (constant
/// force) or negative (a decreasing noisy fit) — ratio operations impose
/// their own positivity preconditions.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Stiffness(f64);

impl Stiffness {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(ModelError::domain("k_N_per_mm", format!("must be finite, got {value}")))
        }
    }

    pub fn n_per_mm(self) -> f64 {
        self.0
    }
}

impl Div for Stiffness {
    type Output = f64;

    /// Stiffness over stiffness is a dimensionless ratio.
    fn div(self, rhs: Stiffness) -> f64 {
        self.0 / rhs.0
    }
}
