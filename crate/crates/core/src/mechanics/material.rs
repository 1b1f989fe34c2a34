//! Linear-elastic material constants.

use crate::error::{ModelError, Result};

/// Isotropic linear-elastic material of the stiffening chain.
///
/// Stores the two independent constants; the shear modulus is always derived
/// on demand so it can never drift out of sync with `E` and `nu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    e_mpa: f64,
    nu: f64,
}

impl Material {
    /// Creates a material from Young's modulus (MPa) and Poisson's ratio.
    ///
    /// `nu` must lie in `[0, 0.5)`: 0.5 is the incompressible limit where the
    /// shear relation degenerates, and negative ratios are outside this
    /// model's scope.
    pub fn new(e_mpa: f64, nu: f64) -> Result<Self> {
        ModelError::require_positive("material.E_MPa", e_mpa)?;
        if !(nu.is_finite() && (0.0..0.5).contains(&nu)) {
            return Err(ModelError::domain(
                "material.nu",
                format!("must lie in [0, 0.5), got {nu}"),
            ));
        }
        Ok(Material { e_mpa, nu })
    }

    /// Young's modulus in MPa.
    pub fn young_modulus(&self) -> f64 {
        self.e_mpa
    }

    /// Poisson's ratio (dimensionless).
    pub fn poisson_ratio(&self) -> f64 {
        self.nu
    }

    /// Shear modulus `G = E / (2(1+nu))` in MPa, derived on demand.
    pub fn shear_modulus(&self) -> f64 {
        self.e_mpa / (2.0 * (1.0 + self.nu))
    }
}

/// Isotropic shear modulus `G = E / (2(1+nu))` in MPa.
///
/// Standalone form of [`Material::shear_modulus`] with full input validation.
pub fn shear_modulus(e_mpa: f64, nu: f64) -> Result<f64> {
    Ok(Material::new(e_mpa, nu)?.shear_modulus())
}
