//! Value-vs-reference comparison record shared by the oracle entry points.

use crate::error::Result;
use crate::mechanics::arc::ArcGeometry;
use crate::mechanics::closed_form_stiffness;
use crate::mechanics::material::Material;
use crate::mechanics::section::BeamSection;
use crate::oracles::quadrature::{displacement_castigliano_fd, QuadratureSpec};

/// One closed-form value checked against an independently computed reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    /// Production (closed-form) value.
    pub value: f64,
    /// Independently computed reference.
    pub reference: f64,
    /// `|value - reference|`.
    pub abs_error: f64,
    /// `abs_error / max(|reference|, 1e-30)`.
    pub rel_error: f64,
}

impl OracleReport {
    pub fn compare(value: f64, reference: f64) -> Self {
        let abs_error = (value - reference).abs();
        Self { value, reference, abs_error, rel_error: abs_error / reference.abs().max(1e-30) }
    }
}

/// Reference lateral stiffness `F / delta` with the displacement taken from
/// the finite-difference/quadrature path (probe load 1 N; the model is
/// linear, so the probe magnitude is immaterial).
pub(crate) fn stiffness_reference(
    material: &Material,
    section: &BeamSection,
    arc: &ArcGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let probe_n = 1.0;
    let delta = displacement_castigliano_fd(probe_n, material, section, arc, spec, None)?;
    Ok(probe_n / delta)
}

/// Checks the closed-form lateral stiffness against the quadrature-based
/// reference for one configuration.
pub fn stiffness_via_quadrature(
    material: &Material,
    section: &BeamSection,
    arc: &ArcGeometry,
    spec: &QuadratureSpec,
) -> Result<OracleReport> {
    let (k_closed, _) = closed_form_stiffness(material, section, arc)?;
    let k_reference = stiffness_reference(material, section, arc, spec)?;
    Ok(OracleReport::compare(k_closed, k_reference))
}
