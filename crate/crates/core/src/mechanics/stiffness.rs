//! Closed-form lateral stiffness of the curved beam, and the combined
//! stiffness-plus-break summary for an actuator that also carries a
//! tensioned reinforcement chain.

use crate::error::{ModelError, Result};
use crate::mechanics::arc::ArcGeometry;
use crate::mechanics::chain::BlsChain;
use crate::mechanics::evaluation::{evaluation_function, EvaluationBreakdown};
use crate::mechanics::material::Material;
use crate::mechanics::section::BeamSection;

/// Lateral stiffness of one actuator configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StiffnessResult {
    /// Lateral tip stiffness `k = (4EI/C^3) * F(alpha)` in N/mm.
    pub k_n_per_mm: f64,
    /// Dimensionless evaluation function at the configured bending angle.
    pub f_alpha: f64,
    /// Largest lateral tip force the reinforcement chain tolerates before a
    /// segment gap opens, `F_T * h / L`, in N.
    pub break_force_n: f64,
    /// `F(alpha)` with its bending/torsion weights.
    pub breakdown: EvaluationBreakdown,
}

/// Computes `k = (4EI/C^3) * F(alpha)` for a beam of the given material,
/// cross-section, and arc, returning the stiffness in N/mm together with the
/// evaluation-function breakdown.
pub fn closed_form_stiffness(
    material: &Material,
    section: &BeamSection,
    arc: &ArcGeometry,
) -> Result<(f64, EvaluationBreakdown)> {
    let breakdown = evaluation_function(
        arc.bending_angle(),
        material.poisson_ratio(),
        section.aspect_ratio(),
    )?;
    let cube = arc.arc_length().powi(3);
    let prefactor = 4.0 * material.young_modulus() * section.second_moment() / cube;
    Ok((prefactor * breakdown.f_alpha, breakdown))
}

/// Computes the full stiffness summary for an actuator whose beam and
/// reinforcement chain must share the same structural height `h`.
pub fn lateral_stiffness(
    material: &Material,
    section: &BeamSection,
    arc: &ArcGeometry,
    chain: &BlsChain,
) -> Result<StiffnessResult> {
    let (hs, hc) = (section.height(), chain.height());
    if (hs - hc).abs() > 1e-9 * hs.max(hc) {
        return Err(ModelError::Inconsistent(format!(
            "section height {hs} mm and chain height {hc} mm describe the same \
             physical dimension and must match"
        )));
    }
    let (k_n_per_mm, breakdown) = closed_form_stiffness(material, section, arc)?;
    Ok(StiffnessResult {
        k_n_per_mm,
        f_alpha: breakdown.f_alpha,
        break_force_n: chain.break_threshold(),
        breakdown,
    })
}
