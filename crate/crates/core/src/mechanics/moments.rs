//! Internal moment distribution along the curved beam under a tip load.

use crate::error::{ModelError, Result};
use crate::mechanics::ArcGeometry;

/// Bending and torsion moments (N*mm) at a cross-section of the arc.
///
/// The tip force `F` acts perpendicular to the plane of the arc; `phi` is the
/// angular distance of the section from the loaded free end, so `phi = 0` is
/// the tip and `phi = alpha` the clamped base. Resolving the moment vector
/// `r x F` (lever arm `r` from section to tip) onto the section's local axes
/// gives
///
/// ```text
/// M_bending(phi) = F * R * sin(phi)        (about the in-plane normal)
/// M_torsion(phi) = F * R * (1 - cos(phi))  (about the local tangent)
/// ```
///
/// Signs follow the projection convention of
/// [`crate::oracles::moment_decomposition_oracle`], which independently
/// validates these closed forms: torsion is the component along the tangent
/// pointing from tip toward base, bending the component along the in-plane
/// normal `z_hat x tangent`. The torsion term uses `2*sin^2(phi/2)` for
/// `1 - cos(phi)` to stay accurate at small `phi`.
///
/// Errors: straight arcs have no curved-section decomposition (math-domain
/// error pointing at the straight-beam closed form); `phi` outside
/// `[0, alpha]` is a domain error.
pub fn internal_moments(f_ext_n: f64, arc: &ArcGeometry, phi_rad: f64) -> Result<(f64, f64)> {
    if !f_ext_n.is_finite() {
        return Err(ModelError::domain("F_ext_N", format!("must be finite, got {f_ext_n}")));
    }
    let r = arc.radius_or_err()?;
    if !(phi_rad.is_finite() && (0.0..=arc.bending_angle()).contains(&phi_rad)) {
        return Err(ModelError::domain(
            "phi_rad",
            format!("must lie in [0, alpha = {}], got {phi_rad}", arc.bending_angle()),
        ));
    }

    let m_bending = f_ext_n * r * phi_rad.sin();
    let half = (phi_rad / 2.0).sin();
    let m_torsion = f_ext_n * r * 2.0 * half * half;
    Ok((m_bending, m_torsion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_rel;
    use std::f64::consts::{FRAC_PI_2, PI};

    /// Arc with an exact bend radius of 50 mm at the given angle.
    fn arc_with_r50(alpha: f64) -> ArcGeometry {
        ArcGeometry::new(50.0 * alpha, alpha).unwrap()
    }

    #[test]
    fn zero_lever_arm_at_the_tip() {
        let arc = arc_with_r50(FRAC_PI_2);
        assert_eq!(internal_moments(1.0, &arc, 0.0).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn quarter_turn_splits_evenly() {
        let arc = arc_with_r50(FRAC_PI_2);
        let (m_b, m_t) = internal_moments(1.0, &arc, FRAC_PI_2).unwrap();
        assert_rel(m_b, 50.0, 1e-12, "M_b at phi=pi/2");
        assert_rel(m_t, 50.0, 1e-12, "M_t at phi=pi/2");
    }

    #[test]
    fn half_turn_is_pure_torsion() {
        let arc = arc_with_r50(PI);
        let (m_b, m_t) = internal_moments(2.0, &arc, PI).unwrap();
        assert!(m_b.abs() < 1e-12, "diametrically opposite the load M_b ~ 0, got {m_b}");
        assert_rel(m_t, 200.0, 1e-12, "M_t at phi=pi");
    }

    #[test]
    fn moments_scale_linearly_with_force() {
        let arc = arc_with_r50(2.0);
        let (b1, t1) = internal_moments(1.0, &arc, 1.3).unwrap();
        let (b2, t2) = internal_moments(2.0, &arc, 1.3).unwrap();
        assert_eq!(b2, 2.0 * b1);
        assert_eq!(t2, 2.0 * t1);
    }

    #[test]
    fn section_angle_must_lie_on_the_arc() {
        let arc = arc_with_r50(1.0);
        assert!(internal_moments(1.0, &arc, -0.1).is_err());
        assert!(internal_moments(1.0, &arc, 1.1).is_err());
        assert!(internal_moments(1.0, &arc, 1.0).is_ok());
    }

    #[test]
    fn straight_state_is_a_math_domain_error() {
        let arc = ArcGeometry::new(100.0, 0.0).unwrap();
        assert!(matches!(
            internal_moments(1.0, &arc, 0.0),
            Err(crate::ModelError::MathDomain(_))
        ));
    }
}
