//! Vector recomputation of the internal bending/torsion moment split.

use crate::error::{ModelError, Result};
use crate::mechanics::arc::ArcGeometry;

#[derive(Debug, Clone, Copy)]
struct V3 {
    x: f64,
    y: f64,
    z: f64,
}

fn cross(a: V3, b: V3) -> V3 {
    V3 { x: a.y * b.z - a.z * b.y, y: a.z * b.x - a.x * b.z, z: a.x * b.y - a.y * b.x }
}

fn dot(a: V3, b: V3) -> f64 {
    a.x * b.x + a.y * b.y + a.z * b.z
}

/// Recomputes `(M_bending, M_torsion)` at section angle `phi_rad` (measured
/// from the loaded tip) purely from 3-vector geometry: the moment of the tip
/// load about the section, `m = (p_tip - p) x F`, is projected onto the
/// centerline tangent pointing toward the base (torsion) and onto the
/// in-plane axis `z x tangent` (out-of-plane bending).
///
/// Signed results; [`crate::mechanics::internal_moments`] must agree with
/// this decomposition component-for-component over the whole admissible
/// angle range, which is what the test suite asserts.
pub fn moment_decomposition_oracle(
    f_ext_n: f64,
    arc: &ArcGeometry,
    phi_rad: f64,
) -> Result<(f64, f64)> {
    if !f_ext_n.is_finite() {
        return Err(ModelError::domain("f_ext_n", format!("must be finite, got {f_ext_n}")));
    }
    let radius = arc.radius_or_err()?;
    let alpha = arc.bending_angle();
    if !(phi_rad.is_finite() && (0.0..=alpha).contains(&phi_rad)) {
        return Err(ModelError::domain(
            "phi_rad",
            format!("section angle must lie in [0, alpha = {alpha}], got {phi_rad}"),
        ));
    }

    // Circle of radius R about the origin, tip at angle 0, base at alpha.
    let tip = V3 { x: radius, y: 0.0, z: 0.0 };
    let point = V3 { x: radius * phi_rad.cos(), y: radius * phi_rad.sin(), z: 0.0 };
    let force = V3 { x: 0.0, y: 0.0, z: f_ext_n };
    let lever = V3 { x: tip.x - point.x, y: tip.y - point.y, z: tip.z - point.z };
    let moment = cross(lever, force);

    let tangent_to_base = V3 { x: -phi_rad.sin(), y: phi_rad.cos(), z: 0.0 };
    let out_of_plane = V3 { x: 0.0, y: 0.0, z: 1.0 };
    let bending_axis = cross(out_of_plane, tangent_to_base);

    Ok((dot(moment, bending_axis), dot(moment, tangent_to_base)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mechanics::internal_moments;
    use crate::oracles::seeded_random_configs;
    use crate::testutil::{assert_rel, rel_err};
    use rand::Rng;
    use rand::SeedableRng;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn quarter_and_half_turn_reference_points() {
        let arc = ArcGeometry::new(50.0 * FRAC_PI_2, FRAC_PI_2).unwrap();
        let (m_b, m_t) = moment_decomposition_oracle(1.0, &arc, FRAC_PI_2).unwrap();
        assert_rel(m_b, 50.0, 1e-12, "bending at quarter turn");
        assert_rel(m_t, 50.0, 1e-12, "torsion at quarter turn");

        let arc = ArcGeometry::new(100.0 * PI, PI).unwrap();
        let (m_b, m_t) = moment_decomposition_oracle(2.0, &arc, PI).unwrap();
        assert!(m_b.abs() < 1e-12, "half turn bending should vanish, got {m_b}");
        assert_rel(m_t, 400.0, 1e-12, "half turn torsion = 2 F R");
    }

    #[test]
    fn signed_agreement_with_the_production_formulas_on_random_draws() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let mut checked = 0;
        while checked < 100 {
            let alpha: f64 = rng.gen_range(0.02..=TAU);
            let phi = alpha * rng.gen_range(0.0..=1.0f64);
            let f: f64 = rng.gen_range(-5.0..=5.0f64);
            let arc = ArcGeometry::new(rng.gen_range(10.0..=300.0f64), alpha).unwrap();
            let (ob, ot) = moment_decomposition_oracle(f, &arc, phi).unwrap();
            let (pb, pt) = internal_moments(f, &arc, phi).unwrap();
            assert!(rel_err(pb, ob) <= 1e-10, "bending mismatch at phi {phi}: {pb} vs {ob}");
            assert!(rel_err(pt, ot) <= 1e-10, "torsion mismatch at phi {phi}: {pt} vs {ot}");
            checked += 1;
        }
    }

    #[test]
    fn beyond_half_turn_the_bending_moment_changes_sign() {
        let arc = ArcGeometry::new(100.0, 5.0).unwrap();
        let (m_b, m_t) = moment_decomposition_oracle(1.0, &arc, 4.0).unwrap();
        assert!(m_b < 0.0, "sin(phi) < 0 past pi, got {m_b}");
        assert!(m_t > 0.0, "torsion stays positive, got {m_t}");
        let (pb, pt) = internal_moments(1.0, &arc, 4.0).unwrap();
        assert_rel(pb, m_b, 1e-12, "signed bending agreement");
        assert_rel(pt, m_t, 1e-12, "signed torsion agreement");
    }

    #[test]
    fn seeded_configurations_are_exercised_end_to_end() {
        for (_, _, arc) in seeded_random_configs(7, 5) {
            let alpha = arc.bending_angle();
            let (m_b, m_t) = moment_decomposition_oracle(1.0, &arc, 0.5 * alpha).unwrap();
            let (pb, pt) = internal_moments(1.0, &arc, 0.5 * alpha).unwrap();
            assert!(rel_err(pb, m_b) <= 1e-10);
            assert!(rel_err(pt, m_t) <= 1e-10);
        }
    }

    #[test]
    fn domain_errors() {
        let arc = ArcGeometry::new(100.0, 1.0).unwrap();
        assert!(moment_decomposition_oracle(1.0, &arc, 1.5).is_err());
        assert!(moment_decomposition_oracle(1.0, &arc, -0.1).is_err());
        let straight = ArcGeometry::new(100.0, 0.0).unwrap();
        assert!(moment_decomposition_oracle(1.0, &straight, 0.0).is_err());
    }
}
