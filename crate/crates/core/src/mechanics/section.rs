//! Rectangular beam cross-section properties.

use crate::error::{ModelError, Result};

/// Rectangular cross-section of the equivalent beam.
///
/// `h` is the section height and `b` the section width, both in mm. Derived
/// quantities are computed on demand from `(h, b)` so the defining identities
/// `I = h*b^3/12`, `lambda = h/b`, `I_p = I*(1 + lambda^2)` hold by
/// construction:
///
/// - [`second_moment`](Self::second_moment): area moment of inertia `I`
///   resisting out-of-plane bending,
/// - [`aspect_ratio`](Self::aspect_ratio): `lambda = h/b`, the knob that
///   trades bending stiffness against torsional stiffness,
/// - [`polar_moment`](Self::polar_moment): `I_p = I*(1+lambda^2)`,
///   equivalently `h*b^3/12 + b*h^3/12`, resisting torsion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSection {
    h_mm: f64,
    b_mm: f64,
}

impl BeamSection {
    /// Creates a section from height `h` and width `b` (mm, both > 0).
    pub fn new(h_mm: f64, b_mm: f64) -> Result<Self> {
        ModelError::require_positive("section.h_mm", h_mm)?;
        ModelError::require_positive("section.b_mm", b_mm)?;
        Ok(BeamSection { h_mm, b_mm })
    }

    /// Section height `h` in mm.
    pub fn height(&self) -> f64 {
        self.h_mm
    }

    /// Section width `b` in mm.
    pub fn width(&self) -> f64 {
        self.b_mm
    }

    /// Area moment of inertia `I = h*b^3/12` in mm^4.
    pub fn second_moment(&self) -> f64 {
        self.h_mm * self.b_mm.powi(3) / 12.0
    }

    /// Aspect ratio `lambda = h/b` (dimensionless).
    pub fn aspect_ratio(&self) -> f64 {
        self.h_mm / self.b_mm
    }

    /// Polar moment of inertia `I_p = I*(1 + lambda^2)` in mm^4.
    pub fn polar_moment(&self) -> f64 {
        let lambda = self.aspect_ratio();
        self.second_moment() * (1.0 + lambda * lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_rel;

    #[test]
    fn square_section_reference_values() {
        let s = BeamSection::new(12.0, 12.0).unwrap();
        assert_eq!(s.second_moment(), 1728.0);
        assert_eq!(s.aspect_ratio(), 1.0);
        assert_eq!(s.polar_moment(), 3456.0);
    }

    #[test]
    fn wide_section_reference_values() {
        let s = BeamSection::new(10.0, 20.0).unwrap();
        assert_rel(s.second_moment(), 20000.0 / 3.0, 1e-15, "I(10, 20)");
        assert_eq!(s.aspect_ratio(), 0.5);
        assert_rel(s.polar_moment(), 25000.0 / 3.0, 1e-15, "I_p(10, 20)");
    }

    #[test]
    fn tall_section_reference_values() {
        let s = BeamSection::new(20.0, 10.0).unwrap();
        assert_eq!(s.aspect_ratio(), 2.0);
        assert_rel(s.second_moment(), 5000.0 / 3.0, 1e-15, "I(20, 10)");
        assert_rel(s.polar_moment(), 25000.0 / 3.0, 1e-15, "I_p(20, 10)");
    }

    #[test]
    fn polar_moment_is_symmetric_under_h_b_swap() {
        // I_p = h*b^3/12 + b*h^3/12 is symmetric in (h, b) even though I is not.
        for &(h, b) in &[(10.0, 20.0), (3.0, 7.0), (1.5, 0.4)] {
            let a = BeamSection::new(h, b).unwrap().polar_moment();
            let c = BeamSection::new(b, h).unwrap().polar_moment();
            assert_rel(a, c, 1e-14, "I_p symmetry");
        }
    }

    #[test]
    fn dimensions_must_be_positive() {
        assert!(BeamSection::new(0.0, 10.0).is_err());
        assert!(BeamSection::new(10.0, -1.0).is_err());
        let err = BeamSection::new(10.0, 0.0).unwrap_err().to_string();
        assert!(err.contains("section.b_mm"), "field path missing: {err}");
    }
}
