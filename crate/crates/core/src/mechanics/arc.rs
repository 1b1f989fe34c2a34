//! Constant-curvature backbone geometry.

use std::f64::consts::TAU;

use crate::error::{ModelError, Result};

/// Circular-arc state of the actuator backbone.
///
/// The backbone of arc length `C` (mm) bends through centre angle `alpha`
/// (rad) at constant curvature, so the bend radius is `R = C/alpha`.
/// `alpha == 0` is a valid state meaning a straight beam: `R` is conceptually
/// infinite there, so [`radius`](Self::radius) returns `None` and operations
/// that genuinely need curvature must take the straight-beam special case
/// instead of dividing by `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcGeometry {
    c_mm: f64,
    alpha_rad: f64,
}

impl ArcGeometry {
    /// Creates an arc of length `C` (mm, > 0) and centre angle `alpha`
    /// (rad, in `[0, 2*pi]`).
    pub fn new(c_mm: f64, alpha_rad: f64) -> Result<Self> {
        ModelError::require_positive("geometry.C_mm", c_mm)?;
        if !(alpha_rad.is_finite() && (0.0..=TAU).contains(&alpha_rad)) {
            return Err(ModelError::domain(
                "geometry.alpha_rad",
                format!("must lie in [0, 2*pi], got {alpha_rad}"),
            ));
        }
        Ok(ArcGeometry { c_mm, alpha_rad })
    }

    /// Arc length `C` in mm.
    pub fn arc_length(&self) -> f64 {
        self.c_mm
    }

    /// Centre angle `alpha` in rad.
    pub fn bending_angle(&self) -> f64 {
        self.alpha_rad
    }

    /// Whether this is the straight (zero-curvature) state.
    pub fn is_straight(&self) -> bool {
        self.alpha_rad == 0.0
    }

    /// Bend radius `R = C/alpha` in mm; `None` in the straight state.
    pub fn radius(&self) -> Option<f64> {
        if self.is_straight() {
            None
        } else {
            Some(self.c_mm / self.alpha_rad)
        }
    }

    /// Bend radius, or a math-domain error directing the caller to the
    /// straight-beam special case.
    pub(crate) fn radius_or_err(&self) -> Result<f64> {
        self.radius().ok_or_else(|| {
            ModelError::MathDomain(
                "straight beam (alpha = 0) has no finite bend radius; \
                 use the straight-beam closed form k = 3EI/C^3"
                    .to_string(),
            )
        })
    }
}

/// A planar point in mm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x_mm: f64,
    pub y_mm: f64,
}

/// Position and tangent direction of the backbone tip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TipPose {
    pub x_mm: f64,
    pub y_mm: f64,
    /// Tangent direction at the tip, measured from +x; equals `alpha`.
    pub heading_rad: f64,
}

/// Samples `n_samples` points along the backbone (base first, tip last) and
/// returns them with the tip pose.
///
/// The base sits at the origin with its tangent along +x and the arc bending
/// toward +y, so a point at arc-length fraction `t` is
/// `(R*sin(t*alpha), R*(1-cos(t*alpha)))` and the tip lands on
/// `(R*sin(alpha), R*(1-cos(alpha)))`. The straight state returns evenly
/// spaced points on the +x segment of length `C` with tip `(C, 0)`.
///
/// Numerically the coordinates are evaluated as `C*sin(ta)/a` and
/// `2C*sin^2(ta/2)/a`, which stay fully accurate for arbitrarily small
/// nonzero `alpha` (no `1 - cos` cancellation, no overflowing `R`).
pub fn backbone_and_tip(arc: &ArcGeometry, n_samples: usize) -> Result<(Vec<Point2>, TipPose)> {
    if n_samples < 2 {
        return Err(ModelError::domain(
            "n_samples",
            format!("need at least 2 backbone samples, got {n_samples}"),
        ));
    }

    let c = arc.arc_length();
    let alpha = arc.bending_angle();
    let mut points = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let t = i as f64 / (n_samples - 1) as f64;
        let point = if arc.is_straight() {
            Point2 { x_mm: c * t, y_mm: 0.0 }
        } else {
            let theta = t * alpha;
            let half = (theta / 2.0).sin();
            Point2 {
                x_mm: c * theta.sin() / alpha,
                y_mm: c * 2.0 * half * half / alpha,
            }
        };
        points.push(point);
    }

    let tip = points[n_samples - 1];
    let pose = TipPose { x_mm: tip.x_mm, y_mm: tip.y_mm, heading_rad: alpha };
    Ok((points, pose))
}

#[cfg(test)]
mod tests {
    // Reference values are spelled at full 17-digit round-trip precision on
    // purpose: the literal documents the exact f64 being frozen.
    #![allow(clippy::excessive_precision)]

    use super::*;
    use crate::testutil::assert_rel;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn radius_reference_values() {
        let arc = ArcGeometry::new(100.0, PI).unwrap();
        assert_rel(arc.radius().unwrap(), 31.830988618379067, 1e-14, "R(100, pi)");
        let arc = ArcGeometry::new(100.0, FRAC_PI_2).unwrap();
        assert_rel(arc.radius().unwrap(), 63.661977236758134, 1e-14, "R(100, pi/2)");
    }

    #[test]
    fn straight_state_has_no_radius() {
        let arc = ArcGeometry::new(100.0, 0.0).unwrap();
        assert!(arc.is_straight());
        assert_eq!(arc.radius(), None);
        assert!(matches!(arc.radius_or_err(), Err(crate::ModelError::MathDomain(_))));
    }

    #[test]
    fn angle_domain_is_zero_to_tau() {
        assert!(ArcGeometry::new(100.0, -0.1).is_err());
        assert!(ArcGeometry::new(100.0, TAU + 0.1).is_err());
        assert!(ArcGeometry::new(100.0, TAU).is_ok());
        assert!(ArcGeometry::new(0.0, 1.0).is_err());
    }

    #[test]
    fn quarter_circle_tip() {
        let arc = ArcGeometry::new(100.0, FRAC_PI_2).unwrap();
        let (points, tip) = backbone_and_tip(&arc, 9).unwrap();
        assert_rel(tip.x_mm, 63.661977236758134, 1e-13, "tip x");
        assert_rel(tip.y_mm, 63.661977236758134, 1e-13, "tip y");
        assert_eq!(tip.heading_rad, FRAC_PI_2);
        assert_eq!(points.len(), 9);
        assert_eq!((points[8].x_mm, points[8].y_mm), (tip.x_mm, tip.y_mm));
    }

    #[test]
    fn all_samples_lie_on_the_bend_circle() {
        let arc = ArcGeometry::new(100.0, 2.0).unwrap();
        let r = arc.radius().unwrap();
        let (points, _) = backbone_and_tip(&arc, 33).unwrap();
        for p in &points {
            // circle centre is at (0, R)
            let d2 = p.x_mm * p.x_mm + (p.y_mm - r) * (p.y_mm - r);
            assert_rel(d2, r * r, 1e-12, "squared distance to centre");
        }
    }

    #[test]
    fn semicircle_tip_is_atop_the_base() {
        let arc = ArcGeometry::new(100.0, PI).unwrap();
        let (_, tip) = backbone_and_tip(&arc, 2).unwrap();
        assert!(tip.x_mm.abs() < 1e-12, "tip x should vanish, got {}", tip.x_mm);
        assert_rel(tip.y_mm, 63.661977236758134, 1e-13, "tip y = 2R");
    }

    #[test]
    fn straight_state_samples_the_x_axis() {
        let arc = ArcGeometry::new(100.0, 0.0).unwrap();
        let (points, tip) = backbone_and_tip(&arc, 3).unwrap();
        assert_eq!(points[0], Point2 { x_mm: 0.0, y_mm: 0.0 });
        assert_eq!(points[1], Point2 { x_mm: 50.0, y_mm: 0.0 });
        assert_eq!(points[2], Point2 { x_mm: 100.0, y_mm: 0.0 });
        assert_eq!((tip.x_mm, tip.y_mm, tip.heading_rad), (100.0, 0.0, 0.0));
    }

    #[test]
    fn tiny_angles_degrade_gracefully_to_the_straight_line() {
        let arc = ArcGeometry::new(100.0, 1e-12).unwrap();
        let (points, tip) = backbone_and_tip(&arc, 5).unwrap();
        assert_rel(tip.x_mm, 100.0, 1e-12, "tip x at alpha=1e-12");
        assert!(tip.y_mm.abs() < 1e-9);
        assert!(points.iter().all(|p| p.x_mm.is_finite() && p.y_mm.is_finite()));
    }

    #[test]
    fn sample_count_must_be_at_least_two() {
        let arc = ArcGeometry::new(100.0, 1.0).unwrap();
        assert!(backbone_and_tip(&arc, 1).is_err());
        assert!(backbone_and_tip(&arc, 0).is_err());
    }
}
