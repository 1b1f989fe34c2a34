//! Chord-segment discretization of the curved beam.
//!
//! The arc is replaced by straight segments between nodes sampled on the
//! centerline. The internal moment at a point is recomputed from raw
//! position vectors (`(tip - point) x F`), projected onto each chord's
//! tangent (twist) and in-plane normal (out-of-plane bending), and the
//! segment energies are integrated exactly — along a straight chord loaded
//! only beyond its end, the moment varies linearly, so
//! `integral of M^2 ds = (l/3)(M_a^2 + M_a M_b + M_b^2)` holds without
//! quadrature error. Nothing here shares code or formulas with the closed
//! forms or with [`crate::mechanics::internal_moments`], which makes the
//! result a genuinely independent stiffness estimate; it converges to the
//! continuous model from above (a chain of straight chords spans the same
//! endpoints with slightly less path length, hence slightly stiffer).

use crate::error::{ModelError, Result};
use crate::mechanics::arc::ArcGeometry;
use crate::mechanics::material::Material;
use crate::mechanics::section::BeamSection;

/// Lateral tip stiffness (N/mm) of an `n_segments`-chord discretization of
/// the arc. Straight arcs are allowed: the chord chain then reproduces the
/// cantilever closed form exactly for any admissible segment count.
pub fn discrete_chain_stiffness(
    material: &Material,
    section: &BeamSection,
    arc: &ArcGeometry,
    n_segments: usize,
) -> Result<f64> {
    if n_segments < 2 {
        return Err(ModelError::domain(
            "n_segments",
            format!("chord discretization needs at least 2 segments, got {n_segments}"),
        ));
    }

    // Node positions along the centerline, tip first. For a curved arc the
    // nodes sit on a circle of radius R about the origin with the tip at
    // angle 0 and the base at angle alpha; a straight beam lies on the x axis.
    let alpha = arc.bending_angle();
    let c = arc.arc_length();
    let nodes: Vec<(f64, f64)> = if arc.is_straight() {
        (0..=n_segments)
            .map(|i| (c - c * i as f64 / n_segments as f64, 0.0))
            .collect()
    } else {
        let radius = c / alpha;
        (0..=n_segments)
            .map(|i| {
                let phi = alpha * i as f64 / n_segments as f64;
                (radius * phi.cos(), radius * phi.sin())
            })
            .collect()
    };
    let tip = nodes[0];

    // In-plane moment vector at a node for a unit out-of-plane tip load:
    // m = (tip - p) x (0, 0, 1), which in 2-D components is (r_y, -r_x).
    let probe_n = 1.0;
    let moment_at = |p: (f64, f64)| -> (f64, f64) {
        let (rx, ry) = (tip.0 - p.0, tip.1 - p.1);
        (probe_n * ry, -probe_n * rx)
    };

    let ei = material.young_modulus() * section.second_moment();
    let g_ip = material.shear_modulus() * section.polar_moment();
    let exact_segment_integral = |a: f64, b: f64| (a * a + a * b + b * b) / 3.0;

    let mut energy = 0.0;
    for pair in nodes.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let len = dx.hypot(dy);
        let (ux, uy) = (dx / len, dy / len);
        let (nx, ny) = (-uy, ux);
        let (mpx, mpy) = moment_at(p);
        let (mqx, mqy) = moment_at(q);
        let twist = exact_segment_integral(mpx * ux + mpy * uy, mqx * ux + mqy * uy);
        let bend = exact_segment_integral(mpx * nx + mpy * ny, mqx * nx + mqy * ny);
        energy += len * (bend / (2.0 * ei) + twist / (2.0 * g_ip));
    }

    // delta = dU/dF = 2U/F for the quadratic energy, so k = F / delta.
    Ok(probe_n * probe_n / (2.0 * energy))
}
