//! Closed-form lateral-stiffness model of a constant-curvature beam.
//!
//! The physical system is a slender rectangular-section beam bent into a
//! circular arc (arc length `C`, centre angle `alpha`, radius `R = C/alpha`),
//! loaded at its free tip by a force perpendicular to the bending plane.
//! Strain energy accumulates in out-of-plane bending and torsion; the tip
//! displacement follows from the energy-derivative (Castigliano) relation
//! `delta = dU/dF`, which yields a closed-form lateral stiffness
//!
//! ```text
//! k = (4 E I / C^3) * F(alpha),
//! F(alpha) = 1 / [ A_bending(alpha) + 2(1+nu) * A_torsion(alpha) / (1+lambda^2) ]
//! ```
//!
//! with `I = h b^3 / 12`, aspect ratio `lambda = h/b`, and polar moment
//! `I_p = I (1 + lambda^2)`. The angular weight functions `A_bending` and
//! `A_torsion` are derived in [`evaluation`]; every closed form here is
//! cross-checked against the independent numerical ground truths in
//! [`crate::oracles`].
//!
//! A tensioned multi-segment chain stiffens the beam laterally until the tip
//! load exceeds the separation threshold `F_T * h / L` ([`chain`]), after
//! which the chain "breaks" (segments lose contact) and the stiffness
//! contribution collapses; this module models the threshold, not post-break
//! behavior.
//!
//! Units throughout: N, mm, MPa (N/mm^2), radians. Degrees exist only at the
//! CLI boundary.

pub mod arc;
pub mod chain;
pub mod evaluation;
pub mod material;
pub mod moments;
pub mod section;
pub mod stiffness;

pub use arc::{backbone_and_tip, ArcGeometry, Point2, TipPose};
pub use chain::{break_check, BlsChain};
pub use evaluation::{evaluation_function, EvaluationBreakdown, SMALL_ANGLE_THRESHOLD_RAD};
pub use material::{shear_modulus, Material};
pub use moments::internal_moments;
pub use section::BeamSection;
pub use stiffness::{closed_form_stiffness, lateral_stiffness, StiffnessResult};
