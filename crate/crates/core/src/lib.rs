//! Modeling and analysis toolkit for a tunable-stiffness soft actuator that
//! pairs a pneumatic bending body with a tension-locked segmented
//! reinforcement chain.
//!
//! The crate is organized in four layers:
//!
//! * [`mechanics`] — the closed-form physics: curved-beam lateral stiffness
//!   `k = (4EI/C^3) * F(alpha)`, the chain break threshold `F_T * h / L`, and
//!   constant-curvature backbone kinematics.
//! * [`oracles`] — independent numerical ground truths (strain-energy
//!   quadrature, finite-difference displacement, a discrete chord-segment
//!   chain, and vector moment decomposition) used to validate the closed
//!   forms at runtime and in the test suite.
//! * [`explorer`] — design sweeps over aspect ratio and bending angle, a
//!   grid search for the stiffest feasible cross-section, and deterministic
//!   CSV/SVG emission.
//! * [`experiment`] — measured-data reduction: CSV parsing, per-condition
//!   stiffness fits, stiffness-modulation and enhancement ratios, and seeded
//!   synthetic fixture generation.
//!
//! Units are N, mm, MPa (N/mm^2), and radians everywhere; the CLI converts
//! degrees at the boundary. All fallible operations return
//! [`error::ModelError`], which carries the field path that failed
//! validation.

pub mod error;
pub mod experiment;
pub mod explorer;
pub mod format;
pub mod mechanics;
pub mod oracles;

pub use error::{ModelError, Result};
pub use format::fmt_g;
pub use mechanics::{
    backbone_and_tip, break_check, closed_form_stiffness, evaluation_function, internal_moments,
    lateral_stiffness, shear_modulus, ArcGeometry, BeamSection, BlsChain, EvaluationBreakdown,
    Material, Point2, StiffnessResult, TipPose, SMALL_ANGLE_THRESHOLD_RAD,
};
