//! Independent numerical ground truths for the closed-form model.
//!
//! Every closed form in [`crate::mechanics`] is re-derivable by slower,
//! assumption-light numerics. This module implements those re-derivations so
//! the test suite and the `verify` command can cross-check the production
//! formulas at runtime:
//!
//! * [`strain_energy_quadrature`] — composite-Simpson integration of the
//!   bending + torsion strain-energy density along the arc. Depends on the
//!   internal-moment formulas but **not** on the evaluation function or the
//!   closed-form stiffness.
//! * [`displacement_castigliano_fd`] — tip displacement as a central finite
//!   difference of the quadrature energy with respect to the tip load.
//!   Because the energy is exactly quadratic in the load, the central
//!   difference is exact up to rounding for any admissible step.
//! * [`stiffness_via_quadrature`] — compares the closed-form stiffness
//!   against `F / delta` from the two items above, reported as an
//!   [`OracleReport`].
//! * [`discrete_chain_stiffness`] — replaces the continuous arc by a chain
//!   of straight chord segments and sums exactly-integrated per-segment
//!   energies from raw position vectors. Shares **no** formula with the
//!   closed forms (not even the internal-moment expressions) and converges
//!   to the model stiffness from above as the segment count grows.
//! * [`moment_decomposition_oracle`] — recomputes the bending/torsion moment
//!   split at an arc section from explicit 3-vector cross products,
//!   validating [`crate::mechanics::internal_moments`] including signs.
//! * [`run_conformance`] — sweeps closed form vs. quadrature over a
//!   parameter grid ([`ConformanceGrid::coarse`] / [`ConformanceGrid::full`])
//!   and aggregates the worst relative error; the `*_with` variant accepts
//!   an injected candidate model so the machinery itself can be shown to
//!   catch a deliberately broken formula.

mod conformance;
mod decomposition;
mod discrete;
mod quadrature;
mod report;

pub use conformance::{
    run_conformance, run_conformance_with, seeded_random_configs, ConformanceCase,
    ConformanceGrid, ConformanceSummary,
};
pub use decomposition::moment_decomposition_oracle;
pub use discrete::discrete_chain_stiffness;
pub use quadrature::{displacement_castigliano_fd, strain_energy_quadrature, QuadratureSpec};
pub use report::{stiffness_via_quadrature, OracleReport};
