//! Dimensionless evaluation function `F(alpha)` of the lateral-stiffness model.
//!
//! Carrying the tip-load strain energy
//!
//! ```text
//! U = Integral_0^alpha [ M_b^2/(2EI) + M_t^2/(2GI_p) ] * R dphi
//! ```
//!
//! through with `M_b = F R sin(phi)`, `M_t = F R (1 - cos(phi))`,
//! `G = E/(2(1+nu))`, `I_p = I(1+lambda^2)`, and `R = C/alpha`, then forming
//! `k = F / (dU/dF)` and normalizing by the straight-cantilever-style
//! prefactor `4EI/C^3`, yields `k = (4EI/C^3) * F(alpha)` with
//!
//! ```text
//! F(alpha)         = 1 / [ A_bending + 2(1+nu) * A_torsion / (1+lambda^2) ]
//! A_bending(alpha) = 2(alpha - sin(alpha)cos(alpha)) / alpha^3
//! A_torsion(alpha) = (6 alpha - 8 sin(alpha) + 2 sin(alpha)cos(alpha)) / alpha^3
//! ```
//!
//! Both `A` functions are 0/0 limits at `alpha = 0` and suffer catastrophic
//! cancellation for small angles, so below [`SMALL_ANGLE_THRESHOLD_RAD`] they
//! are evaluated from their Maclaurin series instead (see below). The limits
//! are `A_bending -> 4/3` and `A_torsion -> 0`, hence `F -> 3/4` and the
//! model recovers the classic straight cantilever `k = 3EI/C^3`.
//!
//! These closed forms are implementer-derived; `crate::oracles` validates
//! them against direct quadrature of the strain energy plus finite-difference
//! displacement, an independent chord-segment discretization, and a vector
//! cross-product decomposition of the internal moments.

use std::f64::consts::TAU;

use crate::error::{ModelError, Result};

/// Crossover angle between series and direct evaluation of the `A` functions.
///
/// Chosen so the two paths agree to about 1e-12 relative on `F(alpha)` at the
/// switch: the direct `A_torsion` numerator loses ~`1e-14/alpha^4` relative
/// accuracy to cancellation (about 1e-12 of `F` at 0.05 rad), while the
/// series truncation error with terms through `alpha^6` is ~`1e-4 * alpha^8`
/// (about 4e-15 of `F` at 0.05 rad). Pushing the threshold lower makes the
/// direct path the less accurate one at the boundary.
pub const SMALL_ANGLE_THRESHOLD_RAD: f64 = 0.05;

/// The evaluation function together with its bending/torsion weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationBreakdown {
    /// Bending angle this breakdown was evaluated at (rad).
    pub alpha_rad: f64,
    /// Bending weight `A_bending(alpha)`; tends to 4/3 as `alpha -> 0`.
    pub a_bending: f64,
    /// Torsion weight `A_torsion(alpha)`; exactly 0 at `alpha = 0`.
    pub a_torsion: f64,
    /// `F(alpha) = 1 / [A_bending + 2(1+nu) A_torsion / (1+lambda^2)]`.
    pub f_alpha: f64,
}

/// Evaluates `F(alpha)` and its weight breakdown for bending angle `alpha`
/// (rad, `[0, 2*pi]`), Poisson's ratio `nu` (`[0, 0.5)`), and section aspect
/// ratio `lambda` (> 0).
pub fn evaluation_function(alpha_rad: f64, nu: f64, lambda: f64) -> Result<EvaluationBreakdown> {
    if !(alpha_rad.is_finite() && (0.0..=TAU).contains(&alpha_rad)) {
        return Err(ModelError::domain(
            "alpha_rad",
            format!("must lie in [0, 2*pi], got {alpha_rad}"),
        ));
    }
    if !(nu.is_finite() && (0.0..0.5).contains(&nu)) {
        return Err(ModelError::domain("nu", format!("must lie in [0, 0.5), got {nu}")));
    }
    ModelError::require_positive("lambda", lambda)?;

    let (a_bending, a_torsion) = if alpha_rad < SMALL_ANGLE_THRESHOLD_RAD {
        a_functions_series(alpha_rad)
    } else {
        a_functions_direct(alpha_rad)
    };
    let f_alpha = 1.0 / (a_bending + 2.0 * (1.0 + nu) * a_torsion / (1.0 + lambda * lambda));
    Ok(EvaluationBreakdown { alpha_rad, a_bending, a_torsion, f_alpha })
}

/// Direct trigonometric evaluation; accurate away from `alpha ~ 0`.
fn a_functions_direct(alpha: f64) -> (f64, f64) {
    let (sin, cos) = alpha.sin_cos();
    let cube = alpha * alpha * alpha;
    let a_bending = 2.0 * (alpha - sin * cos) / cube;
    let a_torsion = (6.0 * alpha - 8.0 * sin + 2.0 * sin * cos) / cube;
    (a_bending, a_torsion)
}

/// Maclaurin series, exact limits at `alpha = 0`:
///
/// ```text
/// A_bending = 4/3 - 4a^2/15 + 8a^4/315 - 4a^6/2835 + O(a^8)
/// A_torsion =       a^2/5  -  a^4/42  +  a^6/720  + O(a^8)
/// ```
fn a_functions_series(alpha: f64) -> (f64, f64) {
    let a2 = alpha * alpha;
    let a_bending = 4.0 / 3.0 + a2 * (-4.0 / 15.0 + a2 * (8.0 / 315.0 - a2 * 4.0 / 2835.0));
    let a_torsion = a2 * (1.0 / 5.0 + a2 * (-1.0 / 42.0 + a2 / 720.0));
    (a_bending, a_torsion)
}
