//! Stiffness enhancement and modulation ratios.

use crate::error::{ModelError, Result};
use crate::experiment::fit::StiffnessEstimate;
use crate::experiment::units::Stiffness;

/// `k_with / k_without` for a matched pair of estimates measured with and
/// without the reinforcement chain.
///
/// Preconditions: `with_bls` really is the reinforced condition and
/// `without_bls` the bare one; both share the same bending angle and
/// pressure; the bare stiffness is strictly positive.
pub fn enhancement_ratio(
    with_bls: &StiffnessEstimate,
    without_bls: &StiffnessEstimate,
) -> Result<f64> {
    if !with_bls.condition.bls_present || without_bls.condition.bls_present {
        return Err(ModelError::domain(
            "enhancement.bls_present",
            format!(
                "need a reinforced/bare pair, got bls_present = {} ('{}') vs {} ('{}')",
                with_bls.condition.bls_present,
                with_bls.condition_id,
                without_bls.condition.bls_present,
                without_bls.condition_id
            ),
        ));
    }
    let (a, b) = (&with_bls.condition, &without_bls.condition);
    if a.bending_angle != b.bending_angle {
        return Err(ModelError::domain(
            "enhancement.bending_angle_deg",
            format!(
                "conditions must match, got {} vs {}",
                a.bending_angle.degrees(),
                b.bending_angle.degrees()
            ),
        ));
    }
    if a.pressure != b.pressure {
        return Err(ModelError::domain(
            "enhancement.pressure_kPa",
            format!("conditions must match, got {} vs {}", a.pressure.kpa(), b.pressure.kpa()),
        ));
    }
    if without_bls.k.n_per_mm() <= 0.0 {
        return Err(ModelError::domain(
            "enhancement.k_without",
            format!(
                "bare-condition stiffness must be > 0 for a ratio, got {} ('{}')",
                without_bls.k.n_per_mm(),
                without_bls.condition_id
            ),
        ));
    }
    Ok(with_bls.k / without_bls.k)
}

/// Extrema of a stiffness sweep and their ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationRange {
    pub k_min: Stiffness,
    pub k_max: Stiffness,
    /// `k_max / k_min`.
    pub ratio: f64,
}

/// Stiffness modulation over one swept tuning variable (pressure or rope
/// weight).
///
/// Preconditions: at least two estimates; all share the bending angle and
/// reinforcement state; exactly one of {pressure, weight} varies (with at
/// least two distinct values) while the other is constant; the minimum
/// stiffness is strictly positive so the ratio is defined.
pub fn modulation_range(estimates: &[StiffnessEstimate]) -> Result<ModulationRange> {
    if estimates.len() < 2 {
        return Err(ModelError::domain(
            "modulation.estimates",
            format!("need at least 2 estimates to span a range, got {}", estimates.len()),
        ));
    }
    let first = &estimates[0].condition;
    for e in estimates {
        if e.condition.bending_angle != first.bending_angle
            || e.condition.bls_present != first.bls_present
        {
            return Err(ModelError::Inconsistent(format!(
                "modulation sweep mixes bending angles or reinforcement states \
                 ('{}' vs '{}')",
                estimates[0].condition_id, e.condition_id
            )));
        }
    }
    let pressure_varies = estimates.iter().any(|e| e.condition.pressure != first.pressure);
    let weight_varies = estimates.iter().any(|e| e.condition.weight != first.weight);
    match (pressure_varies, weight_varies) {
        (true, true) => {
            return Err(ModelError::Inconsistent(
                "modulation sweep varies both pressure and weight; sweep exactly one".into(),
            ))
        }
        (false, false) => {
            return Err(ModelError::Inconsistent(
                "modulation sweep holds every tuning variable constant; nothing is swept".into(),
            ))
        }
        _ => {}
    }

    let k_min = estimates.iter().map(|e| e.k).min_by(|a, b| a.n_per_mm().total_cmp(&b.n_per_mm()));
    let k_max = estimates.iter().map(|e| e.k).max_by(|a, b| a.n_per_mm().total_cmp(&b.n_per_mm()));
    let (k_min, k_max) = (k_min.expect("len >= 2"), k_max.expect("len >= 2"));
    if k_min.n_per_mm() <= 0.0 {
        return Err(ModelError::domain(
            "modulation.k_min",
            format!("ratio undefined for minimum stiffness {} N/mm", k_min.n_per_mm()),
        ));
    }
    Ok(ModulationRange { k_min, k_max, ratio: k_max / k_min })
}
