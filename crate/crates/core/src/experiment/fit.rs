//! Per-condition stiffness estimation from force–displacement samples.

use std::collections::BTreeMap;

use crate::error::{ModelError, Result};
use crate::experiment::records::MeasurementRecord;
use crate::experiment::units::{AngleDeg, PressureKpa, Stiffness, WeightKg};

/// The experimental condition an estimate belongs to (everything except the
/// sample values themselves).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionKey {
    pub bending_angle: AngleDeg,
    pub pressure: PressureKpa,
    pub weight: WeightKg,
    pub bls_present: bool,
}

impl ConditionKey {
    fn of(record: &MeasurementRecord) -> Self {
        Self {
            bending_angle: record.bending_angle,
            pressure: record.pressure,
            weight: record.weight,
            bls_present: record.bls_present,
        }
    }
}

/// Slope choice for [`fit_stiffness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    /// Ordinary least squares of force on displacement — the standard
    /// estimator. The intercept is retained rather than forced through the
    /// origin, because real rigs carry contact-preload offsets.
    OrdinaryLeastSquares,
    /// Mean of consecutive incremental ratios `dF/dd` over the
    /// displacement-sorted samples; offered for comparison with rigs that
    /// report stepwise increments.
    PairwiseIncrementalMean,
}

/// Fit configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    /// Displacement window `[lo, hi]` (mm) the fit uses; samples outside
    /// are ignored. The default matches the 0–10 mm measurement protocol.
    pub window_mm: (f64, f64),
    pub estimator: Estimator,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self { window_mm: (0.0, 10.0), estimator: Estimator::OrdinaryLeastSquares }
    }
}

impl FitOptions {
    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.window_mm;
        if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi) {
            return Err(ModelError::domain(
                "fit.window_mm",
                format!("need 0 <= lo < hi, got [{lo}, {hi}]"),
            ));
        }
        Ok(())
    }
}

/// Fitted stiffness for one condition.
#[derive(Debug, Clone, PartialEq)]
pub struct StiffnessEstimate {
    pub condition_id: String,
    pub condition: ConditionKey,
    pub k: Stiffness,
    /// Force-axis intercept of the fitted line, N.
    pub intercept_n: f64,
    /// Coefficient of determination, clamped to `[0, 1]`; 0 for the
    /// degenerate constant-force case.
    pub r_squared: f64,
    /// Samples inside the window that the fit used.
    pub n_points: usize,
    /// True when the force showed no variation at all — the zero-slope,
    /// `r_squared = 0` estimate is then a flag, not a measurement.
    pub constant_force: bool,
}

/// Fits one condition's samples. All records must share the same
/// `condition_id` and condition fields; the window must retain at least
/// three distinct displacements.
pub fn fit_stiffness(
    records: &[MeasurementRecord],
    options: &FitOptions,
) -> Result<StiffnessEstimate> {
    options.validate()?;
    let first = records
        .first()
        .ok_or_else(|| ModelError::domain("fit.records", "no samples supplied"))?;
    let key = ConditionKey::of(first);
    for r in records {
        if r.condition_id != first.condition_id {
            return Err(ModelError::Inconsistent(format!(
                "fit input mixes conditions '{}' and '{}'",
                first.condition_id, r.condition_id
            )));
        }
        if ConditionKey::of(r) != key {
            return Err(ModelError::Inconsistent(format!(
                "condition '{}' has contradictory metadata across rows",
                first.condition_id
            )));
        }
    }

    let (lo, hi) = options.window_mm;
    let mut points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| (lo..=hi).contains(&r.displacement_mm))
        .map(|r| (r.displacement_mm, r.force_n))
        .collect();
    points.sort_by(|a, b| a.partial_cmp(b).expect("parsed values are finite"));

    let mut distinct = 0usize;
    for (i, p) in points.iter().enumerate() {
        if i == 0 || p.0 != points[i - 1].0 {
            distinct += 1;
        }
    }
    if distinct < 3 {
        return Err(ModelError::domain(
            "fit.records",
            format!(
                "condition '{}' needs >= 3 distinct displacements within [{lo}, {hi}] mm, got {distinct}",
                first.condition_id
            ),
        ));
    }

    let n = points.len() as f64;
    let d_mean = points.iter().map(|p| p.0).sum::<f64>() / n;
    let f_mean = points.iter().map(|p| p.1).sum::<f64>() / n;
    let ss_dd: f64 = points.iter().map(|p| (p.0 - d_mean).powi(2)).sum();
    if ss_dd == 0.0 {
        return Err(ModelError::domain(
            "fit.records",
            format!("condition '{}' has zero displacement variance", first.condition_id),
        ));
    }

    let slope = match options.estimator {
        Estimator::OrdinaryLeastSquares => {
            let ss_df: f64 = points.iter().map(|p| (p.0 - d_mean) * (p.1 - f_mean)).sum();
            ss_df / ss_dd
        }
        Estimator::PairwiseIncrementalMean => {
            let mut ratios = Vec::with_capacity(points.len().saturating_sub(1));
            for w in points.windows(2) {
                let dd = w[1].0 - w[0].0;
                if dd == 0.0 {
                    return Err(ModelError::domain(
                        "fit.records",
                        format!(
                            "condition '{}' repeats displacement {} mm; incremental ratios need strictly increasing displacements",
                            first.condition_id, w[0].0
                        ),
                    ));
                }
                ratios.push((w[1].1 - w[0].1) / dd);
            }
            ratios.iter().sum::<f64>() / ratios.len() as f64
        }
    };
    let intercept = f_mean - slope * d_mean;

    let ss_tot: f64 = points.iter().map(|p| (p.1 - f_mean).powi(2)).sum();
    let (r_squared, constant_force) = if ss_tot == 0.0 {
        (0.0, true)
    } else {
        let ss_res: f64 =
            points.iter().map(|p| (p.1 - (slope * p.0 + intercept)).powi(2)).sum();
        ((1.0 - ss_res / ss_tot).clamp(0.0, 1.0), false)
    };

    Ok(StiffnessEstimate {
        condition_id: first.condition_id.clone(),
        condition: key,
        k: Stiffness::new(if constant_force { 0.0 } else { slope })?,
        intercept_n: if constant_force { f_mean } else { intercept },
        r_squared,
        n_points: points.len(),
        constant_force,
    })
}

/// Groups records by `condition_id` and fits each group, returning the
/// estimates sorted by id.
pub fn fit_all(
    records: &[MeasurementRecord],
    options: &FitOptions,
) -> Result<Vec<StiffnessEstimate>> {
    let mut groups: BTreeMap<&str, Vec<MeasurementRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(&r.condition_id).or_default().push(r.clone());
    }
    groups.values().map(|g| fit_stiffness(g, options)).collect()
}
