//! Exhaustive cross-section search under a packaging constraint.

use std::f64::consts::TAU;

use crate::error::{ModelError, Result};
use crate::explorer::sweep::{SweepRow, SweepTable};
use crate::mechanics::evaluation_function;
use crate::mechanics::material::Material;

/// What "best" means for a candidate section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchObjective {
    /// Maximize the worst-case stiffness over the whole `alpha_grid`.
    MaxMinStiffnessOverAlpha,
    /// Maximize the stiffness at one specific bending angle (rad).
    MaxStiffnessAtAlpha(f64),
}

/// Search space: a `b x h` box, a height cap, the angles that matter, and
/// the objective.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionSearchSpec {
    /// Width range `[min, max]` in mm, positive, min <= max.
    pub b_range_mm: (f64, f64),
    /// Height range `[min, max]` in mm, positive, min <= max.
    pub h_range_mm: (f64, f64),
    /// Packaging cap: candidate heights above this are infeasible.
    pub max_height_mm: f64,
    pub objective: SearchObjective,
    /// Bending angles (rad, within `[0, 2*pi]`) the objective and the
    /// reported stiffness profile are evaluated on.
    pub alpha_grid_rad: Vec<f64>,
    /// Grid resolution `(n_b, n_h)`; an axis whose range is a single point
    /// may use resolution 1, otherwise at least 2 (endpoints included).
    pub resolution: (usize, usize),
}

pub const DEFAULT_SEARCH_RESOLUTION: (usize, usize) = (64, 64);

impl SectionSearchSpec {
    /// Spec with the default 64x64 resolution.
    pub fn new(
        b_range_mm: (f64, f64),
        h_range_mm: (f64, f64),
        max_height_mm: f64,
        objective: SearchObjective,
        alpha_grid_rad: Vec<f64>,
    ) -> Self {
        Self {
            b_range_mm,
            h_range_mm,
            max_height_mm,
            objective,
            alpha_grid_rad,
            resolution: DEFAULT_SEARCH_RESOLUTION,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in
            [("search.b_range_mm", self.b_range_mm), ("search.h_range_mm", self.h_range_mm)]
        {
            ModelError::require_positive(name, lo)?;
            if !(hi.is_finite() && hi >= lo) {
                return Err(ModelError::domain(name, format!("need min <= max, got [{lo}, {hi}]")));
            }
        }
        ModelError::require_positive("search.max_height_mm", self.max_height_mm)?;
        if self.alpha_grid_rad.is_empty() {
            return Err(ModelError::domain("search.alpha_grid_rad", "must not be empty"));
        }
        for &a in &self.alpha_grid_rad {
            if !(a.is_finite() && (0.0..=TAU).contains(&a)) {
                return Err(ModelError::domain(
                    "search.alpha_grid_rad",
                    format!("angles must lie in [0, 2*pi], got {a}"),
                ));
            }
        }
        if let SearchObjective::MaxStiffnessAtAlpha(a) = self.objective {
            if !(a.is_finite() && (0.0..=TAU).contains(&a)) {
                return Err(ModelError::domain(
                    "search.objective.alpha_rad",
                    format!("target angle must lie in [0, 2*pi], got {a}"),
                ));
            }
        }
        for (name, n, (lo, hi)) in [
            ("search.resolution.n_b", self.resolution.0, self.b_range_mm),
            ("search.resolution.n_h", self.resolution.1, self.h_range_mm),
        ] {
            if n == 0 || (n == 1 && lo < hi) {
                return Err(ModelError::domain(
                    name,
                    format!("need >= 2 samples to span [{lo}, {hi}], got {n}"),
                ));
            }
        }
        Ok(())
    }
}

/// Winning section with its objective value and stiffness-vs-angle profile.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionChoice {
    pub h_mm: f64,
    pub b_mm: f64,
    pub objective_value_n_per_mm: f64,
    /// `k(alpha)` rows of the winner over the (sorted, deduplicated)
    /// `alpha_grid`, stiffness attached.
    pub profile: SweepTable,
}

/// Search result: either a winner or an explicit explanation why the
/// feasible set is empty. Infeasibility is a result, not an error.
#[derive(Debug, Clone, PartialEq)]
pub enum SectionSearchOutcome {
    Found(SectionChoice),
    Infeasible { reason: String },
}

fn linspace((lo, hi): (f64, f64), n: usize) -> Vec<f64> {
    if n == 1 || lo == hi {
        return vec![lo];
    }
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Exhaustive grid search over the `b x h` box (heights capped by
/// `max_height_mm`) for the section maximizing the objective.
///
/// Deterministic tie-breaking on exactly equal objective values: prefer the
/// larger second moment `I = h b^3 / 12`, then the smaller height, then the
/// smaller width.
pub fn find_best_section(
    spec: &SectionSearchSpec,
    material: &Material,
    c_mm: f64,
) -> Result<SectionSearchOutcome> {
    spec.validate()?;
    ModelError::require_positive("search.C_mm", c_mm)?;

    let mut alphas = spec.alpha_grid_rad.clone();
    alphas.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
    alphas.dedup();

    let heights: Vec<f64> = linspace(spec.h_range_mm, spec.resolution.1)
        .into_iter()
        .filter(|&h| h <= spec.max_height_mm)
        .collect();
    if heights.is_empty() {
        return Ok(SectionSearchOutcome::Infeasible {
            reason: format!(
                "no height in [{}, {}] mm satisfies the max_height cap of {} mm",
                spec.h_range_mm.0, spec.h_range_mm.1, spec.max_height_mm
            ),
        });
    }
    let widths = linspace(spec.b_range_mm, spec.resolution.0);

    let nu = material.poisson_ratio();
    let e = material.young_modulus();
    let k_at = |h: f64, b: f64, alpha: f64| -> Result<f64> {
        let f = evaluation_function(alpha, nu, h / b)?.f_alpha;
        Ok(4.0 * e * (h * b.powi(3) / 12.0) / c_mm.powi(3) * f)
    };
    let objective_of = |h: f64, b: f64| -> Result<f64> {
        match spec.objective {
            SearchObjective::MaxStiffnessAtAlpha(a) => k_at(h, b, a),
            SearchObjective::MaxMinStiffnessOverAlpha => {
                let mut worst = f64::INFINITY;
                for &a in &alphas {
                    worst = worst.min(k_at(h, b, a)?);
                }
                Ok(worst)
            }
        }
    };

    let mut best: Option<(f64, f64, f64)> = None; // (value, h, b)
    for &h in &heights {
        for &b in &widths {
            let value = objective_of(h, b)?;
            let better = match best {
                None => true,
                Some((bv, bh, bb)) => {
                    if value != bv {
                        value > bv
                    } else {
                        let (i_new, i_old) = (h * b.powi(3) / 12.0, bh * bb.powi(3) / 12.0);
                        if i_new != i_old {
                            i_new > i_old
                        } else if h != bh {
                            h < bh
                        } else {
                            b < bb
                        }
                    }
                }
            };
            if better {
                best = Some((value, h, b));
            }
        }
    }

    let (value, h, b) = best.expect("feasible set verified non-empty");
    let lambda = h / b;
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in &alphas {
        rows.push(SweepRow {
            lambda,
            alpha_rad: alpha,
            f_alpha: evaluation_function(alpha, nu, lambda)?.f_alpha,
            k_n_per_mm: Some(k_at(h, b, alpha)?),
        });
    }
    Ok(SectionSearchOutcome::Found(SectionChoice {
        h_mm: h,
        b_mm: b,
        objective_value_n_per_mm: value,
        profile: SweepTable::new(rows)?,
    }))
}
