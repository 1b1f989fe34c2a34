//! Evaluation-function sweeps over aspect ratio and bending angle.

use std::f64::consts::{PI, TAU};

use crate::error::{ModelError, Result};
use crate::mechanics::evaluation_function;
use crate::mechanics::material::Material;

/// Grid description for a sweep: which aspect ratios, which angle window,
/// how many angle samples, and the Poisson ratio the evaluation uses.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Aspect ratios `h/b`; non-empty, all positive. Duplicates collapse.
    pub lambda_values: Vec<f64>,
    /// `[min, max]` bending-angle window in rad, within `[0, 2*pi]`, min < max.
    pub alpha_range: (f64, f64),
    /// Number of evenly spaced angle samples including both endpoints; >= 2.
    pub n_alpha: usize,
    /// Poisson ratio in `[0, 0.5)`.
    pub nu: f64,
}

impl SweepSpec {
    /// The customary presentation grid: aspect ratios 0.25 to 2.0 in steps
    /// of 0.25, 64 angle samples over `(0, pi]`.
    pub fn standard(nu: f64) -> Self {
        Self {
            lambda_values: (1..=8).map(|i| 0.25 * i as f64).collect(),
            alpha_range: (PI / 64.0, PI),
            n_alpha: 64,
            nu,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lambda_values.is_empty() {
            return Err(ModelError::domain("sweep.lambda_values", "must not be empty"));
        }
        for &l in &self.lambda_values {
            ModelError::require_positive("sweep.lambda_values", l)?;
        }
        let (lo, hi) = self.alpha_range;
        if !(lo.is_finite() && hi.is_finite() && (0.0..=TAU).contains(&lo) && hi <= TAU && lo < hi)
        {
            return Err(ModelError::domain(
                "sweep.alpha_range",
                format!("need 0 <= min < max <= 2*pi, got [{lo}, {hi}]"),
            ));
        }
        if self.n_alpha < 2 {
            return Err(ModelError::domain(
                "sweep.n_alpha",
                format!("need at least 2 samples, got {}", self.n_alpha),
            ));
        }
        if !(self.nu.is_finite() && (0.0..0.5).contains(&self.nu)) {
            return Err(ModelError::domain(
                "sweep.nu",
                format!("must lie in [0, 0.5), got {}", self.nu),
            ));
        }
        Ok(())
    }
}

/// Physical context that turns dimensionless sweep values into stiffnesses.
///
/// Each row's section is built from the shared width template: height
/// `h = lambda * b`, so one sweep compares sections of equal width whose
/// aspect ratio — not volume — is the variable.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepContext {
    material: Material,
    b_template_mm: f64,
    c_mm: f64,
}

impl SweepContext {
    pub fn new(material: Material, b_template_mm: f64, c_mm: f64) -> Result<Self> {
        ModelError::require_positive("sweep.b_template_mm", b_template_mm)?;
        ModelError::require_positive("sweep.C_mm", c_mm)?;
        Ok(Self { material, b_template_mm, c_mm })
    }
}

/// One sweep grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub alpha_rad: f64,
    pub f_alpha: f64,
    /// Present only when the sweep ran with a [`SweepContext`].
    pub k_n_per_mm: Option<f64>,
}

/// Sweep result: rows sorted by `(lambda, alpha)`, every `f_alpha` positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Validates the row invariants (canonical sort order, positive finite
    /// evaluation values).
    pub fn new(rows: Vec<SweepRow>) -> Result<Self> {
        for pair in rows.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if (b.lambda, b.alpha_rad) <= (a.lambda, a.alpha_rad) {
                return Err(ModelError::Inconsistent(format!(
                    "sweep rows must be strictly sorted by (lambda, alpha); \
                     ({}, {}) follows ({}, {})",
                    b.lambda, b.alpha_rad, a.lambda, a.alpha_rad
                )));
            }
        }
        for r in &rows {
            if !(r.f_alpha.is_finite() && r.f_alpha > 0.0) {
                return Err(ModelError::Inconsistent(format!(
                    "F(alpha) must be positive and finite, got {} at lambda {}, alpha {}",
                    r.f_alpha, r.lambda, r.alpha_rad
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows grouped by run of equal `lambda`, in ascending order.
    pub fn series(&self) -> Vec<(f64, &[SweepRow])> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.rows.len() {
            if i == self.rows.len() || self.rows[i].lambda != self.rows[start].lambda {
                out.push((self.rows[start].lambda, &self.rows[start..i]));
                start = i;
            }
        }
        out
    }
}

/// Evaluates the requested `lambda x alpha` grid. With a context, each row
/// also carries the physical stiffness `k = 4 E I(lambda) / C^3 * F(alpha)`.
///
/// The `alpha = 0` sample is well-defined: the evaluation function takes its
/// analytic straight-beam limit `F = 0.75` there, and the row is labeled
/// `alpha = 0` in emitted output.
pub fn run_sweep(spec: &SweepSpec, context: Option<&SweepContext>) -> Result<SweepTable> {
    spec.validate()?;
    let mut lambdas = spec.lambda_values.clone();
    lambdas.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
    lambdas.dedup();

    let (lo, hi) = spec.alpha_range;
    let n = spec.n_alpha;
    let alphas: Vec<f64> = (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect();

    let mut rows = Vec::with_capacity(lambdas.len() * n);
    for &lambda in &lambdas {
        let prefactor = context.map(|ctx| {
            let i_mm4 = (lambda * ctx.b_template_mm) * ctx.b_template_mm.powi(3) / 12.0;
            4.0 * ctx.material.young_modulus() * i_mm4 / ctx.c_mm.powi(3)
        });
        for &alpha in &alphas {
            let breakdown = evaluation_function(alpha, spec.nu, lambda)
                .map_err(|e| at_grid_point(e, lambda, alpha))?;
            rows.push(SweepRow {
                lambda,
                alpha_rad: alpha,
                f_alpha: breakdown.f_alpha,
                k_n_per_mm: prefactor.map(|p| p * breakdown.f_alpha),
            });
        }
    }
    SweepTable::new(rows)
}

/// Attaches the grid coordinates to a propagated core error.
fn at_grid_point(err: ModelError, lambda: f64, alpha: f64) -> ModelError {
    match err {
        ModelError::Domain { field, message } => ModelError::Domain {
            field: format!("sweep[lambda={lambda}, alpha={alpha}].{field}"),
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_rel;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn standard_grid_shape_and_trends() {
        let table = run_sweep(&SweepSpec::standard(0.35), None).unwrap();
        assert_eq!(table.rows().len(), 512, "8 aspect ratios x 64 angle samples");
        let series = table.series();
        assert_eq!(series.len(), 8);

        // Tall sections stiffen with angle across the whole window.
        let (lambda, tall) = series.last().unwrap();
        assert_eq!(*lambda, 2.0);
        assert!(tall.windows(2).all(|w| w[1].f_alpha > w[0].f_alpha));

        // Flat sections soften at first, but pass through a shallow minimum
        // near 2.38 rad and recover before pi — the curve is not monotone.
        let (lambda, flat) = &series[0];
        assert_eq!(*lambda, 0.25);
        let min_idx =
            flat.iter().enumerate().min_by(|a, b| a.1.f_alpha.total_cmp(&b.1.f_alpha)).unwrap().0;
        assert!(flat[..=min_idx].windows(2).all(|w| w[1].f_alpha < w[0].f_alpha));
        assert!(min_idx < flat.len() - 1, "minimum must be interior");
        assert!(flat.last().unwrap().f_alpha > flat[min_idx].f_alpha);
        assert!((flat[min_idx].alpha_rad - 2.378).abs() < 0.06);
    }

    #[test]
    fn two_sample_sweep_hits_the_known_endpoints() {
        let spec = SweepSpec {
            lambda_values: vec![1.0],
            alpha_range: (0.0, FRAC_PI_2),
            n_alpha: 2,
            nu: 0.35,
        };
        let table = run_sweep(&spec, None).unwrap();
        assert_eq!(table.rows().len(), 2);
        assert_eq!(table.rows()[0].alpha_rad, 0.0);
        assert_rel(table.rows()[0].f_alpha, 0.75, 1e-12, "straight-limit row");
        assert_rel(table.rows()[1].f_alpha, 0.7652027161619068, 1e-12, "quarter-turn row");
        assert!(table.rows().iter().all(|r| r.k_n_per_mm.is_none()));
    }

    #[test]
    fn context_attaches_consistent_stiffness() {
        let ctx =
            SweepContext::new(Material::new(2000.0, 0.35).unwrap(), 10.0, 100.0).unwrap();
        let spec = SweepSpec {
            lambda_values: vec![0.5, 1.0],
            alpha_range: (0.0, FRAC_PI_2),
            n_alpha: 3,
            nu: 0.35,
        };
        let table = run_sweep(&spec, Some(&ctx)).unwrap();
        for row in table.rows() {
            let i_mm4 = (row.lambda * 10.0) * 1000.0 / 12.0;
            let prefactor = 4.0 * 2000.0 * i_mm4 / 1e6;
            assert_eq!(row.k_n_per_mm.unwrap(), prefactor * row.f_alpha);
        }
        // lambda = 1, alpha = pi/2 reproduces the frozen stiffness value.
        let quarter = table
            .rows()
            .iter()
            .find(|r| r.lambda == 1.0 && r.alpha_rad == FRAC_PI_2)
            .unwrap();
        assert_rel(quarter.k_n_per_mm.unwrap(), 5.1013514410793788, 1e-12, "k with context");
    }

    #[test]
    fn rows_are_canonically_sorted_and_deduplicated() {
        let spec = SweepSpec {
            lambda_values: vec![2.0, 0.5, 2.0],
            alpha_range: (0.1, 1.0),
            n_alpha: 4,
            nu: 0.0,
        };
        let table = run_sweep(&spec, None).unwrap();
        assert_eq!(table.rows().len(), 8, "duplicate lambda collapses");
        let keys: Vec<_> = table.rows().iter().map(|r| (r.lambda, r.alpha_rad)).collect();
        let mut sorted = keys.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(keys, sorted);
        assert_eq!(table.rows().last().unwrap().alpha_rad, 1.0, "endpoint sampled exactly");
    }

    #[test]
    fn determinism() {
        let spec = SweepSpec::standard(0.35);
        assert_eq!(run_sweep(&spec, None).unwrap(), run_sweep(&spec, None).unwrap());
    }

    #[test]
    fn spec_validation() {
        let valid = SweepSpec {
            lambda_values: vec![1.0],
            alpha_range: (0.0, 1.0),
            n_alpha: 2,
            nu: 0.35,
        };
        let mut s = valid.clone();
        s.lambda_values.clear();
        assert!(run_sweep(&s, None).is_err());
        let mut s = valid.clone();
        s.lambda_values = vec![-1.0];
        assert!(run_sweep(&s, None).is_err());
        let mut s = valid.clone();
        s.alpha_range = (1.0, 0.5);
        assert!(run_sweep(&s, None).is_err());
        let mut s = valid.clone();
        s.alpha_range = (0.0, TAU + 0.1);
        assert!(run_sweep(&s, None).is_err());
        let mut s = valid.clone();
        s.n_alpha = 1;
        assert!(run_sweep(&s, None).is_err());
        let mut s = valid;
        s.nu = 0.5;
        assert!(run_sweep(&s, None).is_err());
    }

    #[test]
    fn table_invariants_are_enforced() {
        let row = |lambda: f64, alpha: f64, f: f64| SweepRow {
            lambda,
            alpha_rad: alpha,
            f_alpha: f,
            k_n_per_mm: None,
        };
        assert!(SweepTable::new(vec![row(1.0, 0.2, 0.7), row(1.0, 0.1, 0.7)]).is_err());
        assert!(SweepTable::new(vec![row(1.0, 0.1, 0.7), row(1.0, 0.1, 0.7)]).is_err());
        assert!(SweepTable::new(vec![row(1.0, 0.1, -0.5)]).is_err());
        assert!(SweepTable::new(vec![row(1.0, 0.1, 0.7), row(1.0, 0.2, 0.8)]).is_ok());
    }
}
