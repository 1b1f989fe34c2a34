//! Synthetic measurement-CSV generation for pipeline self-tests.
//!
//! Each fixture condition is an exact force law `F = slope * d + intercept`
//! optionally perturbed by seeded Gaussian noise. Every numeric field is
//! quantized to 9 significant digits (the serializer's precision) before the
//! records are built, so `generate -> parse -> serialize` reproduces the
//! byte-identical file and a zero-noise fixture round-trips its slopes
//! through the fitting pipeline at floating-point accuracy.

use crate::error::{ModelError, Result};
use crate::experiment::records::{serialize_measurements, MeasurementRecord};
use crate::experiment::units::{AngleDeg, PressureKpa, WeightKg};
use crate::format::fmt_g;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use std::collections::HashSet;

/// One measurement condition and its underlying linear force law.
#[derive(Debug, Clone, PartialEq)]
pub struct FixtureCondition {
    pub condition_id: String,
    pub bending_angle_deg: f64,
    pub pressure_kpa: f64,
    pub weight_kg: f64,
    pub bls_present: bool,
    /// True lateral stiffness of the condition; must be > 0.
    pub slope_n_per_mm: f64,
    /// Contact-preload force at zero displacement; must be >= 0.
    pub intercept_n: f64,
}

/// A complete fixture: conditions x displacements, noise level, RNG seed.
#[derive(Debug, Clone, PartialEq)]
pub struct FixtureSpec {
    pub conditions: Vec<FixtureCondition>,
    /// Displacements (mm) sampled for every condition; must be distinct
    /// after quantization to 9 significant digits.
    pub displacements_mm: Vec<f64>,
    /// Standard deviation of the Gaussian force noise (N). Zero disables
    /// the noise path entirely, so the output is an exact linear table.
    pub noise_sigma_n: f64,
    pub seed: u64,
}

impl FixtureSpec {
    /// The standard measurement protocol: 0, 1, ..., 10 mm.
    pub fn default_displacements() -> Vec<f64> {
        (0..=10).map(f64::from).collect()
    }
}

/// Round to 9 significant digits — exactly what the serializer prints.
fn quantize(x: f64) -> f64 {
    fmt_g(x, 9).parse().expect("fmt_g output is always a valid float literal")
}

fn check(cond: bool, field: &str, message: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(ModelError::domain(field, message))
    }
}

fn validate(spec: &FixtureSpec) -> Result<()> {
    check(
        !spec.conditions.is_empty(),
        "fixture.conditions",
        "need at least one condition".into(),
    )?;
    check(
        !spec.displacements_mm.is_empty(),
        "fixture.displacements_mm",
        "need at least one displacement".into(),
    )?;
    check(
        spec.noise_sigma_n.is_finite() && spec.noise_sigma_n >= 0.0,
        "fixture.noise_sigma_N",
        format!("noise sigma must be finite and >= 0, got {}", spec.noise_sigma_n),
    )?;

    let mut ids = HashSet::new();
    for (i, c) in spec.conditions.iter().enumerate() {
        let field = |name: &str| format!("fixture.conditions[{i}].{name}");
        check(
            !c.condition_id.is_empty() && !c.condition_id.contains([',', '\n', '\r']),
            &field("condition_id"),
            format!("id must be non-empty and free of delimiters, got '{}'", c.condition_id),
        )?;
        check(
            ids.insert(c.condition_id.as_str()),
            &field("condition_id"),
            format!("duplicate condition id '{}'", c.condition_id),
        )?;
        check(
            c.slope_n_per_mm.is_finite() && c.slope_n_per_mm > 0.0,
            &field("slope_N_per_mm"),
            format!("slope must be finite and > 0, got {}", c.slope_n_per_mm),
        )?;
        check(
            c.intercept_n.is_finite() && c.intercept_n >= 0.0,
            &field("intercept_N"),
            format!("intercept must be finite and >= 0, got {}", c.intercept_n),
        )?;
    }

    let mut seen = HashSet::new();
    for (i, &d) in spec.displacements_mm.iter().enumerate() {
        let field = format!("fixture.displacements_mm[{i}]");
        check(
            d.is_finite() && d >= 0.0,
            &field,
            format!("displacement must be finite and >= 0, got {d}"),
        )?;
        check(
            seen.insert(quantize(d).to_bits()),
            &field,
            format!("displacement {d} mm duplicates an earlier one at 9-digit precision"),
        )?;
    }
    Ok(())
}

/// Generate the measurement CSV described by `spec`.
///
/// Rows are emitted condition by condition in the given order, displacement
/// by displacement; noise (when enabled) is drawn in that same order from a
/// ChaCha8 stream seeded with `spec.seed`, so equal specs always produce
/// byte-identical output. Negative noisy forces are clamped to zero.
pub fn generate_fixtures(spec: &FixtureSpec) -> Result<String> {
    validate(spec)?;

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let noise = if spec.noise_sigma_n > 0.0 {
        Some(Normal::new(0.0, spec.noise_sigma_n).map_err(|e| {
            ModelError::domain("fixture.noise_sigma_N", format!("bad noise distribution: {e}"))
        })?)
    } else {
        None
    };

    let mut records = Vec::with_capacity(spec.conditions.len() * spec.displacements_mm.len());
    for c in &spec.conditions {
        let angle = AngleDeg::new(quantize(c.bending_angle_deg))?;
        let pressure = PressureKpa::new(quantize(c.pressure_kpa))?;
        let weight = WeightKg::new(quantize(c.weight_kg))?;
        for &d in &spec.displacements_mm {
            let d = quantize(d);
            let mut force = c.slope_n_per_mm * d + c.intercept_n;
            if let Some(n) = &noise {
                force += n.sample(&mut rng);
            }
            records.push(MeasurementRecord {
                condition_id: c.condition_id.clone(),
                bending_angle: angle,
                pressure,
                weight,
                bls_present: c.bls_present,
                displacement_mm: d,
                force_n: quantize(force.max(0.0)),
            });
        }
    }
    Ok(serialize_measurements(&records))
}
