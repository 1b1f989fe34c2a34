//! Measured-data reduction for actuator stiffness experiments.
//!
//! The pipeline: parse force–displacement CSV measurements
//! ([`parse_measurements`]), fit a per-condition stiffness
//! ([`fit_stiffness`]), derive with/without-reinforcement enhancement
//! ratios ([`enhancement_ratio`]) and min–max modulation ranges
//! ([`modulation_range`]), and assemble everything — optionally with a
//! fingertip-force comparison ([`fingertip_table`]) — into a
//! [`SummaryReport`] renderable as plain text and as a machine-readable
//! CSV mirror. [`generate_fixtures`] produces deterministic synthetic
//! measurement files for tests and demos.
//!
//! Quantities carry unit newtypes ([`units`]) so a stiffness can never be
//! confused with a pressure, weight, or angle at compile time.

mod fit;
mod fixtures;
mod ratios;
mod records;
mod report;
pub mod units;

pub use fit::{fit_all, fit_stiffness, ConditionKey, Estimator, FitOptions, StiffnessEstimate};
pub use fixtures::{generate_fixtures, FixtureCondition, FixtureSpec};
pub use ratios::{enhancement_ratio, modulation_range, ModulationRange};
pub use records::{parse_measurements, serialize_measurements, MeasurementRecord, MEASUREMENT_HEADER};
pub use report::{
    build_report, fingertip_table, render_report_csv, render_report_text, EnhancementRow,
    FingertipRow, ModulationRow, RankedFingertipRow, SummaryReport, SweptVariable,
};
pub use units::{AngleDeg, PressureKpa, Stiffness, WeightKg};
