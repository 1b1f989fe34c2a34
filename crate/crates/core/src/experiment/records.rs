//! Measurement CSV parsing and serialization.
//!
//! Format contract: UTF-8, LF line endings, decimal points (never commas),
//! exact header [`MEASUREMENT_HEADER`], `bls_present` encoded as `0`/`1`.
//! Parsing is all-or-nothing — the first problem aborts with a positional
//! error naming the line, the column, and the reason.

use std::collections::HashSet;

use crate::error::{ModelError, Result};
use crate::experiment::units::{AngleDeg, PressureKpa, WeightKg};
use crate::format::fmt_g;

/// Required header, with exact column order.
pub const MEASUREMENT_HEADER: &str =
    "condition_id,bending_angle_deg,pressure_kPa,weight_kg,bls_present,displacement_mm,force_N";

/// One force–displacement sample under one experimental condition.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    pub condition_id: String,
    pub bending_angle: AngleDeg,
    pub pressure: PressureKpa,
    pub weight: WeightKg,
    pub bls_present: bool,
    /// Lateral (or bending-direction) tip displacement, mm, >= 0.
    pub displacement_mm: f64,
    /// Measured restoring force, N, >= 0.
    pub force_n: f64,
}

fn positional(line: usize, column: &str, reason: impl Into<String>) -> ModelError {
    ModelError::domain(format!("measurements line {line}, column {column}"), reason)
}

fn parse_number(line: usize, column: &str, raw: &str) -> Result<f64> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| positional(line, column, format!("not a number: '{raw}'")))?;
    if !value.is_finite() {
        return Err(positional(line, column, format!("must be finite, got '{raw}'")));
    }
    Ok(value)
}

/// Parses a full measurement CSV document. Every row parses or the first
/// positional error is returned; there is no partial acceptance.
pub fn parse_measurements(source: &str) -> Result<Vec<MeasurementRecord>> {
    let mut lines = source.lines().enumerate();
    let header = match lines.next() {
        Some((_, h)) => h.trim_end_matches('\r'),
        None => {
            return Err(ModelError::domain("measurements line 1", "empty document, header expected"))
        }
    };
    if header != MEASUREMENT_HEADER {
        let found: HashSet<&str> = header.split(',').map(str::trim).collect();
        for required in MEASUREMENT_HEADER.split(',') {
            if !found.contains(required) {
                return Err(ModelError::domain(
                    "measurements line 1",
                    format!("missing column '{required}'"),
                ));
            }
        }
        return Err(ModelError::domain(
            "measurements line 1",
            format!("header must be exactly '{MEASUREMENT_HEADER}', got '{header}'"),
        ));
    }

    let mut records = Vec::new();
    let mut seen: HashSet<(String, u64)> = HashSet::new();
    for (idx, raw_line) in lines {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(ModelError::domain(
                format!("measurements line {line_no}"),
                format!("expected 7 fields, got {}", fields.len()),
            ));
        }

        let condition_id = fields[0].trim();
        if condition_id.is_empty() {
            return Err(positional(line_no, "condition_id", "must not be empty"));
        }
        let angle = parse_number(line_no, "bending_angle_deg", fields[1])?;
        let bending_angle = AngleDeg::new(angle)
            .map_err(|e| positional(line_no, "bending_angle_deg", e.to_string()))?;
        let pressure = PressureKpa::new(parse_number(line_no, "pressure_kPa", fields[2])?)
            .map_err(|e| positional(line_no, "pressure_kPa", e.to_string()))?;
        let weight = WeightKg::new(parse_number(line_no, "weight_kg", fields[3])?)
            .map_err(|e| positional(line_no, "weight_kg", e.to_string()))?;
        let bls_present = match fields[4].trim() {
            "0" => false,
            "1" => true,
            other => {
                return Err(positional(
                    line_no,
                    "bls_present",
                    format!("must be 0 or 1, got '{other}'"),
                ))
            }
        };
        let displacement_mm = parse_number(line_no, "displacement_mm", fields[5])?;
        if displacement_mm < 0.0 {
            return Err(positional(
                line_no,
                "displacement_mm",
                format!("must be >= 0, got {displacement_mm}"),
            ));
        }
        let force_n = parse_number(line_no, "force_N", fields[6])?;
        if force_n < 0.0 {
            return Err(positional(line_no, "force_N", format!("must be >= 0, got {force_n}")));
        }

        if !seen.insert((condition_id.to_owned(), displacement_mm.to_bits())) {
            return Err(ModelError::domain(
                format!("measurements line {line_no}"),
                format!(
                    "duplicate displacement {displacement_mm} mm for condition '{condition_id}'"
                ),
            ));
        }

        records.push(MeasurementRecord {
            condition_id: condition_id.to_owned(),
            bending_angle,
            pressure,
            weight,
            bls_present,
            displacement_mm,
            force_n,
        });
    }
    Ok(records)
}

/// Renders records back to the CSV contract (LF endings, trailing newline,
/// 9-significant-digit numbers). Parsing its output reproduces the records;
/// for records whose numbers are fixed points of the 9-digit formatting —
/// everything [`crate::experiment::generate_fixtures`] emits — the
/// round-trip is byte-identical.
pub fn serialize_measurements(records: &[MeasurementRecord]) -> String {
    let mut out = String::from(MEASUREMENT_HEADER);
    out.push('\n');
    for r in records {
        debug_assert!(
            !r.condition_id.contains([',', '\n', '\r']),
            "condition ids must stay delimiter-free"
        );
        out.push_str(&r.condition_id);
        out.push(',');
        out.push_str(&fmt_g(r.bending_angle.degrees(), 9));
        out.push(',');
        out.push_str(&fmt_g(r.pressure.kpa(), 9));
        out.push(',');
        out.push_str(&fmt_g(r.weight.kg(), 9));
        out.push(',');
        out.push(if r.bls_present { '1' } else { '0' });
        out.push(',');
        out.push_str(&fmt_g(r.displacement_mm, 9));
        out.push(',');
        out.push_str(&fmt_g(r.force_n, 9));
        out.push('\n');
    }
    out
}
