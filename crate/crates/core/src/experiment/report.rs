//! Summary-report assembly: grouping fitted stiffnesses by condition,
//! deriving enhancement and modulation ratios, ranking fingertip forces,
//! and rendering the result as text or CSV.

use crate::error::{ModelError, Result};
use crate::experiment::fit::StiffnessEstimate;
use crate::experiment::ratios::{enhancement_ratio, modulation_range, ModulationRange};
use crate::experiment::units::{AngleDeg, PressureKpa, Stiffness, WeightKg};
use crate::format::fmt_g;
use std::collections::BTreeSet;

/// One fingertip-force datapoint for the cross-device comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct FingertipRow {
    pub label: String,
    pub force_n: f64,
    /// Operating pressure at which the force was measured.
    pub pressure: PressureKpa,
}

/// A [`FingertipRow`] after ranking, flagged if it ties the table maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedFingertipRow {
    pub label: String,
    pub force_n: f64,
    pub pressure: PressureKpa,
    pub is_max: bool,
}

/// Sort fingertip rows by force (descending, label ascending on ties) and
/// flag every row whose force equals the maximum.
pub fn fingertip_table(rows: &[FingertipRow]) -> Result<Vec<RankedFingertipRow>> {
    if rows.is_empty() {
        return Err(ModelError::domain("fingertip.rows", "need at least one row to rank"));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.label.is_empty() {
            return Err(ModelError::domain(
                format!("fingertip.rows[{i}].label"),
                "label must be non-empty",
            ));
        }
        if !(row.force_n.is_finite() && row.force_n >= 0.0) {
            return Err(ModelError::domain(
                format!("fingertip.rows[{i}].force_N"),
                format!("force must be finite and >= 0, got {}", row.force_n),
            ));
        }
    }
    let mut sorted: Vec<FingertipRow> = rows.to_vec();
    sorted.sort_by(|a, b| {
        b.force_n.total_cmp(&a.force_n).then_with(|| a.label.cmp(&b.label))
    });
    let max_force = sorted[0].force_n;
    Ok(sorted
        .into_iter()
        .map(|r| RankedFingertipRow {
            is_max: r.force_n == max_force,
            label: r.label,
            force_n: r.force_n,
            pressure: r.pressure,
        })
        .collect())
}

/// Which tuning variable a modulation sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptVariable {
    Pressure,
    Weight,
}

impl SweptVariable {
    fn as_str(self) -> &'static str {
        match self {
            SweptVariable::Pressure => "pressure",
            SweptVariable::Weight => "weight",
        }
    }
}

/// One reinforced-vs-bare stiffness comparison at a matched bending angle
/// and pressure.
#[derive(Debug, Clone, PartialEq)]
pub struct EnhancementRow {
    pub bending_angle: AngleDeg,
    pub pressure: PressureKpa,
    pub with_id: String,
    pub without_id: String,
    pub k_with: Stiffness,
    pub k_without: Stiffness,
    /// `k_with / k_without`.
    pub ratio: f64,
}

/// One stiffness-modulation sweep: extrema of `k` over a single swept
/// tuning variable, at fixed bending angle and reinforcement state.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulationRow {
    pub bending_angle: AngleDeg,
    pub bls_present: bool,
    pub swept: SweptVariable,
    /// The pressure every estimate shares when weight is swept.
    pub held_pressure: Option<PressureKpa>,
    /// The weight every estimate shares when pressure is swept.
    pub held_weight: Option<WeightKg>,
    /// Condition id of (the first estimate attaining) the minimum stiffness.
    pub min_id: String,
    /// Condition id of (the first estimate attaining) the maximum stiffness.
    pub max_id: String,
    pub range: ModulationRange,
}

/// Everything the data-reduction pipeline derives from one measurement set.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryReport {
    /// Estimates grouped by bending angle (ascending), ids ascending inside
    /// each group.
    pub per_angle: Vec<(AngleDeg, Vec<StiffnessEstimate>)>,
    pub enhancements: Vec<EnhancementRow>,
    pub modulations: Vec<ModulationRow>,
    pub fingertip: Vec<RankedFingertipRow>,
}

/// Assemble the summary report.
///
/// Enhancement rows pair every reinforced estimate with every bare estimate
/// that shares its bending angle and pressure (weight is a tuning variable
/// and need not match). Modulation rows are built per (angle, reinforcement
/// state) from subgroups in which exactly one of {pressure, weight} takes at
/// least two distinct values while the other is constant. Pairs or sweeps
/// whose ratio is undefined (for example a zero bare stiffness) are skipped
/// rather than failing the whole report. `fingertip` may be empty, in which
/// case the comparison table is omitted.
pub fn build_report(
    estimates: &[StiffnessEstimate],
    fingertip: &[FingertipRow],
) -> Result<SummaryReport> {
    let mut seen = BTreeSet::new();
    for e in estimates {
        if !seen.insert(e.condition_id.as_str()) {
            return Err(ModelError::Inconsistent(format!(
                "duplicate condition id '{}' in report input",
                e.condition_id
            )));
        }
    }

    // Canonical order used by every section: angle, then id.
    let mut by_angle: Vec<&StiffnessEstimate> = estimates.iter().collect();
    by_angle.sort_by(|a, b| {
        a.condition
            .bending_angle
            .degrees()
            .total_cmp(&b.condition.bending_angle.degrees())
            .then_with(|| a.condition_id.cmp(&b.condition_id))
    });

    let mut per_angle: Vec<(AngleDeg, Vec<StiffnessEstimate>)> = Vec::new();
    for e in &by_angle {
        match per_angle.last_mut() {
            Some((angle, group)) if *angle == e.condition.bending_angle => {
                group.push((*e).clone())
            }
            _ => per_angle.push((e.condition.bending_angle, vec![(*e).clone()])),
        }
    }

    let enhancements = collect_enhancements(&by_angle);
    let modulations = collect_modulations(&per_angle);
    let fingertip = if fingertip.is_empty() { Vec::new() } else { fingertip_table(fingertip)? };

    Ok(SummaryReport { per_angle, enhancements, modulations, fingertip })
}

fn collect_enhancements(by_angle: &[&StiffnessEstimate]) -> Vec<EnhancementRow> {
    // Group by (angle, pressure); inherited order keeps ids ascending.
    let mut sorted = by_angle.to_vec();
    sorted.sort_by(|a, b| {
        a.condition
            .bending_angle
            .degrees()
            .total_cmp(&b.condition.bending_angle.degrees())
            .then(a.condition.pressure.kpa().total_cmp(&b.condition.pressure.kpa()))
            .then_with(|| a.condition_id.cmp(&b.condition_id))
    });

    let mut rows = Vec::new();
    let mut start = 0;
    while start < sorted.len() {
        let key = &sorted[start].condition;
        let mut end = start;
        while end < sorted.len()
            && sorted[end].condition.bending_angle == key.bending_angle
            && sorted[end].condition.pressure == key.pressure
        {
            end += 1;
        }
        let group = &sorted[start..end];
        for with_bls in group.iter().filter(|e| e.condition.bls_present) {
            for bare in group.iter().filter(|e| !e.condition.bls_present) {
                // An undefined ratio (zero bare stiffness) skips the pair;
                // both estimates still appear in the per-angle section.
                if let Ok(ratio) = enhancement_ratio(with_bls, bare) {
                    rows.push(EnhancementRow {
                        bending_angle: key.bending_angle,
                        pressure: key.pressure,
                        with_id: with_bls.condition_id.clone(),
                        without_id: bare.condition_id.clone(),
                        k_with: with_bls.k,
                        k_without: bare.k,
                        ratio,
                    });
                }
            }
        }
        start = end;
    }
    rows
}

fn collect_modulations(per_angle: &[(AngleDeg, Vec<StiffnessEstimate>)]) -> Vec<ModulationRow> {
    let mut rows = Vec::new();
    for (angle, group) in per_angle {
        for bls in [false, true] {
            let members: Vec<&StiffnessEstimate> =
                group.iter().filter(|e| e.condition.bls_present == bls).collect();
            // Pressure sweeps: one candidate subgroup per held weight.
            for sub in split_by(&members, |e| e.condition.weight.kg()) {
                push_sweep(&mut rows, *angle, bls, SweptVariable::Pressure, &sub);
            }
            // Weight sweeps: one candidate subgroup per held pressure.
            for sub in split_by(&members, |e| e.condition.pressure.kpa()) {
                push_sweep(&mut rows, *angle, bls, SweptVariable::Weight, &sub);
            }
        }
    }
    rows
}

/// Split `members` into subgroups on which `key` is constant, ordered by
/// ascending key (ids stay ascending inside each subgroup).
fn split_by<'a>(
    members: &[&'a StiffnessEstimate],
    key: impl Fn(&StiffnessEstimate) -> f64,
) -> Vec<Vec<&'a StiffnessEstimate>> {
    let mut sorted = members.to_vec();
    sorted.sort_by(|a, b| {
        key(a).total_cmp(&key(b)).then_with(|| a.condition_id.cmp(&b.condition_id))
    });
    let mut out: Vec<Vec<&StiffnessEstimate>> = Vec::new();
    for e in sorted {
        match out.last_mut() {
            Some(sub) if key(sub[0]) == key(e) => sub.push(e),
            _ => out.push(vec![e]),
        }
    }
    out
}

fn push_sweep(
    rows: &mut Vec<ModulationRow>,
    angle: AngleDeg,
    bls: bool,
    swept: SweptVariable,
    sub: &[&StiffnessEstimate],
) {
    if sub.len() < 2 {
        return;
    }
    let owned: Vec<StiffnessEstimate> = sub.iter().map(|e| (*e).clone()).collect();
    // A subgroup that does not actually vary the swept variable (or whose
    // minimum stiffness is zero) is not a sweep; skip it.
    let Ok(range) = modulation_range(&owned) else { return };
    let min_id = sub
        .iter()
        .find(|e| e.k.n_per_mm() == range.k_min.n_per_mm())
        .expect("extremum comes from this subgroup")
        .condition_id
        .clone();
    let max_id = sub
        .iter()
        .find(|e| e.k.n_per_mm() == range.k_max.n_per_mm())
        .expect("extremum comes from this subgroup")
        .condition_id
        .clone();
    let (held_pressure, held_weight) = match swept {
        SweptVariable::Pressure => (None, Some(sub[0].condition.weight)),
        SweptVariable::Weight => (Some(sub[0].condition.pressure), None),
    };
    rows.push(ModulationRow {
        bending_angle: angle,
        bls_present: bls,
        swept,
        held_pressure,
        held_weight,
        min_id,
        max_id,
        range,
    });
}

fn bls_word(bls: bool) -> &'static str {
    if bls {
        "reinforced"
    } else {
        "bare"
    }
}

/// Render the report as human-readable text (6 significant digits).
pub fn render_report_text(report: &SummaryReport) -> String {
    let g = |x: f64| fmt_g(x, 6);
    let mut out = String::new();

    out.push_str("== stiffness by bending angle ==\n");
    if report.per_angle.is_empty() {
        out.push_str("(none)\n");
    }
    for (angle, group) in &report.per_angle {
        out.push_str(&format!("angle {} deg:\n", g(angle.degrees())));
        for e in group {
            out.push_str(&format!(
                "  {}: k = {} N/mm at {} kPa, {} kg, {} ({} points, intercept {} N, r^2 = {}{})\n",
                e.condition_id,
                g(e.k.n_per_mm()),
                g(e.condition.pressure.kpa()),
                g(e.condition.weight.kg()),
                bls_word(e.condition.bls_present),
                e.n_points,
                g(e.intercept_n),
                g(e.r_squared),
                if e.constant_force { ", constant force" } else { "" },
            ));
        }
    }

    out.push_str("\n== reinforcement enhancement ==\n");
    if report.enhancements.is_empty() {
        out.push_str("(none)\n");
    }
    for row in &report.enhancements {
        out.push_str(&format!(
            "angle {} deg, {} kPa: k {} / {} = {}x ('{}' vs '{}')\n",
            g(row.bending_angle.degrees()),
            g(row.pressure.kpa()),
            g(row.k_with.n_per_mm()),
            g(row.k_without.n_per_mm()),
            g(row.ratio),
            row.with_id,
            row.without_id,
        ));
    }

    out.push_str("\n== stiffness modulation ==\n");
    if report.modulations.is_empty() {
        out.push_str("(none)\n");
    }
    for row in &report.modulations {
        let held = match (row.held_pressure, row.held_weight) {
            (Some(p), _) => format!("{} kPa held", g(p.kpa())),
            (_, Some(w)) => format!("{} kg held", g(w.kg())),
            _ => "nothing held".to_owned(),
        };
        out.push_str(&format!(
            "angle {} deg, {}, {} swept ({}): k in [{}, {}] N/mm, ratio {}x ('{}' to '{}')\n",
            g(row.bending_angle.degrees()),
            bls_word(row.bls_present),
            row.swept.as_str(),
            held,
            g(row.range.k_min.n_per_mm()),
            g(row.range.k_max.n_per_mm()),
            g(row.range.ratio),
            row.min_id,
            row.max_id,
        ));
    }

    if !report.fingertip.is_empty() {
        out.push_str("\n== fingertip force comparison ==\n");
        for row in &report.fingertip {
            out.push_str(&format!(
                "  {} N at {} kPa — {}{}\n",
                g(row.force_n),
                g(row.pressure.kpa()),
                row.label,
                if row.is_max { "  [max]" } else { "" },
            ));
        }
    }
    out
}

/// Header of the CSV mirror produced by [`render_report_csv`].
pub const REPORT_CSV_HEADER: &str = "section,angle_deg,condition_id,counterpart_id,bls_present,\
swept,pressure_kPa,weight_kg,k_N_per_mm,k_min_N_per_mm,k_max_N_per_mm,intercept_N,r_squared,\
n_points,ratio,label,force_N,is_max";

/// Render the report as a single CSV that mirrors every section of the text
/// report (9 significant digits). Each row's `section` field selects which
/// columns are populated; the rest are left empty.
pub fn render_report_csv(report: &SummaryReport) -> String {
    let g = |x: f64| fmt_g(x, 9);
    let bit = |b: bool| if b { "1" } else { "0" };
    let mut out = String::from(REPORT_CSV_HEADER);
    out.push('\n');

    for (angle, group) in &report.per_angle {
        for e in group {
            out.push_str(&format!(
                "stiffness,{},{},,{},,{},{},{},,,{},{},{},,,,\n",
                g(angle.degrees()),
                e.condition_id,
                bit(e.condition.bls_present),
                g(e.condition.pressure.kpa()),
                g(e.condition.weight.kg()),
                g(e.k.n_per_mm()),
                g(e.intercept_n),
                g(e.r_squared),
                e.n_points,
            ));
        }
    }
    for row in &report.enhancements {
        out.push_str(&format!(
            "enhancement,{},{},{},,,{},,,,,,,,{},,,\n",
            g(row.bending_angle.degrees()),
            row.with_id,
            row.without_id,
            g(row.pressure.kpa()),
            g(row.ratio),
        ));
    }
    for row in &report.modulations {
        let held_p = row.held_pressure.map(|p| g(p.kpa())).unwrap_or_default();
        let held_w = row.held_weight.map(|w| g(w.kg())).unwrap_or_default();
        out.push_str(&format!(
            "modulation,{},{},{},{},{},{},{},,{},{},,,,{},,,\n",
            g(row.bending_angle.degrees()),
            row.min_id,
            row.max_id,
            bit(row.bls_present),
            row.swept.as_str(),
            held_p,
            held_w,
            g(row.range.k_min.n_per_mm()),
            g(row.range.k_max.n_per_mm()),
            g(row.range.ratio),
        ));
    }
    for row in &report.fingertip {
        out.push_str(&format!(
            "fingertip,,,,,,{},,,,,,,,,{},{},{}\n",
            g(row.pressure.kpa()),
            row.label,
            g(row.force_n),
            bit(row.is_max),
        ));
    }
    out
}
