//! Implementations of the six subcommands.
//!
//! Every function returns the process exit code on success and a
//! [`ModelError`] on failure; `main` maps errors to exit codes (invalid
//! input -> 2, math-domain -> 3, I/O -> 4). `verify` is the one command
//! that can succeed *as a program* while the check itself fails — it
//! returns `Ok(1)` on a tolerance breach so the caller exits 1.
//!
//! Formatting contract: human-facing numbers use 6 significant digits,
//! machine-facing CSV uses 9. The one exception is the break verdict's
//! threshold, which is pinned to three decimal places ("threshold 1.000 N")
//! so downstream scripts can match it verbatim.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use btsa_core::experiment::{
    build_report, fit_all, parse_measurements, render_report_csv, render_report_text, Estimator,
    FingertipRow, FitOptions, PressureKpa,
};
use btsa_core::explorer::{emit_csv, emit_svg, run_sweep, SweepContext, SweepSpec};
use btsa_core::oracles::{run_conformance, run_conformance_with, ConformanceGrid};
use btsa_core::{
    backbone_and_tip, break_check, evaluation_function, fmt_g, lateral_stiffness, ArcGeometry,
    BlsChain, ModelError, Result,
};
use clap::{Args, ValueEnum};

use crate::config::RunConfig;

/// Human-facing precision: 6 significant digits.
fn g6(x: f64) -> String {
    fmt_g(x, 6)
}

/// Machine-facing precision: 9 significant digits.
fn g9(x: f64) -> String {
    fmt_g(x, 9)
}

/// Converts a bending angle given in degrees at the CLI boundary to the
/// radians used internally. Accepts `[0, 360]`; 360 itself maps to exactly
/// `2*pi` because `f64::to_radians` rounds the product once.
pub(crate) fn bending_angle_rad(deg: f64) -> Result<f64> {
    if !(deg.is_finite() && (0.0..=360.0).contains(&deg)) {
        return Err(ModelError::domain(
            "alpha_deg",
            format!("bending angle must lie in [0, 360] degrees, got {deg}"),
        ));
    }
    Ok(deg.to_radians())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| ModelError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| ModelError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Model parameters that may be overridden from the command line. Flags
/// mirror the JSON config fields; a flag that is present wins over the file.
#[derive(Debug, Args)]
pub struct ModelOverrides {
    /// Young's modulus E in MPa (overrides material.E_MPa).
    #[arg(long = "E-MPa", value_name = "MPA")]
    pub e_mpa: Option<f64>,

    /// Poisson's ratio (overrides material.nu).
    #[arg(long, value_name = "RATIO")]
    pub nu: Option<f64>,

    /// Beam section height h in mm (overrides section.h_mm).
    #[arg(long, value_name = "MM")]
    pub h_mm: Option<f64>,

    /// Beam section width b in mm (overrides section.b_mm).
    #[arg(long, value_name = "MM")]
    pub b_mm: Option<f64>,

    /// Backbone arc length C in mm (overrides geometry.C_mm).
    #[arg(long = "C-mm", value_name = "MM")]
    pub c_mm: Option<f64>,

    /// Chain length L in mm (overrides chain.L_mm).
    #[arg(long = "L-mm", value_name = "MM")]
    pub l_mm: Option<f64>,

    /// Rope tension F_T in N (overrides chain.F_T_N).
    #[arg(long = "tension-N", value_name = "N")]
    pub tension_n: Option<f64>,

    /// Number of chain segments (overrides chain.N_segments).
    #[arg(long, value_name = "COUNT")]
    pub segments: Option<usize>,
}

impl ModelOverrides {
    /// Applies every present flag onto `cfg`, leaving the rest untouched.
    pub fn apply(&self, cfg: &mut RunConfig) {
        if let Some(v) = self.e_mpa {
            cfg.material.e_mpa = v;
        }
        if let Some(v) = self.nu {
            cfg.material.nu = v;
        }
        if let Some(v) = self.h_mm {
            cfg.section.h_mm = v;
        }
        if let Some(v) = self.b_mm {
            cfg.section.b_mm = v;
        }
        if let Some(v) = self.c_mm {
            cfg.geometry.c_mm = v;
        }
        if let Some(v) = self.l_mm {
            cfg.chain.l_mm = v;
        }
        if let Some(v) = self.tension_n {
            cfg.chain.tension_n = v;
        }
        if let Some(v) = self.segments {
            cfg.chain.segments = v;
        }
    }
}

// ---------------------------------------------------------------------------
// stiffness
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct StiffnessArgs {
    /// Bending angle in degrees, 0 to 360.
    #[arg(long, default_value_t = 0.0, value_name = "DEG")]
    pub alpha_deg: f64,

    /// Also write the result as a one-row CSV to this path.
    #[arg(long, value_name = "PATH")]
    pub out_csv: Option<PathBuf>,

    #[command(flatten)]
    pub overrides: ModelOverrides,
}

pub fn stiffness(cfg: &RunConfig, args: &StiffnessArgs) -> Result<i32> {
    let alpha_rad = bending_angle_rad(args.alpha_deg)?;
    let result = lateral_stiffness(
        &cfg.material()?,
        &cfg.section()?,
        &cfg.arc(alpha_rad)?,
        &cfg.chain()?,
    )?;

    println!("k = {} N/mm", g6(result.k_n_per_mm));
    println!(
        "F(alpha) = {} at alpha = {} deg",
        g6(result.f_alpha),
        g6(args.alpha_deg)
    );
    println!("break threshold = {} N", g6(result.break_force_n));
    if alpha_rad > PI {
        println!("note: alpha exceeds 180 deg; the stiffness model extrapolates beyond its validated bending range");
    }

    if let Some(path) = &args.out_csv {
        let csv = format!(
            "alpha_deg,alpha_rad,F_alpha,k_N_per_mm,break_threshold_N\n{},{},{},{},{}\n",
            g9(args.alpha_deg),
            g9(alpha_rad),
            g9(result.f_alpha),
            g9(result.k_n_per_mm),
            g9(result.break_force_n),
        );
        write_file(path, &csv)?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Aspect ratio lambda = h/b to include; repeat for several series
    /// (default: 0.25 to 2.0 in steps of 0.25).
    #[arg(long = "lambda", value_name = "RATIO")]
    pub lambda: Vec<f64>,

    /// Upper end of the bending-angle grid in degrees.
    #[arg(long, default_value_t = 180.0, value_name = "DEG")]
    pub alpha_max_deg: f64,

    /// Number of angle samples; the grid is alpha_max/samples .. alpha_max.
    #[arg(long, default_value_t = 64, value_name = "COUNT")]
    pub samples: usize,

    /// CSV output path (default: output.sweep_csv from the config).
    #[arg(long, value_name = "PATH")]
    pub out_csv: Option<PathBuf>,

    /// SVG output path (default: output.sweep_svg from the config).
    #[arg(long, value_name = "PATH")]
    pub out_svg: Option<PathBuf>,

    #[command(flatten)]
    pub overrides: ModelOverrides,
}

pub fn sweep(cfg: &RunConfig, args: &SweepArgs) -> Result<i32> {
    if args.samples < 2 {
        return Err(ModelError::domain(
            "samples",
            format!("need at least 2 angle samples, got {}", args.samples),
        ));
    }
    let alpha_max = bending_angle_rad(args.alpha_max_deg)?;
    if alpha_max <= 0.0 {
        return Err(ModelError::domain(
            "alpha_max_deg",
            format!("must be > 0, got {}", args.alpha_max_deg),
        ));
    }

    let mut spec = SweepSpec::standard(cfg.material.nu);
    if !args.lambda.is_empty() {
        spec.lambda_values = args.lambda.clone();
    }
    // First sample sits one grid step above zero: the dimensionless curve is
    // defined at alpha = 0 only as a limit, and the plot's interest is the
    // trend across the bend range, not the straight pole.
    spec.alpha_range = (alpha_max / args.samples as f64, alpha_max);
    spec.n_alpha = args.samples;

    let context = SweepContext::new(cfg.material()?, cfg.section.b_mm, cfg.geometry.c_mm)?;
    let table = run_sweep(&spec, Some(&context))?;

    let csv_path = args.out_csv.as_deref().unwrap_or(&cfg.output.sweep_csv);
    let svg_path = args.out_svg.as_deref().unwrap_or(&cfg.output.sweep_svg);
    emit_csv(&table, csv_path)?;
    emit_svg(&table, svg_path)?;

    println!(
        "swept {} aspect ratios x {} angles ({} rows)",
        table.series().len(),
        spec.n_alpha,
        table.rows().len()
    );
    println!("wrote {} and {}", csv_path.display(), svg_path.display());
    Ok(0)
}

// ---------------------------------------------------------------------------
// break
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct BreakArgs {
    /// Applied lateral tip force in N.
    #[arg(long = "force-N", value_name = "N")]
    pub force_n: f64,

    /// Rope tension F_T in N (default: chain.F_T_N).
    #[arg(long = "tension-N", value_name = "N")]
    pub tension_n: Option<f64>,

    /// Chain unit height h in mm (default: section.h_mm).
    #[arg(long, value_name = "MM")]
    pub height_mm: Option<f64>,

    /// Chain length L in mm (default: chain.L_mm).
    #[arg(long, value_name = "MM")]
    pub length_mm: Option<f64>,
}

pub fn break_verdict(cfg: &RunConfig, args: &BreakArgs) -> Result<i32> {
    let chain = BlsChain::new(
        args.height_mm.unwrap_or(cfg.section.h_mm),
        args.length_mm.unwrap_or(cfg.chain.l_mm),
        args.tension_n.unwrap_or(cfg.chain.tension_n),
        cfg.chain.segments,
    )?;
    let separated = break_check(args.force_n, &chain)?;
    let verdict = if separated { "separated" } else { "intact" };
    println!("{verdict}, threshold {:.3} N", chain.break_threshold());
    Ok(0)
}

// ---------------------------------------------------------------------------
// kinematics
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct KinematicsArgs {
    /// Bending angle in degrees, 0 to 360.
    #[arg(long, default_value_t = 0.0, value_name = "DEG")]
    pub alpha_deg: f64,

    /// Backbone arc length C in mm (default: geometry.C_mm).
    #[arg(long = "C-mm", value_name = "MM")]
    pub c_mm: Option<f64>,

    /// Number of backbone points including both ends (>= 2).
    #[arg(long, default_value_t = 65, value_name = "COUNT")]
    pub samples: usize,

    /// Write the backbone CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out_csv: Option<PathBuf>,
}

pub fn kinematics(cfg: &RunConfig, args: &KinematicsArgs) -> Result<i32> {
    let alpha_rad = bending_angle_rad(args.alpha_deg)?;
    let arc = ArcGeometry::new(args.c_mm.unwrap_or(cfg.geometry.c_mm), alpha_rad)?;
    let (points, tip) = backbone_and_tip(&arc, args.samples)?;

    let mut csv = String::from("x_mm,y_mm\n");
    for p in &points {
        csv.push_str(&g9(p.x_mm));
        csv.push(',');
        csv.push_str(&g9(p.y_mm));
        csv.push('\n');
    }

    match &args.out_csv {
        Some(path) => {
            write_file(path, &csv)?;
            println!("wrote {} backbone points to {}", points.len(), path.display());
            println!(
                "tip: x = {} mm, y = {} mm, heading = {} deg",
                g6(tip.x_mm),
                g6(tip.y_mm),
                g6(tip.heading_rad.to_degrees())
            );
        }
        None => print!("{csv}"),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

/// Slope estimator selection at the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EstimatorArg {
    /// Ordinary least squares over the fit window.
    Ols,
    /// Mean of incremental force/displacement ratios between consecutive
    /// points (robust cross-check for the least-squares slope).
    Pairwise,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Measurement CSV with header
    /// condition_id,bending_angle_deg,pressure_kPa,weight_kg,bls_present,displacement_mm,force_N.
    #[arg(value_name = "CSV")]
    pub csv: PathBuf,

    /// Displacement window for the linear fit, in mm, as LO:HI.
    #[arg(long, value_name = "LO:HI")]
    pub window_mm: Option<String>,

    /// Slope estimator.
    #[arg(long, value_enum, default_value_t = EstimatorArg::Ols)]
    pub estimator: EstimatorArg,

    /// Optional fingertip force table CSV with header label,force_N,pressure_kPa.
    #[arg(long, value_name = "PATH")]
    pub fingertip_csv: Option<PathBuf>,

    /// Write the text report here and a CSV mirror beside it with the same
    /// stem and extension .csv (default: output.report from the config;
    /// stdout only when neither is set).
    #[arg(long, value_name = "PATH")]
    pub report_out: Option<PathBuf>,
}

/// Parses a `LO:HI` displacement window.
pub(crate) fn parse_window(raw: &str) -> Result<(f64, f64)> {
    let invalid = |msg: String| ModelError::domain("window_mm", msg);
    let (lo_raw, hi_raw) = raw
        .split_once(':')
        .ok_or_else(|| invalid(format!("expected LO:HI, got '{raw}'")))?;
    let lo: f64 = lo_raw
        .trim()
        .parse()
        .map_err(|_| invalid(format!("lower bound is not a number: '{lo_raw}'")))?;
    let hi: f64 = hi_raw
        .trim()
        .parse()
        .map_err(|_| invalid(format!("upper bound is not a number: '{hi_raw}'")))?;
    Ok((lo, hi))
}

/// Header pinned for the side-table of fingertip force measurements.
pub(crate) const FINGERTIP_HEADER: &str = "label,force_N,pressure_kPa";

/// Parses the fingertip comparison table.
pub(crate) fn parse_fingertip_csv(text: &str) -> Result<Vec<FingertipRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end_matches('\r').trim() == FINGERTIP_HEADER => {}
        _ => {
            return Err(ModelError::domain(
                "fingertip_csv",
                format!("first line must be the header '{FINGERTIP_HEADER}'"),
            ))
        }
    }

    let mut rows = Vec::new();
    for (index, line) in lines {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let field = |msg: String| ModelError::domain(format!("fingertip_csv line {}", index + 1), msg);
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 3 {
            return Err(field(format!("expected 3 fields, got {}", parts.len())));
        }
        let force_n: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| field(format!("force_N is not a number: '{}'", parts[1])))?;
        let pressure_kpa: f64 = parts[2]
            .trim()
            .parse()
            .map_err(|_| field(format!("pressure_kPa is not a number: '{}'", parts[2])))?;
        rows.push(FingertipRow {
            label: parts[0].trim().to_string(),
            force_n,
            pressure: PressureKpa::new(pressure_kpa)?,
        });
    }
    Ok(rows)
}

pub fn analyze(cfg: &RunConfig, args: &AnalyzeArgs) -> Result<i32> {
    let records = parse_measurements(&read_file(&args.csv)?)?;

    let mut options = FitOptions::default();
    if let Some(window) = &args.window_mm {
        options.window_mm = parse_window(window)?;
    }
    options.estimator = match args.estimator {
        EstimatorArg::Ols => Estimator::OrdinaryLeastSquares,
        EstimatorArg::Pairwise => Estimator::PairwiseIncrementalMean,
    };

    let estimates = fit_all(&records, &options)?;
    let fingertip = match &args.fingertip_csv {
        Some(path) => parse_fingertip_csv(&read_file(path)?)?,
        None => Vec::new(),
    };
    let report = build_report(&estimates, &fingertip)?;

    print!("{}", render_report_text(&report));

    if let Some(path) = args.report_out.as_deref().or(cfg.output.report.as_deref()) {
        if path.extension().is_some_and(|ext| ext == "csv") {
            return Err(ModelError::domain(
                "report_out",
                "give the text report a non-.csv extension; its CSV mirror is written beside it",
            ));
        }
        let mirror = path.with_extension("csv");
        write_file(path, &render_report_text(&report))?;
        write_file(&mirror, &render_report_csv(&report))?;
        println!("wrote {} and {}", path.display(), mirror.display());
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// Conformance grid size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    /// 30 cases, quadrature n = 2000; finishes in well under ten seconds.
    Coarse,
    /// 384 cases, quadrature n = 10000; the exhaustive gate.
    Full,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which conformance grid to run.
    #[arg(long, value_enum, default_value_t = GridArg::Coarse)]
    pub grid: GridArg,

    /// Self-test hook: flip the sign of the torsion term in the candidate
    /// model. A healthy checker must then report FAIL and exit non-zero.
    #[arg(long, hide = true)]
    pub inject_torsion_sign_flip: bool,
}

pub fn verify(cfg: &RunConfig, args: &VerifyArgs) -> Result<i32> {
    let (mut grid, grid_name) = match args.grid {
        GridArg::Coarse => (ConformanceGrid::coarse(), "coarse"),
        GridArg::Full => (ConformanceGrid::full(), "full"),
    };
    grid.tolerance = cfg.tolerances.conformance_rel;

    let summary = if args.inject_torsion_sign_flip {
        run_conformance_with(&grid, |alpha, nu, lambda| {
            let terms = evaluation_function(alpha, nu, lambda)?;
            let torsion_weight = 2.0 * (1.0 + nu) / (1.0 + lambda * lambda);
            Ok(1.0 / (terms.a_bending - torsion_weight * terms.a_torsion))
        })?
    } else {
        run_conformance(&grid)?
    };

    let n_cases = summary.cases.len();
    println!(
        "grid: {grid_name} ({n_cases} cases, quadrature n = {})",
        grid.quadrature.n_intervals()
    );
    if args.inject_torsion_sign_flip {
        println!("self-test: torsion sign flip injected; this run is expected to FAIL");
    }
    println!("tolerance: {} relative", g6(summary.tolerance));
    if let Some(worst) = summary.worst_index.map(|i| &summary.cases[i]) {
        println!(
            "max relative error: {} at alpha = {} rad, lambda = {}, nu = {}",
            g6(summary.max_rel_error),
            g6(worst.alpha_rad),
            g6(worst.lambda),
            g6(worst.nu)
        );
    }

    if summary.pass {
        println!("verdict: PASS ({n_cases} of {n_cases} cases within tolerance)");
        Ok(0)
    } else {
        let breaches = summary
            .cases
            .iter()
            .filter(|case| {
                // NaN comparisons are false, so a NaN error must be counted
                // as a breach explicitly, never waved through.
                case.report.rel_error > summary.tolerance || case.report.rel_error.is_nan()
            })
            .count();
        println!("verdict: FAIL ({breaches} of {n_cases} cases breach tolerance)");
        Ok(1)
    }
}
