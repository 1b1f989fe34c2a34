//! JSON run configuration: defaults, file loading, and typed builders.
//!
//! One JSON document configures every subcommand; command-line flags
//! override file values, and the file overrides the built-in defaults
//! (E = 2000 MPa, nu = 0.35, 10 x 10 mm section, C = L = 100 mm,
//! F_T = 10 N, 10 chain segments). Unknown fields are rejected by name so
//! typos cannot silently fall back to defaults.

use btsa_core::{ArcGeometry, BeamSection, BlsChain, Material, ModelError, Result};
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub material: MaterialCfg,
    pub section: SectionCfg,
    pub geometry: GeometryCfg,
    pub chain: ChainCfg,
    pub tolerances: TolerancesCfg,
    pub output: OutputCfg,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MaterialCfg {
    /// Young's modulus in MPa.
    #[serde(rename = "E_MPa")]
    pub e_mpa: f64,
    /// Poisson's ratio.
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SectionCfg {
    /// Section height (loading direction), mm.
    pub h_mm: f64,
    /// Section width, mm.
    pub b_mm: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GeometryCfg {
    /// Backbone arc length, mm.
    #[serde(rename = "C_mm")]
    pub c_mm: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChainCfg {
    /// Total chain length, mm.
    #[serde(rename = "L_mm")]
    pub l_mm: f64,
    /// Rope tension clamping the segments, N.
    #[serde(rename = "F_T_N")]
    pub tension_n: f64,
    /// Number of chain segments.
    #[serde(rename = "N_segments")]
    pub segments: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TolerancesCfg {
    /// Per-case relative tolerance used by `verify`.
    pub conformance_rel: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputCfg {
    /// Default CSV path for `sweep`.
    pub sweep_csv: PathBuf,
    /// Default SVG path for `sweep`.
    pub sweep_svg: PathBuf,
    /// Default text-report path for `analyze` (mirror CSV lands beside it).
    pub report: Option<PathBuf>,
}

impl Default for MaterialCfg {
    fn default() -> Self {
        Self { e_mpa: 2000.0, nu: 0.35 }
    }
}
impl Default for SectionCfg {
    fn default() -> Self {
        Self { h_mm: 10.0, b_mm: 10.0 }
    }
}
impl Default for GeometryCfg {
    fn default() -> Self {
        Self { c_mm: 100.0 }
    }
}
impl Default for ChainCfg {
    fn default() -> Self {
        Self { l_mm: 100.0, tension_n: 10.0, segments: 10 }
    }
}
impl Default for TolerancesCfg {
    fn default() -> Self {
        Self { conformance_rel: 1e-6 }
    }
}
impl Default for OutputCfg {
    fn default() -> Self {
        Self {
            sweep_csv: PathBuf::from("sweep.csv"),
            sweep_svg: PathBuf::from("sweep.svg"),
            report: None,
        }
    }
}
/// Load the configuration: built-in defaults when `path` is `None`,
/// otherwise the JSON file with defaults filling absent fields.
///
/// An unreadable file is an I/O error (exit 4); unparseable JSON or an
/// unknown field is a validation error naming the problem (exit 2).
pub fn load(path: Option<&Path>) -> Result<RunConfig> {
    let Some(path) = path else {
        return Ok(RunConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|source| ModelError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text)
        .map_err(|e| ModelError::domain("config", format!("{}: {e}", path.display())))
}

impl RunConfig {
    /// Validated material; errors carry the `material.*` field path.
    pub fn material(&self) -> Result<Material> {
        Material::new(self.material.e_mpa, self.material.nu)
    }

    /// Validated cross-section; errors carry the `section.*` field path.
    pub fn section(&self) -> Result<BeamSection> {
        BeamSection::new(self.section.h_mm, self.section.b_mm)
    }

    /// Validated backbone arc at `alpha_rad`; errors carry `geometry.C_mm`.
    pub fn arc(&self, alpha_rad: f64) -> Result<ArcGeometry> {
        ArcGeometry::new(self.geometry.c_mm, alpha_rad)
    }

    /// Validated reinforcement chain. Its height is the section height: the
    /// chain is the section's load-bearing core, so there is no separate
    /// `chain.h_mm` knob.
    pub fn chain(&self) -> Result<BlsChain> {
        BlsChain::new(self.section.h_mm, self.chain.l_mm, self.chain.tension_n, self.chain.segments)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_describe_the_reference_actuator() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.material.e_mpa, 2000.0);
        assert_eq!(cfg.material.nu, 0.35);
        assert_eq!((cfg.section.h_mm, cfg.section.b_mm), (10.0, 10.0));
        assert_eq!(cfg.geometry.c_mm, 100.0);
        assert_eq!((cfg.chain.l_mm, cfg.chain.tension_n, cfg.chain.segments), (100.0, 10.0, 10));
        assert_eq!(cfg.tolerances.conformance_rel, 1e-6);
        assert_eq!(cfg.chain().unwrap().break_threshold(), 1.0);
    }

    #[test]
    fn partial_json_overrides_only_named_fields() {
        let cfg: RunConfig =
            serde_json::from_str(r#"{"material": {"E_MPa": 3500.0}, "geometry": {"C_mm": 80.0}}"#)
                .unwrap();
        assert_eq!(cfg.material.e_mpa, 3500.0);
        assert_eq!(cfg.material.nu, 0.35, "unnamed fields keep defaults");
        assert_eq!(cfg.geometry.c_mm, 80.0);
        assert_eq!(cfg.section.h_mm, 10.0);
    }

    #[test]
    fn unknown_fields_are_rejected_by_name() {
        let err = serde_json::from_str::<RunConfig>(r#"{"material": {"E_GPa": 2.0}}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("E_GPa"), "got: {err}");

        let err = serde_json::from_str::<RunConfig>(r#"{"materiel": {}}"#).unwrap_err().to_string();
        assert!(err.contains("materiel"), "got: {err}");
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let err = load(Some(Path::new("/nonexistent-dir-for-sure/cfg.json"))).unwrap_err();
        assert!(matches!(err, ModelError::Io { .. }), "got: {err}");
    }

    #[test]
    fn invalid_values_surface_with_field_paths() {
        let cfg: RunConfig =
            serde_json::from_str(r#"{"material": {"E_MPa": -1.0}}"#).unwrap();
        let err = cfg.material().unwrap_err().to_string();
        assert!(err.contains("material.E_MPa"), "got: {err}");

        let cfg: RunConfig = serde_json::from_str(r#"{"chain": {"L_mm": 5.0}}"#).unwrap();
        let err = cfg.chain().unwrap_err().to_string();
        assert!(err.contains("chain"), "got: {err}");
    }
}
