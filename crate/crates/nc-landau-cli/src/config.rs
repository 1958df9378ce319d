//! Effective run configuration: defaults, optional JSON config file, flag
//! overrides, in that order. The JSON keys mirror the flag names, so a
//! `--print-config` dump can be fed straight back via `--config`.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use nc_landau_core::constants::ELECTRON_MASS;
use nc_landau_core::landau::{GaugeChoice, NormalizationMode, PhysicalParams, SignConvention};

/// Environment variable consulted for a config path when `--config` is
/// absent.
pub const CONFIG_ENV: &str = "NC_LANDAU_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum GaugeArg {
    #[value(name = "symmetric")]
    #[serde(rename = "symmetric")]
    Symmetric,
    #[value(name = "landau1")]
    #[serde(rename = "landau1")]
    Landau1,
    #[value(name = "landau2")]
    #[serde(rename = "landau2")]
    Landau2,
}

impl From<GaugeArg> for GaugeChoice {
    fn from(value: GaugeArg) -> Self {
        match value {
            GaugeArg::Symmetric => GaugeChoice::Symmetric,
            GaugeArg::Landau1 => GaugeChoice::LandauFirst,
            GaugeArg::Landau2 => GaugeChoice::LandauSecond,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum SignArg {
    #[value(name = "+")]
    #[serde(rename = "+")]
    Plus,
    #[value(name = "-")]
    #[serde(rename = "-")]
    Minus,
}

impl From<SignArg> for SignConvention {
    fn from(value: SignArg) -> Self {
        match value {
            SignArg::Plus => SignConvention::Plus,
            SignArg::Minus => SignConvention::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum ModeArg {
    #[value(name = "orthonormal")]
    #[serde(rename = "orthonormal")]
    Orthonormal,
    #[value(name = "paper")]
    #[serde(rename = "paper")]
    Paper,
}

impl From<ModeArg> for NormalizationMode {
    fn from(value: ModeArg) -> Self {
        match value {
            ModeArg::Orthonormal => NormalizationMode::Orthonormal,
            ModeArg::Paper => NormalizationMode::PaperLiteral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Text,
    Csv,
    Json,
}

/// Global flags shared by every subcommand; `None` means "keep the config
/// file / default value".
#[derive(Debug, Clone, clap::Args)]
pub struct GlobalOpts {
    /// Magnetic field strength, tesla
    #[arg(long = "B", global = true, value_name = "TESLA")]
    pub b: Option<f64>,
    /// Particle mass, kg
    #[arg(long, global = true, value_name = "KG")]
    pub mu: Option<f64>,
    /// Gauge for gauge-dependent commands
    #[arg(long, global = true, value_enum)]
    pub gauge: Option<GaugeArg>,
    /// Charge-field sign convention (qB = +eB or −eB)
    #[arg(long, global = true, value_enum, allow_hyphen_values = true)]
    pub sign: Option<SignArg>,
    /// Transverse normalization convention
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// JSON config file; NC_LANDAU_CONFIG is the fallback
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output directory for files
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Table/report format on stdout
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Significant figures in formatted tables
    #[arg(long, global = true, value_name = "N")]
    pub precision: Option<usize>,
    /// Radial intervals of the polar sampling grid
    #[arg(long, global = true, value_name = "N")]
    pub grid_radial: Option<usize>,
    /// Angular samples of the polar sampling grid
    #[arg(long, global = true, value_name = "N")]
    pub grid_angular: Option<usize>,
    /// Intervals of the 1D sampling grid
    #[arg(long, global = true, value_name = "N")]
    pub grid_line: Option<usize>,
    /// Grid extent in magnetic lengths
    #[arg(long, global = true, value_name = "L_B")]
    pub grid_extent: Option<f64>,
    /// Timestamp stored in field metadata (keeps outputs reproducible)
    #[arg(long, global = true, value_name = "EPOCH")]
    pub timestamp: Option<u64>,
    /// Print the effective configuration as JSON and exit
    #[arg(long, global = true)]
    pub print_config: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    #[serde(rename = "B")]
    pub b: f64,
    pub mu: f64,
    pub gauge: GaugeArg,
    pub sign: SignArg,
    pub mode: ModeArg,
    pub out: PathBuf,
    pub format: FormatArg,
    pub precision: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub grid_line: usize,
    pub grid_extent: f64,
    pub timestamp: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            b: 12.0,
            mu: ELECTRON_MASS,
            gauge: GaugeArg::Symmetric,
            sign: SignArg::Plus,
            mode: ModeArg::Orthonormal,
            out: PathBuf::from("out"),
            format: FormatArg::Text,
            precision: 4,
            grid_radial: 256,
            grid_angular: 64,
            grid_line: 512,
            grid_extent: 10.0,
            timestamp: 0,
        }
    }
}

impl RunConfig {
    /// Defaults, then the config file (explicit flag or environment), then
    /// flag overrides; validated at the end.
    pub fn resolve(flags: &GlobalOpts) -> Result<Self, String> {
        let path = flags
            .config
            .clone()
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        let mut cfg = match path {
            Some(p) => Self::from_file(&p)?,
            None => Self::default(),
        };
        cfg.apply(flags);
        cfg.validate()?;
        Ok(cfg)
    }

    fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    fn apply(&mut self, flags: &GlobalOpts) {
        macro_rules! take {
            ($field:ident) => {
                if let Some(v) = flags.$field.clone() {
                    self.$field = v;
                }
            };
        }
        take!(b);
        take!(mu);
        take!(gauge);
        take!(sign);
        take!(mode);
        take!(out);
        take!(format);
        take!(precision);
        take!(grid_radial);
        take!(grid_angular);
        take!(grid_line);
        take!(grid_extent);
        take!(timestamp);
    }

    fn validate(&self) -> Result<(), String> {
        if self.b <= 0.0 || !self.b.is_finite() {
            return Err(format!("field strength must be positive, got {}", self.b));
        }
        if self.mu <= 0.0 || !self.mu.is_finite() {
            return Err(format!("mass must be positive, got {}", self.mu));
        }
        if self.precision == 0 || self.precision > 17 {
            return Err(format!(
                "precision must be between 1 and 17 significant figures, got {}",
                self.precision
            ));
        }
        if self.grid_extent <= 0.0 || !self.grid_extent.is_finite() {
            return Err(format!("grid extent must be positive, got {}", self.grid_extent));
        }
        PhysicalParams::new(self.b, self.mu).map_err(|e| e.to_string())?;
        Ok(())
    }

    pub fn params(&self) -> PhysicalParams {
        // validated in resolve()
        PhysicalParams::new(self.b, self.mu).expect("validated config")
    }

    pub fn to_pretty_json(&self) -> Result<String, String> {
        serde_json::to_string_pretty(self).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_flags() -> GlobalOpts {
        GlobalOpts {
            b: None,
            mu: None,
            gauge: None,
            sign: None,
            mode: None,
            config: None,
            out: None,
            format: None,
            precision: None,
            grid_radial: None,
            grid_angular: None,
            grid_line: None,
            grid_extent: None,
            timestamp: None,
            print_config: false,
        }
    }

    #[test]
    fn defaults_match_the_documented_values() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.b, 12.0);
        assert_eq!(cfg.mu, ELECTRON_MASS);
        assert_eq!(cfg.precision, 4);
    }

    #[test]
    fn flags_override_file_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"B": 7.0, "precision": 6}"#).unwrap();
        let mut flags = no_flags();
        flags.config = Some(path);
        flags.b = Some(9.5);
        let cfg = RunConfig::resolve(&flags).unwrap();
        assert_eq!(cfg.b, 9.5);
        assert_eq!(cfg.precision, 6);
        assert_eq!(cfg.mu, ELECTRON_MASS);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"field": 7.0}"#).unwrap();
        let mut flags = no_flags();
        flags.config = Some(path);
        assert!(RunConfig::resolve(&flags).is_err());
    }

    #[test]
    fn config_round_trips_through_its_own_dump() {
        let cfg = RunConfig::default();
        let dumped = cfg.to_pretty_json().unwrap();
        let back: RunConfig = serde_json::from_str(&dumped).unwrap();
        assert_eq!(back.b, cfg.b);
        assert_eq!(back.format, cfg.format);
        assert_eq!(back.grid_radial, cfg.grid_radial);
    }

    #[test]
    fn nonsense_values_fail_validation() {
        let mut flags = no_flags();
        flags.b = Some(-3.0);
        assert!(RunConfig::resolve(&flags).is_err());
        let mut flags = no_flags();
        flags.precision = Some(0);
        assert!(RunConfig::resolve(&flags).is_err());
    }
}
