//! Run configuration shared by every subcommand.
//!
//! Three layers, lowest priority first: built-in defaults, a flat key-value
//! config file, explicit command-line flags. File keys are spelled exactly
//! like the long flags (`seed`, `grid-beta`, `tol-slice`, ...). The file
//! path comes from `--config`, or from the `HORODISK_CONFIG` environment
//! variable when the flag is absent.

use std::path::{Path, PathBuf};

use horodisk::transforms::{TransformError, TransformGrids, SHEAR_TRUNCATION};
use thiserror::Error;

/// Seed for every randomized draw unless overridden.
pub const DEFAULT_SEED: u64 = 17;
/// Boundary node count reported for full-resolution tables. Suites whose
/// identity is independent of the boundary resolution document and use a
/// smaller working count.
pub const DEFAULT_GRID_BETA: usize = 256;
/// Height node count for transform tables.
pub const DEFAULT_GRID_TAU: usize = 512;
/// Frequency node count for transform tables.
pub const DEFAULT_GRID_LAMBDA: usize = 512;
/// Environment variable consulted for a config file path.
pub const CONFIG_ENV_VAR: &str = "HORODISK_CONFIG";

/// Encoding for reports and plot files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(name: &str) -> Result<Self, ConfigError> {
        match name {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(ConfigError::BadFormat(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Json => "json",
            Self::Csv => "csv",
        }
    }
}

/// Errors raised while assembling the configuration.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config file {path} is not a flat key-value table: {source}")]
    Parse {
        path: PathBuf,
        source: Box<toml::de::Error>,
    },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("config key `{key}` needs a {expected} value")]
    WrongType { key: String, expected: &'static str },
    #[error("config key `{key}` is out of range: {detail}")]
    OutOfRange { key: String, detail: String },
    #[error("unknown output format `{0}`; expected json or csv")]
    BadFormat(String),
    #[error("{0} needs an output path; pass --out or set `out` in the config file")]
    MissingOut(&'static str),
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub grid_beta: Option<usize>,
    pub grid_tau: Option<usize>,
    pub grid_lambda: Option<usize>,
    pub shear_truncation: f64,
    pub tol_structure: Option<f64>,
    pub tol_geometry: Option<f64>,
    pub tol_slice: Option<f64>,
    pub tol_plancherel: Option<f64>,
    pub tol_unitarity: Option<f64>,
    pub tol_intertwine: Option<f64>,
    pub tol_properties: Option<f64>,
    pub tol_spd: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            grid_beta: None,
            grid_tau: None,
            grid_lambda: None,
            shear_truncation: SHEAR_TRUNCATION,
            tol_structure: None,
            tol_geometry: None,
            tol_slice: None,
            tol_plancherel: None,
            tol_unitarity: None,
            tol_intertwine: None,
            tol_properties: None,
            tol_spd: None,
            out: None,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    /// Layers the file at `path` on top of the current values.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let table: toml::Table = text.parse().map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source: Box::new(source),
        })?;
        for (key, value) in &table {
            self.apply_key(key, value)?;
        }
        Ok(())
    }

    fn apply_key(&mut self, key: &str, value: &toml::Value) -> Result<(), ConfigError> {
        match key {
            "seed" => self.seed = read_u64(key, value)?,
            "grid-beta" => self.grid_beta = Some(read_count(key, value)?),
            "grid-tau" => self.grid_tau = Some(read_count(key, value)?),
            "grid-lambda" => self.grid_lambda = Some(read_count(key, value)?),
            "shear-truncation" => self.shear_truncation = read_positive(key, value)?,
            "tol-structure" => self.tol_structure = Some(read_positive(key, value)?),
            "tol-geometry" => self.tol_geometry = Some(read_positive(key, value)?),
            "tol-slice" => self.tol_slice = Some(read_positive(key, value)?),
            "tol-plancherel" => self.tol_plancherel = Some(read_positive(key, value)?),
            "tol-unitarity" => self.tol_unitarity = Some(read_positive(key, value)?),
            "tol-intertwine" => self.tol_intertwine = Some(read_positive(key, value)?),
            "tol-properties" => self.tol_properties = Some(read_positive(key, value)?),
            "tol-spd" => self.tol_spd = Some(read_positive(key, value)?),
            "out" => self.out = Some(PathBuf::from(read_str(key, value)?)),
            "format" => self.format = OutputFormat::parse(read_str(key, value)?)?,
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
        Ok(())
    }

    /// Working boundary node count given a suite's own default.
    pub fn resolved_beta(&self, default_beta: usize) -> usize {
        self.grid_beta.unwrap_or(default_beta)
    }

    pub fn resolved_tau(&self) -> usize {
        self.grid_tau.unwrap_or(DEFAULT_GRID_TAU)
    }

    pub fn resolved_lambda(&self) -> usize {
        self.grid_lambda.unwrap_or(DEFAULT_GRID_LAMBDA)
    }

    /// Working transform grids given a suite's own default boundary count.
    pub fn transform_grids(&self, default_beta: usize) -> Result<TransformGrids, TransformError> {
        TransformGrids::with_counts(
            self.resolved_beta(default_beta),
            self.resolved_tau(),
            self.resolved_lambda(),
        )
    }
}

fn read_u64(key: &str, value: &toml::Value) -> Result<u64, ConfigError> {
    let raw = value.as_integer().ok_or_else(|| ConfigError::WrongType {
        key: key.to_string(),
        expected: "non-negative integer",
    })?;
    u64::try_from(raw).map_err(|_| ConfigError::OutOfRange {
        key: key.to_string(),
        detail: format!("{raw} is negative"),
    })
}

fn read_count(key: &str, value: &toml::Value) -> Result<usize, ConfigError> {
    let raw = read_u64(key, value)?;
    if raw == 0 {
        return Err(ConfigError::OutOfRange {
            key: key.to_string(),
            detail: "node counts must be positive".to_string(),
        });
    }
    usize::try_from(raw).map_err(|_| ConfigError::OutOfRange {
        key: key.to_string(),
        detail: format!("{raw} does not fit a machine word"),
    })
}

fn read_positive(key: &str, value: &toml::Value) -> Result<f64, ConfigError> {
    let raw = value
        .as_float()
        .or_else(|| value.as_integer().map(|i| i as f64))
        .ok_or_else(|| ConfigError::WrongType {
            key: key.to_string(),
            expected: "positive number",
        })?;
    if !(raw > 0.0) || !raw.is_finite() {
        return Err(ConfigError::OutOfRange {
            key: key.to_string(),
            detail: format!("{raw} is not a finite positive number"),
        });
    }
    Ok(raw)
}

fn read_str<'v>(key: &str, value: &'v toml::Value) -> Result<&'v str, ConfigError> {
    value.as_str().ok_or_else(|| ConfigError::WrongType {
        key: key.to_string(),
        expected: "string",
    })
}
