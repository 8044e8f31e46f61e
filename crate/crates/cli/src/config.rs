//! Verification defaults: the checked-in `config/defaults.conf`, optionally
//! overlaid by the file named in `SPECLADDER_CONFIG`.

use std::path::Path;

use serde::Deserialize;
use specladder_core::Tolerance;
use toml::{Table, Value};

use crate::error::CliError;

pub const CONFIG_ENV: &str = "SPECLADDER_CONFIG";

const DEFAULTS: &str = include_str!("../config/defaults.conf");

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub ho1d: Ho1dConfig,
    pub angular: ToleranceConfig,
    pub oscillator: OscillatorConfig,
    pub hydrogen: HydrogenConfig,
    pub dirac: DiracConfig,
    pub well: WellConfig,
    pub perturbation: PerturbationConfig,
    pub consistency: ToleranceConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceConfig {
    pub tol_abs: f64,
    pub tol_rel: f64,
}

impl ToleranceConfig {
    pub fn tolerance(&self) -> Tolerance {
        Tolerance::new(self.tol_abs, self.tol_rel)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ho1dConfig {
    pub x_max: f64,
    pub points: usize,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OscillatorConfig {
    pub q_min: f64,
    pub q_max: f64,
    pub points: usize,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HydrogenConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Outer radius for the two-dimensional problem, whose ground state is
    /// four times more compact.
    pub r_max_2d: f64,
    pub points: usize,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub tol_rel_2d: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiracConfig {
    pub points: usize,
    pub bisection: f64,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WellConfig {
    pub points: usize,
    pub action_points: usize,
    pub action_tol: f64,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerturbationConfig {
    pub basis: usize,
    pub richardson: bool,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub tol_rel_richardson: f64,
}

fn parse(text: &str, origin: &str) -> Result<Table, CliError> {
    text.parse::<Table>()
        .map_err(|e| CliError::Config(format!("{origin}: {}", e.message())))
}

/// Recursively copies `overlay` into `base`.
fn merge(base: &mut Table, overlay: Table) {
    for (key, value) in overlay {
        match (base.get_mut(&key), value) {
            (Some(Value::Table(inner)), Value::Table(more)) => merge(inner, more),
            (_, value) => {
                base.insert(key, value);
            }
        }
    }
}

impl Config {
    pub fn defaults() -> Self {
        Self::from_tables(parse(DEFAULTS, "built-in defaults").expect("defaults parse"), None)
            .expect("defaults are complete")
    }

    fn from_tables(mut base: Table, overlay: Option<(Table, &str)>) -> Result<Self, CliError> {
        let origin = match overlay {
            Some((table, origin)) => {
                merge(&mut base, table);
                origin
            }
            None => "built-in defaults",
        };
        Value::Table(base)
            .try_into()
            .map_err(|e: toml::de::Error| CliError::Config(format!("{origin}: {}", e.message())))
    }

    /// Defaults overlaid with `path`.
    pub fn with_overrides(path: &Path) -> Result<Self, CliError> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{origin}: {e}")))?;
        let overlay = parse(&text, &origin)?;
        Self::from_tables(parse(DEFAULTS, "built-in defaults")?, Some((overlay, &origin)))
    }

    /// Defaults, overlaid with `$SPECLADDER_CONFIG` when it is set.
    pub fn load() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::with_overrides(Path::new(&path)),
            _ => Ok(Self::defaults()),
        }
    }
}
