//! Command-line surface and its resolution into a [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specladder_core::models::ALPHA_FS;
use specladder_core::{Model, Tolerance};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "specladder", version)]
#[command(about = "Quantum spectra from ladder-operator consistency conditions, checked against numerical oracles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a model's closed-form spectrum
    Spectrum {
        #[arg(value_enum)]
        model: ModelName,
        #[command(flatten)]
        args: ModelArgs,
    },
    /// Compare a model's spectrum with an independent numerical oracle
    Verify {
        #[arg(value_enum, required_unless_present = "all", conflicts_with = "all")]
        model: Option<ModelName>,
        /// Verify every model with default parameters
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        args: ModelArgs,
    },
    /// Check a JSON spectrum pair or coefficient list against the ladder relations
    Consistency {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        tol_abs: Option<f64>,
        #[arg(long)]
        tol_rel: Option<f64>,
    },
    /// First-order x^4 corrections (same as `spectrum perturbed-ho`)
    Perturb {
        #[command(flatten)]
        args: ModelArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    Ho1d,
    Angular,
    IsoHo,
    Hydrogen,
    Dirac,
    SquareWell,
    PerturbedHo,
}

impl From<ModelName> for Model {
    fn from(m: ModelName) -> Model {
        match m {
            ModelName::Ho1d => Model::Ho1d,
            ModelName::Angular => Model::Angular,
            ModelName::IsoHo => Model::IsoHo,
            ModelName::Hydrogen => Model::Hydrogen,
            ModelName::Dirac => Model::Dirac,
            ModelName::SquareWell => Model::SquareWell,
            ModelName::PerturbedHo => Model::PerturbedHo,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Off,
    FiniteDifference,
    Matrix,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Number of levels (angular momentum always has 2j + 1)
    #[arg(long)]
    pub levels: Option<usize>,
    /// Spatial dimension
    #[arg(long = "N")]
    pub dims: Option<u32>,
    /// Orbital quantum number
    #[arg(long)]
    pub l: Option<u32>,
    /// Twice the angular momentum quantum number
    #[arg(long = "two-j", allow_negative_numbers = true)]
    pub two_j: Option<i64>,
    /// Nuclear charge
    #[arg(long = "Z")]
    pub charge: Option<u32>,
    /// Strength of the x^4 perturbation
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: Option<f64>,
    /// Fine-structure constant
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Allow Z != 1 in the relativistic model
    #[arg(long)]
    pub extend_charge: bool,

    /// Reduced Planck constant for --physical [default: 1]
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Particle mass for --physical [default: 1]
    #[arg(long)]
    pub mass: Option<f64>,
    /// Oscillator frequency for --physical [default: 1]
    #[arg(long)]
    pub omega: Option<f64>,
    /// Width of the square well for --physical [default: 1]
    #[arg(long)]
    pub length: Option<f64>,
    /// Print energies multiplied by the model's unit in terms of --hbar, --mass, ...
    #[arg(long)]
    pub physical: bool,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Oracle to run (`spectrum` defaults to off, `verify` to the model's own)
    #[arg(long, value_enum)]
    pub oracle: Option<OracleKind>,

    /// Grid points for finite-difference oracles
    #[arg(long)]
    pub points: Option<usize>,
    /// Inner end of the radial grid
    #[arg(long)]
    pub q_min: Option<f64>,
    /// Outer end of the grid
    #[arg(long)]
    pub q_max: Option<f64>,
    /// Basis dimension for the perturbation oracle
    #[arg(long)]
    pub basis: Option<usize>,
    /// Extrapolate the perturbation oracle in epsilon
    #[arg(long)]
    pub richardson: bool,
    #[arg(long)]
    pub tol_abs: Option<f64>,
    #[arg(long)]
    pub tol_rel: Option<f64>,
}

/// Resolved model parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub dims: u32,
    pub l: u32,
    pub two_j: i64,
    pub charge: u32,
    pub epsilon: f64,
    pub alpha: f64,
    pub extend_charge: bool,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            dims: 3,
            l: 0,
            two_j: 2,
            charge: 1,
            epsilon: 1e-4,
            alpha: ALPHA_FS,
            extend_charge: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GridOverrides {
    pub points: Option<usize>,
    pub q_min: Option<f64>,
    pub q_max: Option<f64>,
    pub basis: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitScales {
    pub hbar: f64,
    pub mass: f64,
    pub omega: f64,
    pub length: f64,
}

/// One fully validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: Model,
    pub params: Params,
    pub levels: usize,
    pub format: Format,
    pub oracle: OracleKind,
    pub physical: bool,
    pub units: UnitScales,
    pub grid: GridOverrides,
    pub richardson: bool,
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
}

pub const DEFAULT_LEVELS: usize = 3;

/// The oracle each model is verified with.
pub fn default_oracle(model: Model) -> OracleKind {
    match model {
        Model::Angular | Model::PerturbedHo => OracleKind::Matrix,
        _ => OracleKind::FiniteDifference,
    }
}

fn reject(model: Model, flag: &str, given: bool) -> Result<(), CliError> {
    if given {
        return Err(CliError::invalid(flag, format!("does not apply to {model}")));
    }
    Ok(())
}

impl RunConfig {
    /// Defaults for `model`, as used by `verify --all`.
    pub fn defaults(model: Model, format: Format) -> Self {
        Self::resolve(model, &ModelArgs { format, ..ModelArgs::default() }, false)
            .expect("defaults are valid for every model")
    }

    /// Validates `args` against what `model` accepts. `verify` selects the
    /// model's oracle when none is given.
    pub fn resolve(model: Model, args: &ModelArgs, verify: bool) -> Result<Self, CliError> {
        use Model::*;
        let uses_nl = matches!(model, IsoHo | Hydrogen);
        reject(model, "N", args.dims.is_some() && !uses_nl)?;
        reject(model, "l", args.l.is_some() && !matches!(model, IsoHo | Hydrogen | Dirac))?;
        reject(model, "two-j", args.two_j.is_some() && model != Angular)?;
        reject(model, "levels", args.levels.is_some() && model == Angular)?;
        reject(model, "Z", args.charge.is_some() && !matches!(model, Hydrogen | Dirac))?;
        reject(model, "epsilon", args.epsilon.is_some() && model != PerturbedHo)?;
        reject(model, "alpha", args.alpha.is_some() && model != Dirac)?;
        reject(model, "extend-charge", args.extend_charge && model != Dirac)?;
        reject(model, "basis", args.basis.is_some() && model != PerturbedHo)?;
        reject(model, "richardson", args.richardson && model != PerturbedHo)?;
        let gridded = !matches!(model, Angular | PerturbedHo);
        reject(model, "points", args.points.is_some() && !gridded)?;
        reject(model, "q-max", args.q_max.is_some() && !gridded)?;
        reject(
            model,
            "q-min",
            args.q_min.is_some() && !matches!(model, IsoHo | Hydrogen),
        )?;

        let defaults = Params::default();
        let params = Params {
            dims: args.dims.unwrap_or(defaults.dims),
            l: args.l.unwrap_or(defaults.l),
            two_j: args.two_j.unwrap_or(defaults.two_j),
            charge: args.charge.unwrap_or(defaults.charge),
            epsilon: args.epsilon.unwrap_or(defaults.epsilon),
            alpha: args.alpha.unwrap_or(defaults.alpha),
            extend_charge: args.extend_charge,
        };
        let oracle = match args.oracle {
            None if verify => default_oracle(model),
            None => OracleKind::Off,
            Some(OracleKind::Off) if verify => {
                return Err(CliError::invalid("oracle", "verify needs an oracle"));
            }
            Some(OracleKind::Off) => OracleKind::Off,
            Some(kind) if kind != default_oracle(model) => {
                return Err(CliError::invalid(
                    "oracle",
                    format!("{model} is verified with the {:?} oracle", default_oracle(model)),
                ));
            }
            Some(kind) => kind,
        };
        for (flag, value) in [("tol-abs", args.tol_abs), ("tol-rel", args.tol_rel)] {
            if value.is_some_and(|t| !(t.is_finite() && t >= 0.0)) {
                return Err(CliError::invalid(flag, "tolerance must be finite and nonnegative"));
            }
        }
        Ok(Self {
            model,
            params,
            levels: args.levels.unwrap_or(DEFAULT_LEVELS),
            format: args.format,
            oracle,
            physical: args.physical,
            units: UnitScales {
                hbar: args.hbar.unwrap_or(1.0),
                mass: args.mass.unwrap_or(1.0),
                omega: args.omega.unwrap_or(1.0),
                length: args.length.unwrap_or(1.0),
            },
            grid: GridOverrides {
                points: args.points,
                q_min: args.q_min,
                q_max: args.q_max,
                basis: args.basis,
            },
            richardson: args.richardson,
            tol_abs: args.tol_abs,
            tol_rel: args.tol_rel,
        })
    }

    /// `base` with any command-line tolerance overrides applied.
    pub fn tolerance(&self, base: Tolerance) -> Tolerance {
        Tolerance::new(self.tol_abs.unwrap_or(base.abs), self.tol_rel.unwrap_or(base.rel))
    }
}
