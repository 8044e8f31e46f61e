//! Labeled level lists shared by the models and the oracle reports.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::SpectrumPair;
use crate::scalar::Rational;

/// The physical systems with closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    Ho1d,
    Angular,
    IsoHo,
    Hydrogen,
    Dirac,
    SquareWell,
    PerturbedHo,
}

impl Model {
    pub const ALL: [Model; 7] = [
        Model::Ho1d,
        Model::Angular,
        Model::IsoHo,
        Model::Hydrogen,
        Model::Dirac,
        Model::SquareWell,
        Model::PerturbedHo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Ho1d => "ho1d",
            Model::Angular => "angular",
            Model::IsoHo => "iso-ho",
            Model::Hydrogen => "hydrogen",
            Model::Dirac => "dirac",
            Model::SquareWell => "square-well",
            Model::PerturbedHo => "perturbed-ho",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Natural unit a model reports its levels in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyUnit {
    /// `hbar omega`
    HbarOmega,
    /// `hbar omega / 2`, the eigenvalue unit of the dimensionless radial
    /// oscillator.
    HalfHbarOmega,
    /// `hbar`, for angular momentum projections.
    Hbar,
    /// `E_1 = hbar^2 pi^2 / (2 m L^2)`
    WellGround,
    /// `Z^2 e^4 m / hbar^2`
    ScaledHartree,
    /// `e^4 m / hbar^2`
    Hartree,
    /// `m c^2`
    RestEnergy,
    /// `hbar^2 / (m^2 omega^2)` times the quartic strength's own unit.
    QuarticShift,
}

impl EnergyUnit {
    pub fn symbol(self) -> &'static str {
        match self {
            EnergyUnit::HbarOmega => "hbar*omega",
            EnergyUnit::HalfHbarOmega => "hbar*omega/2",
            EnergyUnit::Hbar => "hbar",
            EnergyUnit::WellGround => "E1",
            EnergyUnit::ScaledHartree => "Z^2*e^4*m/hbar^2",
            EnergyUnit::Hartree => "e^4*m/hbar^2",
            EnergyUnit::RestEnergy => "m*c^2",
            EnergyUnit::QuarticShift => "hbar^2/(m^2*omega^2)",
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One named quantum number or auxiliary value attached to a level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Label {
    pub name: String,
    pub value: f64,
}

impl Label {
    pub fn new(name: &str, value: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub labels: Vec<Label>,
    pub energy: f64,
    /// Exact value of `energy` when the model's spectrum is rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
}

impl Level {
    pub fn label(&self, name: &str) -> Option<f64> {
        self.labels.iter().find(|l| l.name == name).map(|l| l.value)
    }
}

/// A model's levels in its natural unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSpectrum {
    pub model: Model,
    pub unit: EnergyUnit,
    /// Value of one `unit` in the caller's units, from [`crate::models::PhysicalUnits`].
    pub scale: f64,
    pub params: Vec<Label>,
    pub levels: Vec<Level>,
    /// The `S`/`A` pair the levels were derived from, when it is rational.
    #[serde(skip)]
    pub ladder: Option<SpectrumPair<Rational>>,
}

impl ModelSpectrum {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }

    /// Energies multiplied by [`ModelSpectrum::scale`].
    pub fn physical_energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy * self.scale).collect()
    }

    pub fn exact(&self) -> Option<Vec<Rational>> {
        self.levels.iter().map(|l| l.exact).collect()
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }

    /// Re-expresses the levels in `target`. Supported: `hbar omega` to and
    /// from `hbar omega / 2`, and `Z^2 e^4 m / hbar^2` to `e^4 m / hbar^2`.
    pub fn convert_to(&self, target: EnergyUnit) -> Result<ModelSpectrum> {
        use EnergyUnit::*;
        let factor = match (self.unit, target) {
            (a, b) if a == b => Rational::from_integer(1),
            (HbarOmega, HalfHbarOmega) => Rational::from_integer(2),
            (HalfHbarOmega, HbarOmega) => Rational::new(1, 2),
            (ScaledHartree, Hartree) => {
                let z = self.param("Z").unwrap_or(1.0) as i128;
                Rational::from_integer(z * z)
            }
            _ => {
                return Err(Error::UnitMismatch {
                    algebraic: self.unit.symbol(),
                    numeric: target.symbol(),
                })
            }
        };
        let f = *factor.numer() as f64 / *factor.denom() as f64;
        let mut out = self.clone();
        out.unit = target;
        out.scale = self.scale / f;
        for level in &mut out.levels {
            level.energy *= f;
            level.exact = level.exact.map(|e| e * factor);
        }
        Ok(out)
    }
}
