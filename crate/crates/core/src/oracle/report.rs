//! Side-by-side comparison of algebraic and numerical levels.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::grid::Grid;
use crate::scalar::Tolerance;
use crate::spectrum::{EnergyUnit, Model, ModelSpectrum};

/// Levels produced by an oracle, in a declared unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericSpectrum {
    pub unit: EnergyUnit,
    pub values: Vec<f64>,
    /// Short description of the method, e.g. `"finite-difference"`.
    pub method: String,
    pub grid: Option<Grid>,
    pub warnings: Vec<String>,
}

impl NumericSpectrum {
    pub fn new(unit: EnergyUnit, values: Vec<f64>, method: &str) -> Self {
        Self {
            unit,
            values,
            method: method.to_string(),
            grid: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_grid(mut self, grid: Grid) -> Self {
        self.grid = Some(grid);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub model: Model,
    pub unit: EnergyUnit,
    pub method: String,
    pub algebraic: Vec<f64>,
    pub numeric: Vec<f64>,
    pub abs_err: Vec<f64>,
    pub rel_err: Vec<f64>,
    pub grid: Option<Grid>,
    pub tolerance: Tolerance,
    pub pass: bool,
    pub warnings: Vec<String>,
}

impl OracleReport {
    pub fn max_abs_err(&self) -> f64 {
        self.abs_err.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_rel_err(&self) -> f64 {
        self.rel_err.iter().copied().fold(0.0, f64::max)
    }

    /// Index of the first level outside tolerance.
    pub fn first_failure(&self) -> Option<usize> {
        (0..self.algebraic.len()).find(|&k| !self.level_passes(k))
    }

    fn level_passes(&self, k: usize) -> bool {
        self.abs_err[k] <= self.tolerance.abs + self.tolerance.rel * self.algebraic[k].abs()
    }
}

/// Compares level by level. A level passes when
/// `|numeric - algebraic| <= tol.abs + tol.rel * |algebraic|`.
pub fn compare(algebraic: &ModelSpectrum, numeric: &NumericSpectrum, tol: Tolerance) -> Result<OracleReport> {
    if algebraic.unit != numeric.unit {
        return Err(Error::UnitMismatch {
            algebraic: algebraic.unit.symbol(),
            numeric: numeric.unit.symbol(),
        });
    }
    if algebraic.len() != numeric.values.len() {
        return Err(Error::LevelCountMismatch {
            algebraic: algebraic.len(),
            numeric: numeric.values.len(),
        });
    }
    let alg = algebraic.energies();
    let abs_err: Vec<f64> = alg
        .iter()
        .zip(&numeric.values)
        .map(|(x, y)| (y - x).abs())
        .collect();
    let rel_err = alg
        .iter()
        .zip(&abs_err)
        .map(|(x, e)| if *x == 0.0 { *e } else { e / x.abs() })
        .collect();
    let mut warnings = numeric.warnings.clone();
    if alg.is_empty() {
        warnings.push("no levels to compare; pass is vacuous".to_string());
    }
    let mut report = OracleReport {
        model: algebraic.model,
        unit: algebraic.unit,
        method: numeric.method.clone(),
        algebraic: alg,
        numeric: numeric.values.clone(),
        abs_err,
        rel_err,
        grid: numeric.grid,
        tolerance: tol,
        pass: false,
        warnings,
    };
    report.pass = report.first_failure().is_none();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{ho_1d, PhysicalUnits};
    use alloc::vec;

    fn ho(levels: usize) -> ModelSpectrum {
        ho_1d(&PhysicalUnits::default(), levels).unwrap()
    }

    #[test]
    fn pass_and_fail() {
        let tol = Tolerance::new(1e-6, 0.0);
        let good = NumericSpectrum::new(EnergyUnit::HbarOmega, vec![0.5, 1.5 + 1e-9, 2.5], "test");
        let report = compare(&ho(3), &good, tol).unwrap();
        assert!(report.pass);
        assert!(report.max_abs_err() < 1e-8);

        let tampered = NumericSpectrum::new(EnergyUnit::HbarOmega, vec![0.5, 1.6, 2.5], "test");
        let report = compare(&ho(3), &tampered, tol).unwrap();
        assert!(!report.pass);
        assert_eq!(report.first_failure(), Some(1));
    }

    #[test]
    fn empty_is_vacuous() {
        let report = compare(&ho(0), &NumericSpectrum::new(EnergyUnit::HbarOmega, vec![], "test"), Tolerance::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.warnings.len(), 1);
    }

    #[test]
    fn mismatches() {
        let wrong_unit = NumericSpectrum::new(EnergyUnit::HalfHbarOmega, vec![1.0], "test");
        assert!(matches!(
            compare(&ho(1), &wrong_unit, Tolerance::default()),
            Err(Error::UnitMismatch { .. })
        ));
        let converted = ho(1).convert_to(EnergyUnit::HalfHbarOmega).unwrap();
        assert!(compare(&converted, &wrong_unit, Tolerance::default()).unwrap().pass);
        let short = NumericSpectrum::new(EnergyUnit::HbarOmega, vec![0.5], "test");
        assert!(matches!(
            compare(&ho(2), &short, Tolerance::default()),
            Err(Error::LevelCountMismatch { .. })
        ));
    }
}
