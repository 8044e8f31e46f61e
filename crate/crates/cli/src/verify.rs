//! Runs the oracle that matches each model.

use serde::{Deserialize, Serialize};
use specladder_core::models::{
    angular_momentum, dirac_hydrogen, ho_1d, hydrogen_nd, iso_ho_nd, perturbed_ho, square_well, well_grid,
    well_ladder_action, DiracParams, PhysicalUnits,
};
use specladder_core::oracle::{
    compare, first_order_shifts, jx_eigenvalues, solve_dirac_radial, solve_hydrogen_radial, solve_oscillator_1d,
    solve_oscillator_radial, solve_square_well, DiracOracleConfig, Grid, NumericSpectrum, OracleReport,
};
use specladder_core::{EnergyUnit, Model, ModelSpectrum, Tolerance};

use crate::args::RunConfig;
use crate::config::Config;
use crate::error::CliError;

/// A pass/fail measurement beyond the level-by-level comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub report: OracleReport,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn pass(&self) -> bool {
        self.report.pass && self.checks.iter().all(|c| c.pass)
    }
}

fn physical_units(run: &RunConfig) -> PhysicalUnits {
    PhysicalUnits {
        hbar: run.units.hbar,
        mass: run.units.mass,
        omega: run.units.omega,
        length: run.units.length,
        charge: run.params.charge,
        ..PhysicalUnits::default()
    }
}

fn dirac_params(run: &RunConfig) -> DiracParams {
    DiracParams {
        l: run.params.l,
        alpha_fs: run.params.alpha,
        charge: run.params.charge,
        extended_charge: run.params.extend_charge,
    }
}

/// The closed-form spectrum for `run`.
pub fn model_spectrum(run: &RunConfig) -> Result<ModelSpectrum, CliError> {
    let units = physical_units(run);
    let p = &run.params;
    let levels = run.levels;
    match run.model {
        Model::Ho1d => ho_1d(&units, levels),
        Model::Angular => angular_momentum(p.two_j),
        Model::IsoHo => iso_ho_nd(&units, p.dims, p.l, levels),
        Model::Hydrogen => hydrogen_nd(&units, p.dims, p.l, levels),
        Model::Dirac => dirac_hydrogen(&dirac_params(run), levels),
        Model::SquareWell => square_well(&units, levels),
        Model::PerturbedHo => perturbed_ho(&units, p.epsilon, levels),
    }
    .map_err(CliError::model)
}

fn well_action_error(k: u32, points: usize) -> Result<f64, CliError> {
    let y = well_grid(points).map_err(CliError::oracle)?;
    let f = well_ladder_action(k, points).map_err(CliError::oracle)?;
    Ok(y.iter()
        .zip(&f)
        .map(|(y, f)| (f - ((k + 1) as f64 * y).sin()).abs())
        .fold(0.0, f64::max))
}

/// Outer radius (units of the Bohr radius, `Z = 1`) that holds level `n`:
/// the classical turning point `2 n^2` plus twenty decay lengths.
pub fn coulomb_box(configured: f64, n: f64) -> f64 {
    configured.max(2.0 * n * n + 20.0 * n)
}

/// Computes the algebraic spectrum, runs the model's oracle and compares.
pub fn verify(run: &RunConfig, config: &Config) -> Result<(ModelSpectrum, Verification), CliError> {
    let algebraic = model_spectrum(run)?;
    let p = &run.params;
    let g = &run.grid;
    let count = algebraic.len();
    let mut checks = Vec::new();
    let (algebraic_in_unit, numeric, tol) = match run.model {
        Model::Ho1d => {
            let c = &config.ho1d;
            let x_max = g.q_max.unwrap_or(c.x_max);
            let grid = Grid::new(-x_max, x_max, g.points.unwrap_or(c.points)).map_err(CliError::oracle)?;
            let values = solve_oscillator_1d(&grid, count).map_err(CliError::oracle)?;
            let numeric = NumericSpectrum::new(EnergyUnit::HbarOmega, values, "finite-difference").with_grid(grid);
            (algebraic.clone(), numeric, Tolerance::new(c.tol_abs, c.tol_rel))
        }
        Model::Angular => {
            let values = jx_eigenvalues(p.two_j as u32).map_err(CliError::oracle)?;
            let numeric = NumericSpectrum::new(EnergyUnit::Hbar, values, "matrix");
            (algebraic.clone(), numeric, config.angular.tolerance())
        }
        Model::IsoHo => {
            let c = &config.oscillator;
            let grid = Grid::radial(
                g.q_min.unwrap_or(c.q_min),
                g.q_max.unwrap_or(c.q_max),
                g.points.unwrap_or(c.points),
            )
            .map_err(CliError::oracle)?;
            let values = solve_oscillator_radial(p.dims, p.l, &grid, count).map_err(CliError::oracle)?;
            let numeric =
                NumericSpectrum::new(EnergyUnit::HalfHbarOmega, values, "finite-difference").with_grid(grid);
            let converted = algebraic.convert_to(EnergyUnit::HalfHbarOmega).map_err(CliError::model)?;
            (converted, numeric, Tolerance::new(c.tol_abs, c.tol_rel))
        }
        Model::Hydrogen => {
            let c = &config.hydrogen;
            let (r_max, tol_rel) = if p.dims == 2 {
                (c.r_max_2d, c.tol_rel_2d)
            } else {
                (c.r_max, c.tol_rel)
            };
            let n_max = algebraic.levels.last().and_then(|l| l.label("n")).unwrap_or(1.0);
            let z = p.charge as f64;
            let grid = Grid::radial(
                g.q_min.unwrap_or(c.r_min / z),
                g.q_max.unwrap_or(coulomb_box(r_max, n_max) / z),
                g.points.unwrap_or(c.points),
            )
            .map_err(CliError::oracle)?;
            let values = solve_hydrogen_radial(p.dims, p.l, p.charge, &grid, count).map_err(CliError::oracle)?;
            let numeric = NumericSpectrum::new(EnergyUnit::Hartree, values, "finite-difference").with_grid(grid);
            let converted = algebraic.convert_to(EnergyUnit::Hartree).map_err(CliError::model)?;
            (converted, numeric, Tolerance::new(c.tol_abs, tol_rel))
        }
        Model::Dirac => {
            let c = &config.dirac;
            let oracle_config = DiracOracleConfig {
                points: g.points.unwrap_or(c.points),
                rho_max: g.q_max,
                tolerance: c.bisection,
                charge: p.charge,
            };
            let values = solve_dirac_radial(p.l, p.alpha, count, &oracle_config).map_err(CliError::oracle)?;
            let numeric = NumericSpectrum::new(EnergyUnit::RestEnergy, values, "root-find");
            (algebraic.clone(), numeric, Tolerance::new(c.tol_abs, c.tol_rel))
        }
        Model::SquareWell => {
            let c = &config.well;
            let points = g.points.unwrap_or(c.points);
            let values = solve_square_well(points, count).map_err(CliError::oracle)?;
            let grid = Grid::new(0.0, std::f64::consts::PI, points).map_err(CliError::oracle)?;
            let numeric = NumericSpectrum::new(EnergyUnit::WellGround, values, "finite-difference").with_grid(grid);
            for k in 1..=count as u32 {
                let value = well_action_error(k, c.action_points)?;
                checks.push(Check {
                    name: format!("ladder action k={k}"),
                    value,
                    limit: c.action_tol,
                    pass: value <= c.action_tol,
                });
            }
            (algebraic.clone(), numeric, Tolerance::new(c.tol_abs, c.tol_rel))
        }
        Model::PerturbedHo => {
            let c = &config.perturbation;
            let richardson = run.richardson || c.richardson;
            let basis = g.basis.unwrap_or(c.basis);
            let values = first_order_shifts(p.epsilon, basis, count, richardson).map_err(CliError::oracle)?;
            let method = if richardson { "matrix (Richardson)" } else { "matrix" };
            let numeric = NumericSpectrum::new(EnergyUnit::QuarticShift, values, method);
            let tol_rel = if richardson { c.tol_rel_richardson } else { c.tol_rel };
            (algebraic.clone(), numeric, Tolerance::new(c.tol_abs, tol_rel))
        }
    };
    let report = compare(&algebraic_in_unit, &numeric, run.tolerance(tol)).map_err(CliError::oracle)?;
    Ok((algebraic_in_unit, Verification { report, checks }))
}
