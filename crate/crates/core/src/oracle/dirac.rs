//! Root-finding oracle for the relativistic hydrogen levels.
//!
//! For a trial energy `E` (in units of the rest energy) the radial equation
//! in `u = r R`, rescaled by `rho = alpha r`, reads
//!
//! ```text
//! -u'' + Lambda_D/rho^2 u - (2 E / rho) u = -((1 - E^2) / alpha^2) u
//! ```
//!
//! so `E_k` is the root of `f(E) = lambda_k(E) + (1 - E^2)/alpha^2`, where
//! `lambda_k(E)` is the `k`-th eigenvalue of the discretized left-hand side.
//! `f` decreases monotonically on `(0, 1)`; a scan confirms the single sign
//! change before bisecting.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::eigen::eig_tridiagonal;
use crate::oracle::grid::Grid;
use crate::potential::dirac_strength;

const SCAN_POINTS: usize = 16;
/// The Dirichlet wall shifts levels at first order in its radius, so it sits
/// at a fixed small radius rather than a fraction of the box.
const INNER_WALL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiracOracleConfig {
    pub points: usize,
    /// Outer radius in units of the Bohr radius; `None` picks one from the
    /// highest requested principal quantum number.
    pub rho_max: Option<f64>,
    /// Bisection tolerance on the energy.
    pub tolerance: f64,
    pub charge: u32,
}

impl Default for DiracOracleConfig {
    fn default() -> Self {
        Self {
            points: 4000,
            rho_max: None,
            tolerance: 1e-10,
            charge: 1,
        }
    }
}

fn level_residual(grid: &Grid, lambda_d: f64, alpha: f64, charge: f64, level: usize, energy: f64) -> Result<f64> {
    let op = grid.discretize(1.0, |rho| lambda_d / (rho * rho) - 2.0 * charge * energy / rho)?;
    let eig = eig_tridiagonal(&op, level + 1)?;
    Ok(eig[level] + (1.0 - energy * energy) / (alpha * alpha))
}

/// Energies `E_0 .. E_{count-1}` (units of `m c^2`) for orbital `l`.
pub fn solve_dirac_radial(l: u32, alpha_fs: f64, count: usize, config: &DiracOracleConfig) -> Result<Vec<f64>> {
    if !(alpha_fs > 0.0 && alpha_fs <= 0.1) {
        return Err(Error::invalid("alpha_fs", "fine-structure constant must lie in (0, 0.1]"));
    }
    if config.charge == 0 {
        return Err(Error::invalid("Z", "charge must be positive"));
    }
    let lambda_d = dirac_strength(l, alpha_fs, config.charge);
    let charge = config.charge as f64;
    let n_max = (count as u32 + l) as f64;
    let rho_max = config
        .rho_max
        .unwrap_or_else(|| (40.0 * n_max + 2.0 * n_max * n_max) / charge);
    let grid = Grid::radial(INNER_WALL, rho_max, config.points)?;

    let mut energies = Vec::with_capacity(count);
    for level in 0..count {
        let f = |e: f64| level_residual(&grid, lambda_d, alpha_fs, charge, level, e);
        // Scan for the bracketing interval and check monotonicity on the way.
        let mut lo = 0.0;
        let mut f_lo = f(lo)?;
        let mut bracket = None;
        for j in 1..=SCAN_POINTS {
            let e = j as f64 / SCAN_POINTS as f64;
            let f_e = f(e)?;
            if f_e > f_lo {
                return Err(Error::RootBracketFailure { level });
            }
            if f_lo > 0.0 && f_e <= 0.0 {
                bracket = Some((lo, e));
                break;
            }
            lo = e;
            f_lo = f_e;
        }
        let (mut lo, mut hi) = bracket.ok_or(Error::RootBracketFailure { level })?;
        while hi - lo > config.tolerance {
            let mid = 0.5 * (lo + hi);
            if f(mid)? > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        energies.push(0.5 * (lo + hi));
    }
    Ok(energies)
}
