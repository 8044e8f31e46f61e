//! Finite-difference eigensolvers for the differential operators behind the
//! models. None of these use the algebraic solutions.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::oracle::eigen::{eig_tridiagonal, TridiagonalOperator};
use crate::oracle::grid::{discretize_regular, Grid};
use crate::potential::centrifugal_strength;
use crate::scalar::Scalar;

fn require_radial(grid: &Grid, lambda: f64) -> Result<()> {
    if lambda != 0.0 && grid.q_min <= 0.0 {
        return Err(Error::invalid("q_min", "singular potentials need q_min > 0"));
    }
    Ok(())
}

/// Three-point stencil in `u` on the grid, or the cell-centred stencil in
/// `R` when `Lambda < 0` makes `u ~ q^(1/2)` non-smooth at the origin.
fn radial_operator(
    dims: u32,
    l: u32,
    grid: &Grid,
    kinetic: f64,
    potential: impl Fn(f64) -> f64,
) -> Result<TridiagonalOperator> {
    let lambda = centrifugal_strength(dims, l)?.to_f64();
    require_radial(grid, lambda)?;
    if lambda < 0.0 {
        let angular = (l * (l + dims - 2)) as f64;
        discretize_regular(grid.q_max, grid.points, dims, kinetic, angular, potential)
    } else {
        grid.discretize(kinetic, |q| kinetic * lambda / (q * q) + potential(q))
    }
}

/// Lowest eigenvalues of `-d^2/dq^2 + Lambda/q^2 + q^2`, in units of
/// `hbar omega / 2`.
pub fn solve_oscillator_radial(dims: u32, l: u32, grid: &Grid, count: usize) -> Result<Vec<f64>> {
    let op = radial_operator(dims, l, grid, 1.0, |q| q * q)?;
    eig_tridiagonal(&op, count)
}

/// Lowest bound-state energies of
/// `-(1/2) d^2/dr^2 + Lambda/(2 r^2) - Z/r` in units `hbar = m = e = 1`.
pub fn solve_hydrogen_radial(dims: u32, l: u32, charge: u32, grid: &Grid, count: usize) -> Result<Vec<f64>> {
    if grid.q_min <= 0.0 {
        return Err(Error::invalid("q_min", "the Coulomb potential needs r_min > 0"));
    }
    let z = charge as f64;
    let op = radial_operator(dims, l, grid, 0.5, |r| -z / r)?;
    let levels = eig_tridiagonal(&op, count.min(op.dim()))?;
    let found = levels.iter().take_while(|&&e| e < 0.0).count();
    if found < count {
        return Err(Error::InsufficientBoundStates {
            found,
            requested: count,
        });
    }
    Ok(levels)
}

/// Lowest eigenvalues of `-(1/2) d^2/dx^2 + x^2/2` on a symmetric grid, in
/// units of `hbar omega`.
pub fn solve_oscillator_1d(grid: &Grid, count: usize) -> Result<Vec<f64>> {
    let op = grid.discretize(0.5, |x| 0.5 * x * x)?;
    eig_tridiagonal(&op, count)
}

/// Lowest eigenvalues of `-d^2/dy^2` on `[0, pi]` with Dirichlet walls, in
/// units of the well's ground energy.
pub fn solve_square_well(points: usize, count: usize) -> Result<Vec<f64>> {
    let grid = Grid::new(0.0, core::f64::consts::PI, points)?;
    let op = grid.discretize(1.0, |_| 0.0)?;
    eig_tridiagonal(&op, count)
}
