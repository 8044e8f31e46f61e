//! Truncated-basis diagonalization of the oscillator with an `epsilon x^4`
//! perturbation, in units `hbar = m = omega = 1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ladder::{build_ladder_matrices, LadderSpec};
use crate::matrix::Matrix;
use crate::oracle::eigen::eig_symmetric;

/// Basis growth used for the truncation sensitivity check.
pub const SENSITIVITY_GROWTH: usize = 20;
/// Largest tolerated level shift when the basis grows.
pub const SENSITIVITY_LIMIT: f64 = 1e-8;

/// Position operator `x = eta^dagger + eta` from the oscillator ladder
/// `C_k = sqrt((k+1)/2)`.
pub fn position_matrix(dim: usize) -> Result<Matrix<f64>> {
    let coeffs: Vec<f64> = (0..dim).map(|k| libm::sqrt((k as f64 + 1.0) / 2.0)).collect();
    let spec = LadderSpec::from_real(&coeffs, false)?;
    let rep = build_ladder_matrices(&spec, dim)?;
    Ok((&rep.raise + &rep.lower).map(|z| z.re))
}

fn hamiltonian(epsilon: f64, dim: usize) -> Result<Matrix<f64>> {
    let x = position_matrix(dim)?;
    let x2 = &x * &x;
    let x4 = &x2 * &x2;
    let unperturbed: Vec<f64> = (0..dim).map(|k| k as f64 + 0.5).collect();
    Ok(&Matrix::from_diagonal(&unperturbed) + &x4.map(|v| epsilon * v))
}

fn lowest(epsilon: f64, dim: usize, count: usize) -> Result<Vec<f64>> {
    eig_symmetric(&hamiltonian(epsilon, dim)?, count)
}

/// Lowest `count` eigenvalues of `diag(k + 1/2) + epsilon x^4` in a `dim`-state
/// basis, rejected if enlarging the basis moves any of them by more than
/// [`SENSITIVITY_LIMIT`].
pub fn solve_perturbed_ho(epsilon: f64, dim: usize, count: usize) -> Result<Vec<f64>> {
    if !epsilon.is_finite() {
        return Err(Error::invalid("epsilon", "must be finite"));
    }
    if dim < count + SENSITIVITY_GROWTH {
        return Err(Error::invalid("basis_dim", "basis must exceed the level count by at least 20"));
    }
    let levels = lowest(epsilon, dim, count)?;
    let larger = lowest(epsilon, dim + SENSITIVITY_GROWTH, count)?;
    for (level, (x, y)) in levels.iter().zip(&larger).enumerate() {
        let shift = (x - y).abs();
        if shift.is_nan() || shift > SENSITIVITY_LIMIT {
            return Err(Error::TruncationWarning { level, shift });
        }
    }
    Ok(levels)
}

/// First-order energy shifts estimated from the diagonalization. Plain:
/// `E(eps) - E(0)`. Richardson: `4 (E(eps/2) - E(0)) - (E(eps) - E(0))`,
/// which removes the `eps^2` term.
pub fn first_order_shifts(epsilon: f64, dim: usize, count: usize, richardson: bool) -> Result<Vec<f64>> {
    let base = solve_perturbed_ho(0.0, dim, count)?;
    let full = solve_perturbed_ho(epsilon, dim, count)?;
    if !richardson {
        return Ok(full.iter().zip(&base).map(|(e, e0)| e - e0).collect());
    }
    let half = solve_perturbed_ho(0.5 * epsilon, dim, count)?;
    Ok(full
        .iter()
        .zip(&half)
        .zip(&base)
        .map(|((e, eh), e0)| 4.0 * (eh - e0) - (e - e0))
        .collect())
}
