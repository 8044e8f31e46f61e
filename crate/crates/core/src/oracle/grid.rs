use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::eigen::TridiagonalOperator;

/// Uniform grid on `[q_min, q_max]`. The end points carry Dirichlet
/// boundary values; the `points - 2` interior nodes are the unknowns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub q_min: f64,
    pub q_max: f64,
    pub points: usize,
}

impl Grid {
    pub const MIN_POINTS: usize = 100;

    pub fn new(q_min: f64, q_max: f64, points: usize) -> Result<Self> {
        let grid = Self {
            q_min,
            q_max,
            points,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.q_min.is_finite() && self.q_max.is_finite()) || self.q_min >= self.q_max {
            return Err(Error::invalid("q_min", "grid needs finite q_min < q_max"));
        }
        if self.points < Self::MIN_POINTS {
            return Err(Error::invalid("points", "grid needs at least 100 points"));
        }
        Ok(())
    }

    /// Grid for a singular potential: starts at `q_min > 0`.
    pub fn radial(q_min: f64, q_max: f64, points: usize) -> Result<Self> {
        if q_min <= 0.0 {
            return Err(Error::invalid("q_min", "singular potentials need q_min > 0"));
        }
        Self::new(q_min, q_max, points)
    }

    pub fn spacing(&self) -> f64 {
        (self.q_max - self.q_min) / (self.points - 1) as f64
    }

    pub fn interior(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (1..self.points - 1).map(move |i| self.q_min + i as f64 * h)
    }

    /// Three-point discretization of `-kinetic * d^2/dq^2 + potential(q)`.
    pub fn discretize(&self, kinetic: f64, potential: impl Fn(f64) -> f64) -> Result<TridiagonalOperator> {
        self.validate()?;
        let h2 = self.spacing() * self.spacing();
        let diag: Vec<f64> = self.interior().map(|q| 2.0 * kinetic / h2 + potential(q)).collect();
        let off = alloc::vec![-kinetic / h2; diag.len() - 1];
        TridiagonalOperator::new(diag, off)
    }

    /// The same interval with `factor` times as many intervals.
    pub fn refined(&self, factor: usize) -> Self {
        Self {
            points: (self.points - 1) * factor + 1,
            ..*self
        }
    }
}

/// Cell-centred discretization of the radial equation in `R = u / q^((N-1)/2)`:
///
/// ```text
/// -kinetic (1/q^(N-1)) (q^(N-1) R')' + [kinetic L/q^2 + V(q)] R = E R
/// ```
///
/// with `L = l(l+N-2)`. Nodes sit at `(i - 1/2) h`; the flux through the
/// origin vanishes, so no boundary value is imposed there, and `R = 0` at
/// `q_max`. The generalized problem `K R = E W R` with `W = diag(q^(N-1))` is
/// returned in the symmetric form `W^(-1/2) K W^(-1/2)`.
///
/// Used where `u` itself is not smooth at the origin (`Lambda < 0`), which
/// breaks the second-order convergence of the plain three-point stencil.
pub fn discretize_regular(
    q_max: f64,
    points: usize,
    dims: u32,
    kinetic: f64,
    angular: f64,
    potential: impl Fn(f64) -> f64,
) -> Result<TridiagonalOperator> {
    if points < Grid::MIN_POINTS {
        return Err(Error::invalid("points", "grid needs at least 100 points"));
    }
    if !(q_max.is_finite() && q_max > 0.0) {
        return Err(Error::invalid("q_max", "q_max must be positive"));
    }
    let unknowns = points - 2;
    let h = q_max / (unknowns as f64 + 0.5);
    let power = |q: f64| libm::pow(q, (dims - 1) as f64);
    let node = |i: usize| (i as f64 + 0.5) * h;
    let face = |i: usize| (i as f64 + 1.0) * h;
    let weight: Vec<f64> = (0..unknowns).map(|i| power(node(i))).collect();
    let h2 = h * h;
    let diag = (0..unknowns)
        .map(|i| {
            let q = node(i);
            let inner = if i == 0 { 0.0 } else { power(face(i - 1)) };
            let stiffness = kinetic * (inner + power(face(i))) / h2;
            stiffness / weight[i] + kinetic * angular / (q * q) + potential(q)
        })
        .collect();
    let off = (0..unknowns - 1)
        .map(|i| -kinetic * power(face(i)) / h2 / libm::sqrt(weight[i] * weight[i + 1]))
        .collect();
    TridiagonalOperator::new(diag, off)
}
