//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.
//!
//! Bisection is slower than implicit QL but deterministic, trivially
//! reentrant and accurate to the last few ulps for the lowest eigenvalues,
//! which is all the oracles need. Dense symmetric matrices are first reduced
//! with Householder reflections.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

const MAX_BISECTIONS: usize = 2048;

/// Symmetric tridiagonal matrix, e.g. a three-point discretization of
/// `-d^2/dq^2 + V(q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::invalid("diag", "operator has no rows"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::invalid("offdiag", "must have one entry fewer than diag"));
        }
        if diag.iter().chain(&offdiag).any(|x| !x.is_finite()) {
            return Err(Error::invalid("diag", "entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin interval containing the whole spectrum.
    fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0) * n as f64;
        (lo - pad, hi + pad)
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE
            * self
                .offdiag
                .iter()
                .map(|e| e * e)
                .fold(1.0f64, f64::max);
        let mut count = 0;
        let mut d = self.diag[0] - x;
        for i in 0..self.dim() {
            if i > 0 {
                d = (self.diag[i] - x) - self.offdiag[i - 1] * self.offdiag[i - 1] / d;
            }
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }
}

/// The `count` smallest eigenvalues in ascending order.
pub fn eig_tridiagonal(op: &TridiagonalOperator, count: usize) -> Result<Vec<f64>> {
    if count > op.dim() {
        return Err(Error::DimensionError {
            requested: count,
            available: op.dim(),
        });
    }
    if op.dim() == 1 {
        return Ok(op.diag[..count].to_vec());
    }
    let (lo0, hi0) = op.gershgorin();
    let zero_floor = libm::sqrt(f64::MIN_POSITIVE) * lo0.abs().max(hi0.abs());
    let mut out: Vec<f64> = Vec::with_capacity(count);
    for index in 0..count {
        // Eigenvalues are ascending, so the previous one is a valid floor.
        let mut lo = out.last().copied().unwrap_or(lo0).min(hi0);
        let mut hi = hi0;
        let mut iterations = 0;
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if op.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
            iterations += 1;
            if iterations > MAX_BISECTIONS {
                return Err(Error::ConvergenceFailure {
                    iterations,
                    index,
                    width: hi - lo,
                });
            }
        }
        // Far below the attainable absolute accuracy; an exact zero would
        // otherwise come back as a subnormal of either sign.
        let value = 0.5 * (lo + hi);
        out.push(if value.abs() <= zero_floor { 0.0 } else { value });
    }
    Ok(out)
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// Only the lower triangle of `mat` is read.
pub fn tridiagonalize(mat: &Matrix<f64>) -> Result<TridiagonalOperator> {
    let n = mat.dim();
    if n == 0 {
        return Err(Error::invalid("mat", "matrix has no rows"));
    }
    let mut a = mat.clone();
    for i in 0..n {
        for j in 0..i {
            a[(j, i)] = a[(i, j)];
        }
    }
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut v = alloc::vec![0.0; n];
    let mut p = alloc::vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        // Reflect column k below the subdiagonal onto e_{k+1}.
        let norm = (k + 1..n).map(|i| a[(i, k)] * a[(i, k)]).sum::<f64>();
        let norm = libm::sqrt(norm);
        if norm == 0.0 {
            offdiag.push(0.0);
            continue;
        }
        let alpha = if a[(k + 1, k)] > 0.0 { -norm } else { norm };
        for i in 0..n {
            v[i] = if i > k { a[(i, k)] } else { 0.0 };
        }
        v[k + 1] -= alpha;
        let vnorm2: f64 = v[k + 1..].iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            offdiag.push(a[(k + 1, k)]);
            continue;
        }
        let tau = 2.0 / vnorm2;
        // A <- H A H with H = I - tau v v^T, via p = tau A v, w = p - (tau/2)(v.p) v.
        for i in k + 1..n {
            p[i] = tau * (k + 1..n).map(|j| a[(i, j)] * v[j]).sum::<f64>();
        }
        let vp: f64 = (k + 1..n).map(|i| v[i] * p[i]).sum();
        let half = 0.5 * tau * vp;
        for i in k + 1..n {
            p[i] -= half * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[(i, j)] -= v[i] * p[j] + p[i] * v[j];
            }
        }
        offdiag.push(alpha);
        for i in k + 2..n {
            a[(i, k)] = 0.0;
            a[(k, i)] = 0.0;
        }
        a[(k + 1, k)] = alpha;
        a[(k, k + 1)] = alpha;
    }
    if n >= 2 {
        offdiag.push(a[(n - 1, n - 2)]);
    }
    TridiagonalOperator::new(a.diagonal(), offdiag)
}

/// The `count` smallest eigenvalues of a dense symmetric matrix.
pub fn eig_symmetric(mat: &Matrix<f64>, count: usize) -> Result<Vec<f64>> {
    eig_tridiagonal(&tridiagonalize(mat)?, count)
}
