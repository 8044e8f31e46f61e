//! Angular momentum check by rotation: `J_x` has the same spectrum as `J_3`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::oracle::eigen::{eig_tridiagonal, TridiagonalOperator};

/// Eigenvalues of `J_x = (J_+ + J_-) / 2` on the `2j + 1` states `|j m>`,
/// from the matrix elements `<m+1|J_+|m> = sqrt((j - m)(j + m + 1))`.
pub fn jx_eigenvalues(two_j: u32) -> Result<Vec<f64>> {
    let dim = two_j as usize + 1;
    let j = two_j as f64 / 2.0;
    let offdiag = (0..dim - 1)
        .map(|i| {
            let m = -j + i as f64;
            0.5 * libm::sqrt((j - m) * (j + m + 1.0))
        })
        .collect();
    let op = TridiagonalOperator::new(vec![0.0; dim], offdiag)?;
    eig_tridiagonal(&op, dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections() {
        assert_eq!(jx_eigenvalues(0).unwrap(), vec![0.0]);
        for two_j in 1..21u32 {
            let eig = jx_eigenvalues(two_j).unwrap();
            for (k, e) in eig.iter().enumerate() {
                let mu = -(two_j as f64) / 2.0 + k as f64;
                assert!((e - mu).abs() < 1e-12, "2j={two_j} k={k}: {e}");
                if mu == 0.0 {
                    assert_eq!(*e, 0.0);
                }
            }
        }
    }
}
