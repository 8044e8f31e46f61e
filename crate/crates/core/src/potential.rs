//! Problem data shared by the algebraic models and the numerical oracles.

use crate::error::{Error, Result};
use crate::scalar::{ratio, Rational};

/// Strength `Lambda = (N-1)(N-3)/4 + l(l+N-2)` of the `1/q^2` term in the
/// radial equation for `u = r R` in `N` dimensions.
pub fn centrifugal_strength(dims: u32, l: u32) -> Result<Rational> {
    if !(1..=3).contains(&dims) {
        return Err(Error::invalid("N", "dimension must be 1, 2 or 3"));
    }
    if dims == 1 && l != 0 {
        return Err(Error::invalid("l", "l must be 0 in one dimension"));
    }
    let (n, l) = (dims as i128, l as i128);
    Ok(ratio((n - 1) * (n - 3), 4) + ratio(l * (l + n - 2), 1))
}

/// `Lambda_D = l(l+1) - (alpha Z)^2` for the relativistic radial equation.
pub fn dirac_strength(l: u32, alpha_fs: f64, charge: u32) -> f64 {
    let l = l as f64;
    let az = alpha_fs * charge as f64;
    l * (l + 1.0) - az * az
}
