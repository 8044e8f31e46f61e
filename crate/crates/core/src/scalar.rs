//! Number types the algebraic layer runs on.
//!
//! Everything in the ladder and solver modules is generic over [`Scalar`], so
//! the same code path runs in exact rationals (for the textbook models, whose
//! spectra are rational) and in `f64` (random coefficients, the Dirac model).

use core::fmt::Debug;

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Exact rational number used for all closed-form spectra.
pub type Rational = Ratio<i128>;

/// Shorthand for building a [`Rational`].
pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Absolute plus relative tolerance, `|x - y| <= abs + rel * max(|x|, |y|)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    pub const fn exact() -> Self {
        Self { abs: 0.0, rel: 0.0 }
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        let scale = libm::fmax(libm::fabs(x), libm::fabs(y));
        libm::fabs(x - y) <= self.abs + self.rel * scale
    }
}

impl Default for Tolerance {
    /// Default consistency tolerance, 1e-10 absolute plus 1e-10 relative.
    fn default() -> Self {
        Self::new(1e-10, 1e-10)
    }
}

pub trait Scalar: Clone + PartialOrd + Debug + Num + Signed {
    /// Equality up to `tol`. Exact types ignore the tolerance.
    fn within(&self, other: &Self, tol: &Tolerance) -> bool;

    /// `self >= -tol`, for checking quantities that must be nonnegative.
    fn nonnegative(&self, tol: &Tolerance) -> bool;

    /// Square root, or `None` when it is not representable in `Self`.
    fn try_sqrt(&self) -> Option<Self>;

    fn from_integer(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half(&self) -> Self {
        self.clone() / Self::two()
    }
}

impl Scalar for f64 {
    fn within(&self, other: &Self, tol: &Tolerance) -> bool {
        tol.close(*self, *other)
    }

    fn nonnegative(&self, tol: &Tolerance) -> bool {
        *self >= -tol.abs
    }

    fn try_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| libm::sqrt(*self))
    }

    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn within(&self, other: &Self, _tol: &Tolerance) -> bool {
        self == other
    }

    fn nonnegative(&self, _tol: &Tolerance) -> bool {
        !self.is_negative()
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // Ratio keeps itself reduced, so numerator and denominator must both
        // be perfect squares.
        let (n, d) = (*self.numer(), *self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (rn * rn == n && rd * rd == d).then(|| Rational::new(rn, rd))
    }

    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n as i128)
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_only_for_perfect_squares() {
        assert_eq!(ratio(9, 4).try_sqrt(), Some(ratio(3, 2)));
        assert_eq!(ratio(0, 1).try_sqrt(), Some(ratio(0, 1)));
        assert_eq!(ratio(2, 1).try_sqrt(), None);
        assert_eq!(ratio(-1, 1).try_sqrt(), None);
    }

    #[test]
    fn tolerance_mixes_absolute_and_relative() {
        let tol = Tolerance::new(1e-10, 1e-10);
        assert!(tol.close(1e6, 1e6 + 1e-5));
        assert!(!tol.close(1.0, 1.0 + 1e-8));
        assert!(Tolerance::exact().close(0.5, 0.5));
    }
}
