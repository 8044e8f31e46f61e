//! Ladder operators built from a coefficient sequence.
//!
//! A ladder is fixed by amplitudes `C_k`: the raising operator sends `|k>` to
//! `C_k |k+1>` and the lowering operator sends `|k>` to `C*_{k-1} |k-1>`. The
//! anticommutator `S` and commutator `A` of the pair are then diagonal in the
//! ladder basis, with eigenvalues
//!
//! ```text
//! s_k = |C_k|^2 + |C_{k-1}|^2      a_k = |C_k|^2 - |C_{k-1}|^2
//! ```
//!
//! and `C_{-1} = 0`. Every spectrum the solver layer produces is checked
//! against the relations these imply (see [`SpectrumPair::check`]).

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Condition, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Tolerance};

/// Coefficient sequence `C_0 .. C_{K-1}` of a ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderSpec {
    coeffs: Vec<Complex64>,
    finite: bool,
}

impl LadderSpec {
    /// A truncated view of an unbounded ladder.
    pub fn unbounded(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("coeffs", "ladder needs at least one coefficient"));
        }
        Ok(Self {
            coeffs,
            finite: false,
        })
    }

    /// A finite ladder whose top state is the last index; its coefficient
    /// must vanish.
    pub fn finite(coeffs: Vec<Complex64>) -> Result<Self> {
        let mut spec = Self::unbounded(coeffs)?;
        let top = spec.coeffs.len() - 1;
        if !spec.coeffs[top].is_zero() {
            return Err(Error::violation(top, Condition::Top));
        }
        spec.finite = true;
        Ok(spec)
    }

    pub fn from_real(coeffs: &[f64], finite: bool) -> Result<Self> {
        let coeffs = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
        if finite {
            Self::finite(coeffs)
        } else {
            Self::unbounded(coeffs)
        }
    }

    /// Real nonnegative amplitudes `C_k = sqrt(|C_k|^2)`.
    pub fn from_squared_moduli(c_sq: &[f64], finite: bool) -> Result<Self> {
        if let Some(k) = c_sq.iter().position(|&c| c < 0.0) {
            return Err(Error::violation(k, Condition::NegativeModulus));
        }
        let amps: Vec<f64> = c_sq.iter().map(|&c| libm::sqrt(c)).collect();
        Self::from_real(&amps, finite)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn k_max(&self) -> Option<usize> {
        self.finite.then(|| self.coeffs.len() - 1)
    }

    pub fn squared_moduli(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm_sqr()).collect()
    }
}

/// Eigenvalues `s_k` of `S` and `a_k` of `A`, indexed from the ground state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPair<T> {
    pub s: Vec<T>,
    pub a: Vec<T>,
    /// The last index is the top of a finite ladder.
    #[serde(default)]
    pub finite: bool,
}

impl<T: Scalar> SpectrumPair<T> {
    pub fn new(s: Vec<T>, a: Vec<T>, finite: bool) -> Result<Self> {
        if s.len() != a.len() {
            return Err(Error::invalid(
                "a",
                alloc::format!("length {} differs from s length {}", a.len(), s.len()),
            ));
        }
        if s.is_empty() {
            return Err(Error::invalid("s", "spectrum needs at least one level"));
        }
        Ok(Self { s, a, finite })
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Checks the ground condition, the bound `s_k >= |a_k|`, adjacent-level
    /// consistency and, for finite ladders, the top condition. Reports the
    /// first failure in order of increasing `k`.
    pub fn check(&self, tol: &Tolerance) -> Result<()> {
        let n = self.len();
        for k in 0..n {
            let (s, a) = (&self.s[k], &self.a[k]);
            if k == 0 && !s.within(a, tol) {
                return Err(Error::violation(0, Condition::Ground));
            }
            if !(s.clone() - a.abs()).nonnegative(tol) {
                return Err(Error::violation(k, Condition::Bound));
            }
            if k + 1 < n {
                let lhs = self.s[k + 1].clone() - s.clone();
                let rhs = self.a[k + 1].clone() + a.clone();
                if !lhs.within(&rhs, tol) {
                    return Err(Error::violation(k, Condition::Adjacent));
                }
            }
            if k + 1 == n && self.finite && !s.within(&-a.clone(), tol) {
                return Err(Error::violation(k, Condition::Top));
            }
        }
        Ok(())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> SpectrumPair<U> {
        SpectrumPair {
            s: self.s.iter().map(&f).collect(),
            a: self.a.iter().map(&f).collect(),
            finite: self.finite,
        }
    }
}

/// `s_k`, `a_k` from squared moduli `|C_k|^2`. Works in any [`Scalar`]; with
/// rationals the result is exact.
pub fn spectrum_from_squared_moduli<T: Scalar>(c_sq: &[T], finite: bool) -> Result<SpectrumPair<T>> {
    if let Some(k) = c_sq.iter().position(|c| *c < T::zero()) {
        return Err(Error::violation(k, Condition::NegativeModulus));
    }
    if finite && c_sq.last().is_some_and(|c| !c.is_zero()) {
        return Err(Error::violation(c_sq.len() - 1, Condition::Top));
    }
    let mut s = Vec::with_capacity(c_sq.len());
    let mut a = Vec::with_capacity(c_sq.len());
    let mut below = T::zero();
    for c in c_sq {
        s.push(c.clone() + below.clone());
        a.push(c.clone() - below);
        below = c.clone();
    }
    SpectrumPair::new(s, a, finite)
}

pub fn spectrum_from_coeffs(spec: &LadderSpec) -> SpectrumPair<f64> {
    spectrum_from_squared_moduli(&spec.squared_moduli(), spec.finite)
        .expect("a validated LadderSpec always yields a spectrum")
}

/// Recovers `|C_k|^2 = (s_k + a_k) / 2`, cross-checked against
/// `(s_{k+1} - a_{k+1}) / 2` for every interior `k`.
pub fn coeffs_from_spectrum<T: Scalar>(pair: &SpectrumPair<T>, tol: &Tolerance) -> Result<Vec<T>> {
    if !pair.s[0].within(&pair.a[0], tol) {
        return Err(Error::violation(0, Condition::Ground));
    }
    let n = pair.len();
    let mut c_sq = Vec::with_capacity(n);
    for k in 0..n {
        let c = (pair.s[k].clone() + pair.a[k].clone()).half();
        if !c.nonnegative(tol) {
            return Err(Error::violation(k, Condition::NegativeModulus));
        }
        if k + 1 < n {
            let from_above = (pair.s[k + 1].clone() - pair.a[k + 1].clone()).half();
            if !c.within(&from_above, tol) {
                return Err(Error::violation(k, Condition::Adjacent));
            }
        }
        c_sq.push(c);
    }
    if pair.finite && !c_sq[n - 1].within(&T::zero(), tol) {
        return Err(Error::violation(n - 1, Condition::Top));
    }
    Ok(c_sq)
}

/// `s_k` from `a_k` by stepping `s_{k+1} = s_k + a_{k+1} + a_k` up from
/// `s_0 = a_0`.
pub fn iterate_consistency<T: Scalar>(a: &[T]) -> Vec<T> {
    let mut s: Vec<T> = Vec::with_capacity(a.len());
    for k in 0..a.len() {
        let next = match k {
            0 => a[0].clone(),
            _ => s[k - 1].clone() + a[k].clone() + a[k - 1].clone(),
        };
        s.push(next);
    }
    s
}

/// `s_k = a_k + 2 * sum_{i<k} (-1)^(k-1-i) s_i`, the closed form of the same
/// recurrence written over the lower `s_i`.
pub fn recurrence_closed_sum<T: Scalar>(a: &[T]) -> Vec<T> {
    let mut s: Vec<T> = Vec::with_capacity(a.len());
    for (k, ak) in a.iter().enumerate() {
        let mut alternating = T::zero();
        for (i, si) in s.iter().enumerate() {
            if (k - 1 - i) % 2 == 0 {
                alternating = alternating + si.clone();
            } else {
                alternating = alternating - si.clone();
            }
        }
        s.push(ak.clone() + T::two() * alternating);
    }
    s
}

/// Truncated matrix realization of a ladder in a `dim`-state basis.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    pub dim: usize,
    pub raise: Matrix<Complex64>,
    pub lower: Matrix<Complex64>,
    /// `S = lower * raise + raise * lower`
    pub s_mat: Matrix<Complex64>,
    /// `A = lower * raise - raise * lower`
    pub a_mat: Matrix<Complex64>,
}

impl MatrixRep {
    /// Real parts of the diagonals of `S` and `A`, without the top row, whose
    /// `s` entry is missing the `|C_{dim-1}|^2` contribution cut off by the
    /// truncation.
    pub fn trusted_diagonals(&self) -> (Vec<f64>, Vec<f64>) {
        let keep = self.dim.saturating_sub(1);
        let s = self.s_mat.diagonal().iter().take(keep).map(|z| z.re).collect();
        let a = self.a_mat.diagonal().iter().take(keep).map(|z| z.re).collect();
        (s, a)
    }
}

pub fn build_ladder_matrices(spec: &LadderSpec, dim: usize) -> Result<MatrixRep> {
    let available = spec.len() + 1;
    if dim > available {
        return Err(Error::DimensionError {
            requested: dim,
            available,
        });
    }
    if dim == 0 {
        return Err(Error::invalid("dim", "matrix dimension must be positive"));
    }
    let mut raise = Matrix::zeros(dim);
    for k in 0..dim - 1 {
        raise[(k + 1, k)] = spec.coeffs[k];
    }
    let lower = raise.adjoint();
    let down_up = &lower * &raise;
    let up_down = &raise * &lower;
    Ok(MatrixRep {
        dim,
        s_mat: &down_up + &up_down,
        a_mat: &down_up - &up_down,
        raise,
        lower,
    })
}

/// A ladder whose operators move `step` levels at a time.
#[derive(Debug, Clone, PartialEq)]
pub struct TStepSpec {
    step: usize,
    coeffs: Vec<Complex64>,
}

impl TStepSpec {
    pub fn new(step: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if step == 0 {
            return Err(Error::invalid("step", "step must be positive"));
        }
        if coeffs.is_empty() {
            return Err(Error::invalid("coeffs", "ladder needs at least one coefficient"));
        }
        Ok(Self { step, coeffs })
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }
}

/// Spectra of `S^(T)` and `A^(T)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TStepSpectrum<T> {
    pub step: usize,
    pub s: Vec<T>,
    pub a: Vec<T>,
}

impl<T: Scalar> TStepSpectrum<T> {
    /// Checks `s_{k+T} - s_k = a_{k+T} + a_k` and `s_k = a_k` for `k < T`.
    pub fn check(&self, tol: &Tolerance) -> Result<()> {
        let t = self.step;
        for k in 0..self.s.len() {
            if k < t && !self.s[k].within(&self.a[k], tol) {
                return Err(Error::violation(k, Condition::Ground));
            }
            if k + t < self.s.len() {
                let lhs = self.s[k + t].clone() - self.s[k].clone();
                let rhs = self.a[k + t].clone() + self.a[k].clone();
                if !lhs.within(&rhs, tol) {
                    return Err(Error::violation(k, Condition::Adjacent));
                }
            }
        }
        Ok(())
    }

    /// `|C_k^(T)|^2 = (s_k + a_k) / 2`.
    pub fn squared_moduli(&self) -> Vec<T> {
        self.s
            .iter()
            .zip(&self.a)
            .map(|(s, a)| (s.clone() + a.clone()).half())
            .collect()
    }
}

pub fn t_step_from_squared_moduli<T: Scalar>(step: usize, c_sq: &[T]) -> TStepSpectrum<T> {
    let below = |k: usize| {
        if k >= step {
            c_sq[k - step].clone()
        } else {
            T::zero()
        }
    };
    let s = (0..c_sq.len()).map(|k| c_sq[k].clone() + below(k)).collect();
    let a = (0..c_sq.len()).map(|k| c_sq[k].clone() - below(k)).collect();
    TStepSpectrum { step, s, a }
}

pub fn build_t_step(tspec: &TStepSpec) -> TStepSpectrum<f64> {
    let c_sq: Vec<f64> = tspec.coeffs.iter().map(|c| c.norm_sqr()).collect();
    t_step_from_squared_moduli(tspec.step, &c_sq)
}

/// Solves the `step`-level relations for `|C_k^(T)|^2` given the spectrum of
/// `S^(T)`: `a_k = s_k` below the first step, then
/// `a_{k+T} = s_{k+T} - s_k - a_k`.
pub fn t_step_from_s<T: Scalar>(step: usize, s: &[T]) -> Result<Vec<T>> {
    if step == 0 {
        return Err(Error::invalid("step", "step must be positive"));
    }
    let mut a: Vec<T> = Vec::with_capacity(s.len());
    for k in 0..s.len() {
        let next = if k < step {
            s[k].clone()
        } else {
            s[k].clone() - s[k - step].clone() - a[k - step].clone()
        };
        a.push(next);
    }
    let spectrum = TStepSpectrum {
        step,
        s: s.to_vec(),
        a,
    };
    let c_sq = spectrum.squared_moduli();
    match c_sq.iter().position(|c| *c < T::zero()) {
        Some(k) => Err(Error::violation(k, Condition::NegativeModulus)),
        None => Ok(c_sq),
    }
}

/// `|C_k C_{k+1} ... C_{k+T-1}|^2`, the squared amplitude picked up by `T`
/// successive single-step raisings from `|k>`.
pub fn composed_squared_moduli<T: Scalar>(c_sq: &[T], step: usize) -> Vec<T> {
    if step == 0 || c_sq.len() < step {
        return Vec::new();
    }
    c_sq.windows(step)
        .map(|w| w.iter().cloned().fold(T::one(), |acc, c| acc * c))
        .collect()
}

/// Compares composed single-step amplitudes with the `step`-level ladder whose
/// `S^(T)` has spectrum `s_target`. Entry `k` is `true` where they agree.
pub fn composition_matches_t_step<T: Scalar>(
    c_sq: &[T],
    step: usize,
    s_target: &[T],
    tol: &Tolerance,
) -> Result<Vec<bool>> {
    let composed = composed_squared_moduli(c_sq, step);
    let direct = t_step_from_s(step, s_target)?;
    Ok(composed
        .iter()
        .zip(&direct)
        .map(|(x, y)| x.within(y, tol))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};
    use alloc::vec;

    fn real(c: &[f64]) -> Vec<Complex64> {
        c.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn single_coefficient_ground_state() {
        let spec = LadderSpec::unbounded(vec![Complex64::new(0.0, 2.0)]).unwrap();
        let pair = spectrum_from_coeffs(&spec);
        assert_eq!(pair.s, vec![4.0]);
        assert_eq!(pair.a, vec![4.0]);
    }

    #[test]
    fn square_well_coefficients_exact() {
        let c_sq: Vec<Rational> = (0..4).map(|k| ratio(k * (k + 1), 2)).collect();
        let pair = spectrum_from_squared_moduli(&c_sq, false).unwrap();
        let ints = |v: &[i128]| v.iter().map(|&x| ratio(x, 1)).collect::<Vec<_>>();
        assert_eq!(pair.s, ints(&[0, 1, 4, 9]));
        assert_eq!(pair.a, ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn angular_j1_coefficients() {
        let c_sq = vec![ratio(1, 1), ratio(1, 1), ratio(0, 1)];
        let pair = spectrum_from_squared_moduli(&c_sq, true).unwrap();
        assert_eq!(pair.s, vec![ratio(1, 1), ratio(2, 1), ratio(1, 1)]);
        assert_eq!(pair.a, vec![ratio(1, 1), ratio(0, 1), ratio(-1, 1)]);
        pair.check(&Tolerance::exact()).unwrap();
    }

    #[test]
    fn finite_ladder_requires_zero_top() {
        assert_eq!(
            LadderSpec::finite(real(&[1.0, 1.0])),
            Err(Error::violation(1, Condition::Top))
        );
        assert!(LadderSpec::unbounded(Vec::new()).is_err());
    }

    #[test]
    fn coeffs_from_oscillator_spectrum() {
        let pair = SpectrumPair::new(vec![0.5, 1.5, 2.5], vec![0.5; 3], false).unwrap();
        let c = coeffs_from_spectrum(&pair, &Tolerance::default()).unwrap();
        assert_eq!(c, vec![0.5, 1.0, 1.5]);
    }

    #[test]
    fn coeffs_from_single_level() {
        let pair = SpectrumPair::new(vec![ratio(7, 3)], vec![ratio(7, 3)], false).unwrap();
        assert_eq!(
            coeffs_from_spectrum(&pair, &Tolerance::exact()).unwrap(),
            vec![ratio(7, 3)]
        );
    }

    #[test]
    fn coeffs_from_tampered_spectrum() {
        let pair = SpectrumPair::new(vec![1.0, 2.0], vec![1.0, 0.5], false).unwrap();
        assert_eq!(
            coeffs_from_spectrum(&pair, &Tolerance::default()),
            Err(Error::violation(0, Condition::Adjacent))
        );
        assert_eq!(
            pair.check(&Tolerance::default()),
            Err(Error::violation(0, Condition::Adjacent))
        );
    }

    #[test]
    fn oscillator_matrices() {
        let c: Vec<f64> = (0..4).map(|k| libm::sqrt((k as f64 + 1.0) / 2.0)).collect();
        let spec = LadderSpec::from_real(&c, false).unwrap();
        let rep = build_ladder_matrices(&spec, 4).unwrap();
        assert!(rep.s_mat.is_diagonal() && rep.a_mat.is_diagonal());
        assert_eq!(rep.lower, rep.raise.adjoint());
        let (_, a) = rep.trusted_diagonals();
        for x in a {
            assert!((x - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn zero_coefficient_matrix() {
        let spec = LadderSpec::from_real(&[0.0], false).unwrap();
        let rep = build_ladder_matrices(&spec, 2).unwrap();
        assert_eq!(rep.raise, Matrix::zeros(2));
        assert_eq!(
            build_ladder_matrices(&spec, 3).unwrap_err(),
            Error::DimensionError {
                requested: 3,
                available: 2
            }
        );
    }

    #[test]
    fn square_well_matrix_diagonal() {
        let c: Vec<f64> = (0..4).map(|k| libm::sqrt((k * (k + 1)) as f64 / 2.0)).collect();
        let spec = LadderSpec::from_real(&c, false).unwrap();
        let rep = build_ladder_matrices(&spec, 5).unwrap();
        let (s, _) = rep.trusted_diagonals();
        for (x, want) in s.iter().zip([0.0, 1.0, 4.0, 9.0]) {
            assert!((x - want).abs() < 1e-12);
        }
    }

    #[test]
    fn t_step_unit_coefficients() {
        let spec = TStepSpec::new(2, real(&[1.0; 6])).unwrap();
        let t = build_t_step(&spec);
        assert_eq!(t.s, vec![1.0, 1.0, 2.0, 2.0, 2.0, 2.0]);
        assert_eq!(t.a, vec![1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        t.check(&Tolerance::exact()).unwrap();
    }

    #[test]
    fn t_step_one_is_single_step() {
        let c = real(&[0.3, 1.2, 2.0, 0.7]);
        let t = build_t_step(&TStepSpec::new(1, c.clone()).unwrap());
        let pair = spectrum_from_coeffs(&LadderSpec::unbounded(c).unwrap());
        assert_eq!(t.s, pair.s);
        assert_eq!(t.a, pair.a);
    }

    #[test]
    fn recurrence_forms_agree_exactly() {
        let a: Vec<Rational> = [3, -1, 4, 1, -5, 9].iter().map(|&x| ratio(x, 7)).collect();
        assert_eq!(iterate_consistency(&a), recurrence_closed_sum(&a));
    }
}
