//! Spectra from the structure of the `a`/`s` relationship alone.
//!
//! Three cases are covered: a constant commutator (`a_k` independent of `k`),
//! the angular-momentum ladder, and the radial `B_{n-}` family where
//! `S = B^2 + (n^2 - 1 - 4 Lambda)` and `A = 2n B` for an auxiliary operator
//! `B` whose eigenvalues `b_k` are wanted.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Condition, Error, Result};
use crate::ladder::{coeffs_from_spectrum, SpectrumPair};
use crate::scalar::{ratio, Rational, Scalar, Tolerance};

/// Constant `a_k = a_value`: the spectrum is `s_k = a_value * (2k + 1)`.
pub fn solve_constant_gap<T: Scalar>(a_value: T, levels: usize) -> Result<SpectrumPair<T>> {
    if a_value <= T::zero() {
        return Err(Error::invalid("a_value", "commutator eigenvalue must be positive"));
    }
    if levels == 0 {
        return Err(Error::invalid("levels", "at least one level is required"));
    }
    let a = alloc::vec![a_value.clone(); levels];
    let mut s = Vec::with_capacity(levels);
    s.push(a_value.clone());
    for k in 1..levels {
        let next = s[k - 1].clone() + a[k].clone() + a[k - 1].clone();
        s.push(next);
    }
    let pair = SpectrumPair::new(s, a, false)?;
    pair.check(&Tolerance::exact())?;
    Ok(pair)
}

/// Eigendata of `J_3` on the `2j + 1` states of fixed `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularSpectrum {
    /// Twice the total angular momentum quantum number.
    pub two_j: u32,
    /// `mu_k = -j + k`, in units of hbar.
    pub mu: Vec<Rational>,
    /// `|C_k|^2` of the raising operator `J_+`.
    pub c_sq: Vec<Rational>,
}

impl AngularSpectrum {
    pub fn j(&self) -> Rational {
        ratio(self.two_j as i128, 2)
    }

    /// `lambda = j (j + 1)`, the eigenvalue of `J^2`.
    pub fn lambda(&self) -> Rational {
        let j = self.j();
        j * (j + Rational::from_integer(1))
    }

    /// `s_k = lambda - mu_k^2`, `a_k = -mu_k`, closed at the top.
    pub fn pair(&self) -> SpectrumPair<Rational> {
        let lambda = self.lambda();
        SpectrumPair {
            s: self.mu.iter().map(|m| lambda - m * m).collect(),
            a: self.mu.iter().map(|m| -m).collect(),
            finite: true,
        }
    }
}

pub fn solve_angular(two_j: i64) -> Result<AngularSpectrum> {
    if two_j < 0 {
        return Err(Error::invalid("two_j", "2j must be a nonnegative integer"));
    }
    let two_j = u32::try_from(two_j).map_err(|_| Error::invalid("two_j", "2j is too large"))?;
    let j = ratio(two_j as i128, 2);
    let one = Rational::from_integer(1);
    let mu: Vec<Rational> = (0..=two_j as i128).map(|k| -j + k).collect();
    let c_sq = mu.iter().map(|m| ((j + m + one) * (j - m)) / 2).collect();
    let spectrum = AngularSpectrum { two_j, mu, c_sq };

    // The coefficients must also follow from the S/A eigenvalues alone.
    let from_pair = coeffs_from_spectrum(&spectrum.pair(), &Tolerance::exact())?;
    if from_pair != spectrum.c_sq {
        let k = from_pair
            .iter()
            .zip(&spectrum.c_sq)
            .position(|(x, y)| x != y)
            .unwrap_or(0);
        return Err(Error::violation(k, Condition::ClosedForm));
    }
    spectrum.pair().check(&Tolerance::exact())?;
    Ok(spectrum)
}

/// Which root of `b_0 = n +- sqrt(1 + 4 Lambda)` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignChoice {
    Plus,
    Minus,
    /// The unique nonnegative root; fails when both roots qualify.
    AutoNonNegative,
}

/// The radial factorization problem for step exponent `n` and strength
/// `Lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct BnProblem<T> {
    pub n: u32,
    pub lambda: T,
    pub sign: SignChoice,
}

impl<T: Scalar> BnProblem<T> {
    pub fn new(n: u32, lambda: T, sign: SignChoice) -> Result<Self> {
        let problem = Self { n, lambda, sign };
        problem.validate()?;
        Ok(problem)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n", "step exponent must be at least 1"));
        }
        if self.discriminant() < T::zero() {
            return Err(Error::invalid("lambda", "1 + 4*lambda must be nonnegative"));
        }
        Ok(())
    }

    /// `1 + 4 Lambda`.
    pub fn discriminant(&self) -> T {
        T::one() + T::from_integer(4) * self.lambda.clone()
    }

    fn step(&self) -> T {
        T::from_integer(self.n as i64)
    }

    /// `n^2 - 1 - 4 Lambda`, the constant shift between `S` and `B^2`.
    pub fn shift(&self) -> T {
        let n = self.step();
        n.clone() * n - self.discriminant()
    }

    /// Ground eigenvalue of `B` after sign resolution.
    pub fn ground(&self) -> Result<T> {
        self.validate()?;
        let root = self.discriminant().try_sqrt().ok_or(Error::IrrationalRoot)?;
        let n = self.step();
        let plus = n.clone() + root.clone();
        let minus = n - root.clone();
        match self.sign {
            SignChoice::Plus => Ok(plus),
            SignChoice::Minus => Ok(minus),
            SignChoice::AutoNonNegative if root.is_zero() || minus < T::zero() => Ok(plus),
            SignChoice::AutoNonNegative => Err(Error::UnresolvedSign {
                minus: minus.to_f64(),
                plus: plus.to_f64(),
            }),
        }
    }
}

/// Eigenvalues `b_k = b_0 + 2 n k` of `B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BnSpectrum<T> {
    pub n: u32,
    pub b0: T,
    pub levels: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BnSolution<T> {
    pub spectrum: BnSpectrum<T>,
    /// `s_k = b_k^2 + n^2 - 1 - 4 Lambda`, `a_k = 2 n b_k`.
    pub pair: SpectrumPair<T>,
}

pub fn solve_bn<T: Scalar>(problem: &BnProblem<T>, levels: usize) -> Result<BnSolution<T>> {
    if levels == 0 {
        return Err(Error::invalid("levels", "at least one level is required"));
    }
    let b0 = problem.ground()?;
    let gap = T::two() * problem.step();
    let mut b = Vec::with_capacity(levels);
    b.push(b0.clone());
    for k in 1..levels {
        let next = b[k - 1].clone() + gap.clone();
        b.push(next);
    }
    // The gap law comes from dividing by b_{k+1} + b_k.
    if let Some(k) = b.windows(2).position(|w| (w[0].clone() + w[1].clone()).is_zero()) {
        return Err(Error::DegenerateLadder { k });
    }
    let spectrum = BnSpectrum {
        n: problem.n,
        b0,
        levels: b,
    };
    let pair = verify_link(problem, &spectrum, &Tolerance::default())?;
    Ok(BnSolution { spectrum, pair })
}

/// Builds the `S`/`A` pair implied by `b_k` and checks adjacent-level
/// consistency and the ground condition `2n b_0 = b_0^2 + n^2 - 1 - 4 Lambda`.
pub fn verify_link<T: Scalar>(
    problem: &BnProblem<T>,
    spectrum: &BnSpectrum<T>,
    tol: &Tolerance,
) -> Result<SpectrumPair<T>> {
    if spectrum.levels.is_empty() {
        return Err(Error::invalid("levels", "spectrum has no levels"));
    }
    let shift = problem.shift();
    let two_n = T::two() * problem.step();
    let s: Vec<T> = spectrum
        .levels
        .iter()
        .map(|b| b.clone() * b.clone() + shift.clone())
        .collect();
    let a: Vec<T> = spectrum.levels.iter().map(|b| two_n.clone() * b.clone()).collect();
    for k in 0..s.len().saturating_sub(1) {
        let lhs = s[k + 1].clone() - s[k].clone();
        let rhs = a[k + 1].clone() + a[k].clone();
        if !lhs.within(&rhs, tol) {
            return Err(Error::violation(k, Condition::Adjacent));
        }
    }
    if !s[0].within(&a[0], tol) {
        return Err(Error::violation(0, Condition::Ground));
    }
    SpectrumPair::new(s, a, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i128]) -> Vec<Rational> {
        v.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn constant_gap_oscillator() {
        let pair = solve_constant_gap(ratio(1, 2), 4).unwrap();
        assert_eq!(pair.s, vec![ratio(1, 2), ratio(3, 2), ratio(5, 2), ratio(7, 2)]);
        let one = solve_constant_gap(0.5, 1).unwrap();
        assert_eq!(one.s, one.a);
        assert_eq!(solve_constant_gap(ratio(3, 1), 3).unwrap().s, ints(&[3, 9, 15]));
    }

    #[test]
    fn constant_gap_rejects_nonpositive() {
        assert!(matches!(
            solve_constant_gap(0.0, 3),
            Err(Error::InvalidParameter { field: "a_value", .. })
        ));
        assert!(solve_constant_gap(-1.0, 3).is_err());
    }

    #[test]
    fn angular_small_cases() {
        let j1 = solve_angular(2).unwrap();
        assert_eq!(j1.mu, ints(&[-1, 0, 1]));
        assert_eq!(j1.c_sq, ints(&[1, 1, 0]));

        let j0 = solve_angular(0).unwrap();
        assert_eq!(j0.mu, ints(&[0]));
        assert_eq!(j0.c_sq, ints(&[0]));

        let half = solve_angular(1).unwrap();
        assert_eq!(half.mu, vec![ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(half.c_sq, vec![ratio(1, 2), ratio(0, 1)]);

        assert!(solve_angular(-1).is_err());
    }

    #[test]
    fn bn_oscillator_ground() {
        let problem = BnProblem::new(2, ratio(0, 1), SignChoice::Plus).unwrap();
        let sol = solve_bn(&problem, 3).unwrap();
        assert_eq!(sol.spectrum.levels, ints(&[3, 7, 11]));
        assert_eq!(sol.pair.s[0], ratio(12, 1));
        assert_eq!(sol.pair.a[0], ratio(12, 1));
    }

    #[test]
    fn bn_hydrogen_ground() {
        let problem = BnProblem::new(1, ratio(0, 1), SignChoice::Plus).unwrap();
        let sol = solve_bn(&problem, 3).unwrap();
        assert_eq!(sol.spectrum.levels, ints(&[2, 4, 6]));
    }

    #[test]
    fn bn_double_root_needs_no_sign() {
        let problem = BnProblem::new(1, ratio(-1, 4), SignChoice::AutoNonNegative).unwrap();
        assert_eq!(problem.ground().unwrap(), ratio(1, 1));
    }

    #[test]
    fn bn_sign_resolution() {
        // Roots 1 and 3.
        let both = BnProblem::new(2, ratio(0, 1), SignChoice::AutoNonNegative).unwrap();
        assert!(matches!(both.ground(), Err(Error::UnresolvedSign { .. })));
        // Roots -3 and 7.
        let one = BnProblem::new(2, ratio(6, 1), SignChoice::AutoNonNegative).unwrap();
        assert_eq!(one.ground().unwrap(), ratio(7, 1));
    }

    #[test]
    fn bn_rejects_imaginary_root() {
        assert!(matches!(
            BnProblem::new(1, ratio(-1, 2), SignChoice::Plus),
            Err(Error::InvalidParameter { field: "lambda", .. })
        ));
        assert!(BnProblem::new(0, 0.0, SignChoice::Plus).is_err());
        let irrational = BnProblem::new(1, ratio(1, 4), SignChoice::Plus).unwrap();
        assert_eq!(irrational.ground(), Err(Error::IrrationalRoot));
        let float = BnProblem::new(1, 0.25, SignChoice::Plus).unwrap();
        assert!((float.ground().unwrap() - (1.0 + libm::sqrt(2.0))).abs() < 1e-15);
    }

    #[test]
    fn bn_degenerate_ladder() {
        // b0 = 1 - 4 = -3, b1 = -1, b2 = 1.
        let problem = BnProblem::new(1, ratio(15, 4), SignChoice::Minus).unwrap();
        assert_eq!(solve_bn(&problem, 4).unwrap_err(), Error::DegenerateLadder { k: 1 });
    }

    #[test]
    fn link_examples() {
        let problem = BnProblem::new(1, ratio(0, 1), SignChoice::Plus).unwrap();
        let good = BnSpectrum {
            n: 1,
            b0: ratio(2, 1),
            levels: ints(&[2, 4]),
        };
        let pair = verify_link(&problem, &good, &Tolerance::exact()).unwrap();
        assert_eq!(pair.s, ints(&[4, 16]));
        assert_eq!(pair.a, ints(&[4, 8]));

        let tampered = BnSpectrum {
            n: 1,
            b0: ratio(2, 1),
            levels: ints(&[2, 5]),
        };
        assert_eq!(
            verify_link(&problem, &tampered, &Tolerance::exact()),
            Err(Error::violation(0, Condition::Adjacent))
        );

        let osc = BnProblem::new(2, ratio(0, 1), SignChoice::Plus).unwrap();
        let ground = BnSpectrum {
            n: 2,
            b0: ratio(3, 1),
            levels: ints(&[3]),
        };
        let pair = verify_link(&osc, &ground, &Tolerance::exact()).unwrap();
        assert_eq!((pair.s[0], pair.a[0]), (ratio(12, 1), ratio(12, 1)));
    }
}
