//! The seven physical systems, each reduced to a ladder problem and solved in
//! closed form.
//!
//! Energies are returned in the model's natural unit (see [`EnergyUnit`]);
//! [`ModelSpectrum::scale`] carries the conversion to the caller's units.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Condition, Error, Result};
use crate::ladder::{coeffs_from_spectrum, spectrum_from_squared_moduli};
use crate::potential::{centrifugal_strength, dirac_strength};
use crate::scalar::{ratio, Rational, Scalar, Tolerance};
use crate::solver::{solve_angular, solve_bn, solve_constant_gap, BnProblem, SignChoice};
use crate::spectrum::{EnergyUnit, Label, Level, Model, ModelSpectrum};

/// Default fine-structure constant.
pub const ALPHA_FS: f64 = 1.0 / 137.035999;

/// Fewest samples accepted by [`well_ladder_action`].
pub const MIN_WELL_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalUnits {
    pub hbar: f64,
    pub mass: f64,
    pub omega: f64,
    /// Width of the square well.
    pub length: f64,
    pub charge: u32,
    pub alpha_fs: f64,
}

impl Default for PhysicalUnits {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            omega: 1.0,
            length: 1.0,
            charge: 1,
            alpha_fs: ALPHA_FS,
        }
    }
}

impl PhysicalUnits {
    pub fn validate(&self) -> Result<()> {
        for (field, value) in [
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("omega", self.omega),
            ("length", self.length),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::invalid(field, "must be finite and positive"));
            }
        }
        if self.charge == 0 {
            return Err(Error::invalid("Z", "must be a positive integer"));
        }
        validate_alpha(self.alpha_fs)
    }

    fn hbar_omega(&self) -> f64 {
        self.hbar * self.omega
    }
}

fn validate_alpha(alpha_fs: f64) -> Result<()> {
    if !(alpha_fs > 0.0 && alpha_fs <= 0.1) {
        return Err(Error::invalid("alpha", "fine-structure constant must lie in (0, 0.1]"));
    }
    Ok(())
}

/// Parameters of the relativistic radial problem, in units `hbar = m = c = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiracParams {
    pub l: u32,
    pub alpha_fs: f64,
    pub charge: u32,
    /// Allow `charge != 1`, which goes beyond the hydrogen case.
    pub extended_charge: bool,
}

impl DiracParams {
    pub fn hydrogen(l: u32, alpha_fs: f64) -> Self {
        Self {
            l,
            alpha_fs,
            charge: 1,
            extended_charge: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_alpha(self.alpha_fs)?;
        if self.charge == 0 {
            return Err(Error::invalid("Z", "must be a positive integer"));
        }
        if self.charge != 1 && !self.extended_charge {
            return Err(Error::invalid(
                "Z",
                "only Z = 1 is supported unless the charge extension is enabled",
            ));
        }
        if self.lambda_d() <= -0.25 {
            return Err(Error::invalid("lambda", "l(l+1) - (alpha Z)^2 must exceed -1/4"));
        }
        Ok(())
    }

    /// `Lambda_D = l(l+1) - alpha^2 Z^2`.
    pub fn lambda_d(&self) -> f64 {
        dirac_strength(self.l, self.alpha_fs, self.charge)
    }

    /// `c_E = Z alpha E` for reduced energy `E = (mc^2 + energy) / mc^2`.
    pub fn c_e(&self, reduced: f64) -> f64 {
        self.charge as f64 * self.alpha_fs * reduced
    }

    /// `d_E = 1 - E^2`.
    pub fn d_e(&self, reduced: f64) -> f64 {
        1.0 - reduced * reduced
    }

    /// The `B_{1-}` eigenvalue `2 c_E / sqrt(d_E)` a bound state at `reduced`
    /// must produce.
    pub fn eigenvalue_target(&self, reduced: f64) -> f64 {
        2.0 * self.c_e(reduced) / libm::sqrt(self.d_e(reduced))
    }
}

fn to_f64(x: Rational) -> f64 {
    x.to_f64()
}

fn rational_level(labels: Vec<Label>, exact: Rational) -> Level {
    Level {
        labels,
        energy: to_f64(exact),
        exact: Some(exact),
    }
}

fn empty(model: Model, unit: EnergyUnit, scale: f64, params: Vec<Label>) -> ModelSpectrum {
    ModelSpectrum {
        model,
        unit,
        scale,
        params,
        levels: Vec::new(),
        ladder: None,
    }
}

/// `E_k = hbar omega (k + 1/2)` from a constant commutator `a = 1/2`.
pub fn ho_1d(units: &PhysicalUnits, levels: usize) -> Result<ModelSpectrum> {
    units.validate()?;
    let mut out = empty(Model::Ho1d, EnergyUnit::HbarOmega, units.hbar_omega(), Vec::new());
    if levels == 0 {
        return Ok(out);
    }
    let pair = solve_constant_gap(ratio(1, 2), levels)?;
    out.levels = pair
        .s
        .iter()
        .enumerate()
        .map(|(k, &e)| rational_level(vec![Label::new("k", k as f64)], e))
        .collect();
    out.ladder = Some(pair);
    Ok(out)
}

/// The `2j + 1` projections `mu_k = -j + k` of `J_3`, with `|C_k|^2` of `J_+`
/// attached as a label.
pub fn angular_momentum(two_j: i64) -> Result<ModelSpectrum> {
    let spectrum = solve_angular(two_j)?;
    let j = to_f64(spectrum.j());
    let levels = spectrum
        .mu
        .iter()
        .zip(&spectrum.c_sq)
        .enumerate()
        .map(|(k, (&mu, &c))| {
            rational_level(
                vec![
                    Label::new("k", k as f64),
                    Label::new("mu", to_f64(mu)),
                    Label::new("c_sq", to_f64(c)),
                ],
                mu,
            )
        })
        .collect();
    Ok(ModelSpectrum {
        model: Model::Angular,
        unit: EnergyUnit::Hbar,
        scale: 1.0,
        params: vec![Label::new("j", j)],
        levels,
        ladder: Some(spectrum.pair()),
    })
}

/// `E_kl = hbar omega (2k + l + N/2)` for the isotropic oscillator in `N = 2`
/// or `3` dimensions.
pub fn iso_ho_nd(units: &PhysicalUnits, dims: u32, l: u32, levels: usize) -> Result<ModelSpectrum> {
    units.validate()?;
    if !(2..=3).contains(&dims) {
        return Err(Error::invalid("N", "the isotropic oscillator needs N = 2 or 3"));
    }
    let lambda = centrifugal_strength(dims, l)?;
    let params = vec![Label::new("N", dims as f64), Label::new("l", l as f64)];
    let mut out = empty(Model::IsoHo, EnergyUnit::HbarOmega, units.hbar_omega(), params);
    if levels == 0 {
        return Ok(out);
    }
    // The minus root, where nonnegative, belongs to solutions that are
    // singular at the origin; the plus root is the physical branch.
    let problem = BnProblem::new(2, lambda, SignChoice::Plus)?;
    let solution = solve_bn(&problem, levels)?;
    out.levels = solution
        .spectrum
        .levels
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            rational_level(
                vec![Label::new("k", k as f64), Label::new("l", l as f64)],
                b / 2,
            )
        })
        .collect();
    out.ladder = Some(solution.pair);
    Ok(out)
}

/// `E = -1 / (2 n^2)` in units of `Z^2 e^4 m / hbar^2`, with principal number
/// `n = k + l + (N - 1)/2`.
///
/// In one dimension `b_0 = 0` would be an infinitely bound state, so the
/// labels start at `k = 1` there.
pub fn hydrogen_nd(units: &PhysicalUnits, dims: u32, l: u32, levels: usize) -> Result<ModelSpectrum> {
    units.validate()?;
    let lambda = centrifugal_strength(dims, l)?;
    let z = units.charge as f64;
    let params = vec![
        Label::new("N", dims as f64),
        Label::new("l", l as f64),
        Label::new("Z", z),
    ];
    let scale = z * z * units.mass / (units.hbar * units.hbar);
    let mut out = empty(Model::Hydrogen, EnergyUnit::ScaledHartree, scale, params);
    if levels == 0 {
        return Ok(out);
    }
    // b_0 = N - 1 + 2l picks the plus root for N >= 2 and the minus root for
    // N = 1.
    let (sign, skip) = if dims == 1 {
        (SignChoice::Minus, 1)
    } else {
        (SignChoice::Plus, 0)
    };
    let problem = BnProblem::new(1, lambda, sign)?;
    let solution = solve_bn(&problem, levels + skip)?;
    let expected_b0 = ratio(dims as i128 - 1 + 2 * l as i128, 1);
    if solution.spectrum.b0 != expected_b0 {
        return Err(Error::violation(0, Condition::ClosedForm));
    }
    let mut result = Vec::with_capacity(levels);
    for (k, &b) in solution.spectrum.levels.iter().enumerate().skip(skip) {
        let energy = -ratio(2, 1) / (b * b);
        let n = b / 2;
        // Cross-check against the textbook form in the principal number.
        let n_label = ratio(k as i128 + l as i128, 1) + ratio(dims as i128 - 1, 2);
        if n != n_label || energy != -Rational::from_integer(1) / (n * n * 2) {
            return Err(Error::violation(k, Condition::ClosedForm));
        }
        result.push(rational_level(
            vec![
                Label::new("k", k as f64),
                Label::new("l", l as f64),
                Label::new("n", to_f64(n)),
            ],
            energy,
        ));
    }
    out.levels = result;
    out.ladder = Some(solution.pair);
    Ok(out)
}

/// `E_k = [1 + 4 alpha^2 Z^2 / (b_0 + 2k)^2]^{-1/2}` in units of `mc^2`, with
/// `b_0 = 1 + sqrt(1 + 4 Lambda_D)`.
pub fn dirac_hydrogen(params: &DiracParams, levels: usize) -> Result<ModelSpectrum> {
    params.validate()?;
    let labels = vec![
        Label::new("l", params.l as f64),
        Label::new("alpha", params.alpha_fs),
        Label::new("Z", params.charge as f64),
    ];
    let mut out = empty(Model::Dirac, EnergyUnit::RestEnergy, 1.0, labels);
    if levels == 0 {
        return Ok(out);
    }
    let problem = BnProblem::new(1, params.lambda_d(), SignChoice::Plus)?;
    let solution = solve_bn(&problem, levels)?;
    let az = params.alpha_fs * params.charge as f64;
    out.levels = solution
        .spectrum
        .levels
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            let energy = 1.0 / libm::sqrt(1.0 + 4.0 * az * az / (b * b));
            Level {
                labels: vec![
                    Label::new("k", k as f64),
                    Label::new("l", params.l as f64),
                    Label::new("n", (k + params.l as usize + 1) as f64),
                ],
                energy,
                exact: None,
            }
        })
        .collect();
    Ok(out)
}

/// Squared moduli `k(k+1)/2`, `k = 0..=levels`, of the well's ladder.
pub fn well_squared_moduli(levels: usize) -> Vec<Rational> {
    (0..=levels as i128).map(|k| ratio(k * (k + 1), 2)).collect()
}

/// `E_k = k^2 E_1` for `k = 1..=levels`, from `s_k = k^2`, `a_k = k`.
pub fn square_well(units: &PhysicalUnits, levels: usize) -> Result<ModelSpectrum> {
    units.validate()?;
    let pi = core::f64::consts::PI;
    let e1 = units.hbar * units.hbar * pi * pi / (2.0 * units.mass * units.length * units.length);
    let mut out = empty(Model::SquareWell, EnergyUnit::WellGround, e1, Vec::new());
    if levels == 0 {
        return Ok(out);
    }
    // The ladder index starts at the empty state s_0 = 0.
    let pair = spectrum_from_squared_moduli(&well_squared_moduli(levels), false)?;
    for (k, (s, a)) in pair.s.iter().zip(&pair.a).enumerate() {
        let k = k as i128;
        if *s != ratio(k * k, 1) || *a != ratio(k, 1) {
            return Err(Error::violation(k as usize, Condition::ClosedForm));
        }
    }
    out.levels = pair
        .s
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &e)| rational_level(vec![Label::new("k", k as f64)], e))
        .collect();
    out.ladder = Some(pair);
    Ok(out)
}

/// Uniform samples of `[0, pi]`.
pub fn well_grid(points: usize) -> Result<Vec<f64>> {
    if points < MIN_WELL_POINTS {
        return Err(Error::invalid(
            "points",
            format!("at least {MIN_WELL_POINTS} samples are required"),
        ));
    }
    let h = core::f64::consts::PI / (points - 1) as f64;
    Ok((0..points).map(|i| i as f64 * h).collect())
}

/// Second-order derivative of uniformly sampled `f` with spacing `h`.
fn derivative(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    let mut d = vec![0.0; n];
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    for i in 1..n - 1 {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    d
}

fn well_action(k: u32, points: usize, sign: f64) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::invalid("k", "the well ladder is defined for k >= 1"));
    }
    let y = well_grid(points)?;
    let h = y[1] - y[0];
    let kf = k as f64;
    let phi: Vec<f64> = y.iter().map(|&y| libm::sin(kf * y)).collect();
    let dphi = derivative(&phi, h);
    Ok(y
        .iter()
        .zip(phi.iter().zip(&dphi))
        .map(|(&y, (&f, &df))| libm::cos(y) * f + sign * libm::sin(y) * df / kf)
        .collect())
}

/// `(cos y + (1/k) sin y d/dy) sin(ky)` on `points` samples of `[0, pi]`;
/// approximates `sin((k+1) y)`.
pub fn well_ladder_action(k: u32, points: usize) -> Result<Vec<f64>> {
    well_action(k, points, 1.0)
}

/// `(cos y - (1/k) sin y d/dy) sin(ky)`; approximates `sin((k-1) y)`.
pub fn well_lowering_action(k: u32, points: usize) -> Result<Vec<f64>> {
    well_action(k, points, -1.0)
}

/// First-order `x^4` shifts `dE_k / eps` in units of `hbar^2 / (m^2 omega^2)`,
/// from the commutator shifts `da_k = (3/2) <k|x^2|k>`.
///
/// `<k|x^2|k>` (in units `hbar / (m omega)`) equals `s_k` of the unperturbed
/// ladder, and the level shifts follow `dE_{k+1} = dE_k + da_{k+1} + da_k`
/// from `dE_0 = da_0`.
pub fn quartic_shift_coefficients(levels: usize) -> Result<Vec<Rational>> {
    if levels == 0 {
        return Ok(Vec::new());
    }
    let unperturbed = solve_constant_gap(ratio(1, 2), levels)?;
    let three_halves = ratio(3, 2);
    let da: Vec<Rational> = unperturbed.s.iter().map(|x2| three_halves * x2).collect();
    let mut de = Vec::with_capacity(levels);
    de.push(da[0]);
    for k in 0..levels - 1 {
        de.push(de[k] + da[k + 1] + da[k]);
    }
    for (k, d) in de.iter().enumerate() {
        let k = k as i128;
        if *d != three_halves * (ratio(k * k + k, 1) + ratio(1, 2)) {
            return Err(Error::violation(k as usize, Condition::ClosedForm));
        }
    }
    // The shifted ladder must stay internally consistent at first order.
    let shifted = crate::ladder::SpectrumPair::new(de.clone(), da, false)?;
    shifted.check(&Tolerance::exact())?;
    coeffs_from_spectrum(&shifted, &Tolerance::exact())?;
    Ok(de)
}

/// First-order corrections `dE_k = (3 hbar^2 eps / 2 m^2 omega^2)(k^2 + k + 1/2)`.
pub fn perturbed_ho(units: &PhysicalUnits, epsilon: f64, levels: usize) -> Result<ModelSpectrum> {
    units.validate()?;
    if !epsilon.is_finite() {
        return Err(Error::invalid("epsilon", "must be finite"));
    }
    let scale = units.hbar * units.hbar / (units.mass * units.mass * units.omega * units.omega);
    let coeffs = quartic_shift_coefficients(levels)?;
    let mut out = empty(
        Model::PerturbedHo,
        EnergyUnit::QuarticShift,
        scale,
        vec![Label::new("epsilon", epsilon)],
    );
    out.levels = coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| Level {
            labels: vec![Label::new("k", k as f64), Label::new("coefficient", to_f64(c))],
            energy: epsilon * to_f64(c),
            exact: None,
        })
        .collect();
    Ok(out)
}
