use specladder_core::models::*;
use specladder_core::{ratio, Tolerance};

fn units() -> PhysicalUnits {
    PhysicalUnits::default()
}

#[test]
fn ladders_behind_rational_models_are_exactly_consistent() {
    let exact = Tolerance::exact();
    let mut spectra = vec![ho_1d(&units(), 20).unwrap(), square_well(&units(), 20).unwrap()];
    for two_j in 0..12 {
        spectra.push(angular_momentum(two_j).unwrap());
    }
    for dims in 2..=3 {
        for l in 0..5 {
            spectra.push(iso_ho_nd(&units(), dims, l, 6).unwrap());
        }
    }
    for dims in 1..=3 {
        for l in 0..(if dims == 1 { 1 } else { 5 }) {
            spectra.push(hydrogen_nd(&units(), dims, l, 6).unwrap());
        }
    }
    for spec in spectra {
        let pair = spec.ladder.as_ref().expect("rational models carry their ladder");
        assert!(pair.check(&exact).is_ok(), "{} {:?}", spec.model, spec.params);
    }
}

#[test]
fn hydrogen_levels_depend_only_on_the_principal_number() {
    for dims in 2..=3 {
        let mut by_n: Vec<(f64, f64)> = Vec::new();
        for l in 0..4 {
            let spec = hydrogen_nd(&units(), dims, l, 5).unwrap();
            let e = spec.energies();
            assert!(e.windows(2).all(|w| w[0] < w[1]));
            for level in &spec.levels {
                by_n.push((level.label("n").unwrap(), level.energy));
            }
        }
        for (n, e) in &by_n {
            for (m, f) in &by_n {
                if n == m {
                    assert_eq!(e, f);
                }
            }
        }
    }
}

#[test]
fn hydrogen_scales_with_charge_only_through_the_unit() {
    let z2 = PhysicalUnits { charge: 2, ..units() };
    let one = hydrogen_nd(&units(), 3, 0, 3).unwrap();
    let two = hydrogen_nd(&z2, 3, 0, 3).unwrap();
    assert_eq!(one.energies(), two.energies());
    let scaled: Vec<f64> = two.physical_energies();
    for (a, b) in scaled.iter().zip(one.physical_energies()) {
        assert_eq!(*a, 4.0 * b);
    }
    let hartree = two.convert_to(specladder_core::EnergyUnit::Hartree).unwrap();
    assert_eq!(hartree.levels[0].exact, Some(ratio(-2, 1)));
}

#[test]
fn dirac_is_decreasing_in_alpha() {
    for l in 0..3 {
        for k in 0..4 {
            let mut last = 1.0;
            for alpha in [0.001, 0.005, 0.01, 0.05, 0.1] {
                let e = dirac_hydrogen(&DiracParams::hydrogen(l, alpha), k + 1).unwrap().energies()[k];
                assert!(e < last && e > 0.0);
                last = e;
            }
        }
    }
}

#[test]
fn dirac_fine_structure_splits_equal_n() {
    let a = ALPHA_FS;
    let l0 = dirac_hydrogen(&DiracParams::hydrogen(0, a), 2).unwrap().energies()[1];
    let l1 = dirac_hydrogen(&DiracParams::hydrogen(1, a), 1).unwrap().energies()[0];
    let schrodinger = -a * a / 8.0;
    for e in [l0, l1] {
        assert!(((e - 1.0) - schrodinger).abs() < 10.0 * a.powi(4));
    }
    // b_0 differs by about 4 alpha^2 / 3 between the two, giving a split of
    // about alpha^4 / 12, with the l = 0 state lower.
    let split = (l1 - l0) / a.powi(4);
    assert!((split - 1.0 / 12.0).abs() < 0.01, "split {split}");
}

#[test]
fn quartic_pipeline_matches_closed_form_to_k_64() {
    let c = quartic_shift_coefficients(65).unwrap();
    for (k, x) in c.iter().enumerate() {
        let k = k as i128;
        assert_eq!(*x, ratio(3, 2) * (ratio(k * k + k, 1) + ratio(1, 2)));
    }
}

#[test]
fn iso_oscillator_radial_gap() {
    let e = iso_ho_nd(&units(), 3, 0, 6).unwrap().energies();
    assert!(e.windows(2).all(|w| w[1] - w[0] == 2.0));
}

#[test]
fn spectra_serialize_and_round_trip() {
    let spec = hydrogen_nd(&units(), 2, 1, 3).unwrap();
    let json = serde_json::to_string(&spec).unwrap();
    let back: specladder_core::ModelSpectrum = serde_json::from_str(&json).unwrap();
    assert_eq!(back.levels, spec.levels);
    assert_eq!(back.model, spec.model);
}
