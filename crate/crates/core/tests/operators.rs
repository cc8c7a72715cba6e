use octobohr::octonion::{ImaginaryUnit, Octonion};
use octobohr::operators::*;
use octobohr::series::{admissible_random, MajorantProfile, OctSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn gamma_ratio_identity() {
    for beta in [0.25, 0.5, 1.5, 2.0, 3.7] {
        let c = gamma_weight_seq(beta, 64).unwrap();
        let c1 = gamma_weight_seq(beta + 1.0, 64).unwrap();
        for k in 0..=64 {
            let lhs: f64 = c[..=k].iter().sum();
            assert!((lhs - c1[k]).abs() <= 1e-12 * c1[k], "beta {beta} k {k}");
        }
    }
}

fn majorants(f: &MajorantProfile, r: f64) -> Vec<f64> {
    vec![
        cesaro_majorant(f, 0.5, r).unwrap().value,
        cesaro_majorant(f, 1.0, r).unwrap().value,
        bernardi_majorant(f, BernardiParams::libera(), r)
            .unwrap()
            .value,
        fourier_majorant(f, r).unwrap().value,
        laplace_majorant(f, r.max(1e-3)).unwrap().value,
    ]
}

#[test]
fn majorants_increase_with_r() {
    let f = admissible_random(0.4, 3, 64).unwrap().majorant_coeffs();
    let mut prev = majorants(&f, 0.0);
    for i in 1..=18 {
        let next = majorants(&f, i as f64 * 0.05);
        for (a, b) in prev.iter().zip(&next) {
            assert!(b >= a);
        }
        prev = next;
    }
}

#[test]
fn majorants_are_linear_in_moduli() {
    let f = admissible_random(0.6, 9, 64).unwrap().majorant_coeffs();
    let f2 = f.scaled(2.0);
    for r in [0.1, 0.4, 0.7] {
        for (a, b) in majorants(&f, r).iter().zip(majorants(&f2, r)) {
            assert!((2.0 * a - b).abs() <= 1e-13 * b);
        }
    }
}

#[test]
fn constant_saturates_cesaro_bound() {
    let one = OctSeries::constant(Octonion::ONE, 16).majorant_coeffs();
    for beta in [0.5, 1.0, 2.0] {
        for r in [0.1, 0.5, 0.9] {
            let m = cesaro_majorant(&one, beta, r).unwrap();
            let b = cesaro_bound(beta, r).unwrap();
            assert!((m.value - b).abs() <= m.tail + 1e-12, "beta {beta} r {r}");
        }
    }
}

#[test]
fn fourier_phases_have_unit_modulus_for_any_unit() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..8 {
        let dir = Octonion::new(std::array::from_fn(|_| rng.random::<f64>() - 0.5)).im();
        let unit = ImaginaryUnit::from_direction(dir).unwrap();
        for n in 0..32 {
            for k in 0..=n {
                assert!((fourier_phase(unit, n, k).norm() - 1.0).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn fourier_image_moduli_are_bounded_by_majorant_terms() {
    let f = admissible_random(0.5, 4, 20).unwrap();
    let unit = ImaginaryUnit::new(Octonion::L).unwrap();
    let img = fourier_transform(&f, unit).unwrap();
    let mags = f.majorant_coeffs();
    for n in 0..=20 {
        let prefix: f64 = mags.mags()[..=n].iter().sum();
        assert!(img.coeff(n).norm() <= prefix + 1e-12);
    }
}
