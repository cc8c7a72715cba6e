use octobohr::verification::*;
use octobohr::{Error, Inequality, Score};

const KINDS: [Inequality; 5] = [
    Inequality::Cesaro { beta: 1.0 },
    Inequality::Cesaro { beta: 2.0 },
    Inequality::Bernardi { gamma: 1.0, m: 0 },
    Inequality::Bernardi { gamma: 0.0, m: 1 },
    Inequality::Fourier,
];

#[test]
fn no_violations_just_inside_each_radius() {
    for ineq in KINDS {
        let r = ineq.claimed_radius().unwrap() - 1e-3;
        let rep = verify_inequality(ineq, &[r], 200, 3, 64).unwrap();
        assert!(rep.passed(), "{ineq:?}: {:?}", rep.violations.first());
    }
}

#[test]
fn fourier_constant_has_zero_slack() {
    use octobohr::series::MajorantProfile;
    let one = MajorantProfile::new(vec![1.0]).unwrap();
    let r = 1.0 / 3.0;
    let m = Inequality::Fourier.majorant(&one, r).unwrap();
    assert!((m.value - 1.5).abs() <= 1e-12);
}

#[test]
fn sharpness_excess_just_outside_each_radius() {
    for ineq in KINDS {
        let r = ineq.claimed_radius().unwrap() + 0.02;
        let rep = sharpness_scan(ineq, r, &DEFAULT_P_LIST).unwrap();
        assert!(rep.any_positive_excess(), "{ineq:?}");
        assert!(rep.rows.iter().all(|row| row.excess.is_finite()));
    }
}

#[test]
fn corrections_decay_quadratically_except_fourier() {
    for ineq in KINDS {
        let r = ineq.claimed_radius().unwrap() + 0.02;
        let decay = sharpness_scan(ineq, r, &DEFAULT_P_LIST)
            .unwrap()
            .correction_decay
            .unwrap();
        match ineq {
            Inequality::Fourier => assert!((decay - 1.0).abs() < 0.2, "{decay}"),
            _ => assert!(decay >= 1.8, "{ineq:?}: {decay}"),
        }
    }
}

#[test]
fn closed_forms_on_a_grid() {
    let ps = [0.0, 0.3, 0.6, 0.9, 0.99];
    let rs = [0.1, 0.3, 0.5, 0.7, 0.9];
    for ineq in KINDS.into_iter().chain([Inequality::Laplace]) {
        for p in ps {
            for r in rs {
                let c = closed_form_check(ineq, p, r).unwrap();
                assert!(c.agrees(1e-9), "{ineq:?} p={p} r={r}: {c:?}");
            }
        }
    }
}

#[test]
fn p_zero_reduces_to_one_term() {
    // f_0 = -x u: only a_1 survives
    let c = closed_form_check(Inequality::Fourier, 0.0, 0.25).unwrap();
    assert!((c.closed - 0.25 / 0.75).abs() <= 1e-15);
}

#[test]
fn concavity_and_maxima() {
    let cases = [
        (Score::Psi { beta: 1.0 }, 0.5),
        (Score::Phi { gamma: 1.0, m: 0 }, 0.5),
        (Score::G, 0.3),
        (Score::Q, 0.9),
        (Score::W, 0.5),
    ];
    for (score, r) in cases {
        let rep = concavity_check(score, r).unwrap();
        assert!(rep.concave && rep.below_radius && rep.max_at_one, "{rep:?}");
    }
}

#[test]
fn w_loses_its_maximum_at_one_beyond_rstar() {
    let rep = concavity_check(Score::W, 0.97).unwrap();
    assert!(!rep.below_radius);
    assert!(!rep.max_at_one);
    assert!(rep.derivative_at_one < 0.0);
}

#[test]
fn q_prime_at_one_stays_positive() {
    let min = (1..10_000)
        .map(|i| q_prime_at_one(i as f64 / 10_000.0))
        .fold(f64::INFINITY, f64::min);
    assert!(min > 0.7 && min < 0.8, "{min}");
}

#[test]
fn reports_serialize() {
    let rep = verify_inequality(Inequality::Laplace, &[0.5], 2, 1, 16).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    assert!(text.contains("\"kind\":\"laplace\""));
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn preconditions() {
    let err = verify_inequality(Inequality::Cesaro { beta: 1.0 }, &[0.6], 1, 0, 16).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    let err = verify_inequality(Inequality::Laplace, &[0.5], 0, 0, 16).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
}
