//! Numerical checks of the Bohr-type inequalities.
//!
//! Three kinds of evidence are produced:
//!
//! * [`verify_inequality`] sweeps seeded admissible series over a radius grid
//!   inside the claimed radius and records every point where the majorant
//!   exceeds its bound by more than the truncation tail.
//! * [`sharpness_scan`] evaluates the extremal family just outside the radius
//!   and splits the excess into a linear term in `1 - p` and a correction.
//! * [`concavity_check`] evaluates the one-parameter score functions used to
//!   reduce each inequality to its extremal case.
//!
//! [`closed_form_check`] compares the series majorant of the extremal family
//! against an independent closed form built from quadrature.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{fit_power_law, integrate, li2, DEFAULT_TOL};
use crate::octonion::Octonion;
use crate::operators::{
    bernardi_majorant, cesaro_bound, cesaro_majorant, fourier_bound, fourier_majorant,
    kernel_integral, laplace_bound, laplace_majorant, BernardiParams, CesaroParams,
};
use crate::radii::{
    bernardi_tail_sum, laplace_p, radius_bernardi, radius_cesaro, radius_fourier,
    radius_laplace_rstar,
};
use crate::series::{
    admissible_random, extremal_fp, extremal_gp, Majorant, MajorantProfile, OctSeries,
    DEFAULT_ORDER,
};

/// Values of `|a_0|` cycled through by the admissible sampler.
pub const P_GRID: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

/// Default `p` values for sharpness scans.
pub const DEFAULT_P_LIST: [f64; 4] = [0.9, 0.99, 0.999, 0.9999];

/// Relative slack allowed on top of the truncation tail.
pub const SLACK_RTOL: f64 = 1e-12;

/// Largest truncation order used for the extremal family.
pub const MAX_SHARPNESS_ORDER: usize = 4096;

const QUAD_TOL: f64 = 1e-15;

/// The unit `(1, ..., 1)/√8` used for the extremal family.
pub fn extremal_unit() -> Octonion {
    Octonion::new([1.0; 8]) / 8f64.sqrt()
}

/// One of the four inequalities under test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inequality {
    Cesaro { beta: f64 },
    Bernardi { gamma: f64, m: usize },
    Fourier,
    Laplace,
}

impl Inequality {
    pub fn name(&self) -> &'static str {
        match self {
            Inequality::Cesaro { .. } => "cesaro",
            Inequality::Bernardi { .. } => "bernardi",
            Inequality::Fourier => "fourier",
            Inequality::Laplace => "laplace",
        }
    }

    /// Checks the operator parameters.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Inequality::Cesaro { beta } => CesaroParams::new(beta).map(|_| ()),
            Inequality::Bernardi { gamma, m } => BernardiParams::new(gamma, m).map(|_| ()),
            Inequality::Fourier | Inequality::Laplace => Ok(()),
        }
    }

    /// Largest radius for which the inequality is claimed. The Laplace
    /// inequality is claimed on the whole disc and reports 1.
    pub fn claimed_radius(&self) -> Result<f64> {
        Ok(match *self {
            Inequality::Cesaro { beta } => radius_cesaro(beta, DEFAULT_TOL)?.root,
            Inequality::Bernardi { gamma, m } => radius_bernardi(gamma, m, DEFAULT_TOL)?.root,
            Inequality::Fourier => radius_fourier(),
            Inequality::Laplace => 1.0,
        })
    }

    /// The operator majorant of a coefficient profile at radius `r`.
    pub fn majorant(&self, f: &MajorantProfile, r: f64) -> Result<Majorant> {
        match *self {
            Inequality::Cesaro { beta } => cesaro_majorant(f, beta, r),
            Inequality::Bernardi { gamma, m } => {
                bernardi_majorant(f, BernardiParams::new(gamma, m)?, r)
            }
            Inequality::Fourier => fourier_majorant(f, r),
            Inequality::Laplace => laplace_majorant(f, r),
        }
    }

    /// The right-hand side of the inequality at radius `r`.
    pub fn bound(&self, r: f64) -> Result<f64> {
        match *self {
            Inequality::Cesaro { beta } => cesaro_bound(beta, r),
            Inequality::Bernardi { gamma, m } => Ok(BernardiParams::new(gamma, m)?.bound(r)),
            Inequality::Fourier => Ok(fourier_bound(r)),
            Inequality::Laplace => Ok(laplace_bound(r)),
        }
    }

    /// A seeded admissible series, multiplied by `x^m` for Bernardi.
    pub fn admissible_sample(&self, p: f64, seed: u64, order: usize) -> Result<OctSeries> {
        let f = admissible_random(p, seed, order)?;
        Ok(match *self {
            Inequality::Bernardi { m, .. } => f.shifted(m),
            _ => f,
        })
    }

    /// The extremal family: `f_p` for Cesàro, Fourier and Laplace, `g_p` for
    /// Bernardi, both with the unit [`extremal_unit`].
    pub fn extremal(&self, p: f64, order: usize) -> Result<OctSeries> {
        match *self {
            Inequality::Bernardi { m, .. } => extremal_gp(p, extremal_unit(), m, order + m),
            _ => extremal_fp(p, extremal_unit(), order),
        }
    }
}

/// One evaluated (sample, r) pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlackRow {
    pub sample: usize,
    pub p: f64,
    pub r: f64,
    pub majorant: f64,
    pub tail: f64,
    pub bound: f64,
    /// `bound - majorant`.
    pub slack: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub sample: usize,
    pub r: f64,
    pub p: f64,
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub inequality: Inequality,
    pub radius: f64,
    pub r_grid: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
    pub order: usize,
    /// Smallest `bound - majorant` seen.
    pub max_slack: f64,
    pub violations: Vec<Violation>,
    pub rows: Vec<SlackRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A point is a violation when the majorant exceeds the bound by more than
/// its truncation tail plus `SLACK_RTOL * bound`.
pub fn is_violation(m: &Majorant, bound: f64) -> bool {
    m.value - bound > m.tail + SLACK_RTOL * bound.abs()
}

/// Sweeps `samples` admissible series over `r_grid`.
///
/// Sample `s` has `|a_0| = P_GRID[s % 11]` and seed `seed + s`. Every radius
/// must lie in `(0, R]` for the claimed radius `R` (`(0, 1)` for Laplace).
pub fn verify_inequality(
    ineq: Inequality,
    r_grid: &[f64],
    samples: usize,
    seed: u64,
    order: usize,
) -> Result<VerificationReport> {
    ineq.validate()?;
    if samples == 0 {
        return Err(Error::Precondition(
            "at least one sample is required".into(),
        ));
    }
    if r_grid.is_empty() {
        return Err(Error::Precondition("empty radius grid".into()));
    }
    let radius = ineq.claimed_radius()?;
    for &r in r_grid {
        let inside = r > 0.0 && r < 1.0 && r <= radius + DEFAULT_TOL;
        if !inside {
            return Err(Error::Precondition(format!(
                "r = {r} lies outside the claimed radius {radius} of the {} inequality; \
                 use a sharpness scan there",
                ineq.name()
            )));
        }
    }

    let bounds: Vec<f64> = r_grid
        .iter()
        .map(|&r| ineq.bound(r))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(samples * r_grid.len());
    let mut violations = Vec::new();
    let mut max_slack = f64::INFINITY;
    for s in 0..samples {
        let p = P_GRID[s % P_GRID.len()];
        let f = ineq.admissible_sample(p, seed.wrapping_add(s as u64), order)?;
        let profile = f.majorant_coeffs();
        for (&r, &bound) in r_grid.iter().zip(&bounds) {
            let m = ineq.majorant(&profile, r)?;
            let slack = bound - m.value;
            max_slack = max_slack.min(slack);
            if is_violation(&m, bound) {
                violations.push(Violation {
                    sample: s,
                    r,
                    p,
                    slack,
                });
            }
            rows.push(SlackRow {
                sample: s,
                p,
                r,
                majorant: m.value,
                tail: m.tail,
                bound,
                slack,
            });
        }
    }
    Ok(VerificationReport {
        inequality: ineq,
        radius,
        r_grid: r_grid.to_vec(),
        samples,
        seed,
        order,
        max_slack,
        violations,
        rows,
    })
}

/// Truncation order for the extremal family at `(p, r)`: enough for
/// `(pr)^N < 1e-20`, clamped to `[DEFAULT_ORDER, MAX_SHARPNESS_ORDER]`.
pub fn extremal_order(p: f64, r: f64) -> usize {
    let q = p * r;
    if q <= 0.0 {
        return DEFAULT_ORDER;
    }
    let needed = (1e-20f64.ln() / q.ln()).ceil() + 32.0;
    (needed as usize).clamp(DEFAULT_ORDER, MAX_SHARPNESS_ORDER)
}

/// Series and closed-form values of the extremal majorant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub series: Majorant,
    pub closed: f64,
}

impl ClosedFormCheck {
    pub fn difference(&self) -> f64 {
        (self.series.value - self.closed).abs()
    }

    /// Agreement within the series tail plus `tol`.
    pub fn agrees(&self, tol: f64) -> bool {
        self.difference() <= self.series.tail + tol
    }
}

fn check_p_r(p: f64, r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return domain(format!("p = {p} must lie in [0, 1)"));
    }
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("r = {r} must lie in (0, 1)"));
    }
    Ok(())
}

/// `∫_0^r t/((1-pt)(1-t)^β) dt`.
fn cesaro_extremal_integral(beta: f64, p: f64, r: f64) -> f64 {
    integrate(
        |t| t / ((1.0 - p * t) * (1.0 - t).powf(beta)),
        0.0,
        r,
        QUAD_TOL,
    )
}

/// `Σ_{k>m} q^{k-m-1} r^k/(k+γ) = r^{m+1} ∫_0^1 u^{m+γ}/(1-qru) du`.
fn bernardi_weighted_tail(params: BernardiParams, q: f64, r: f64) -> f64 {
    let s = params.m as f64 + params.gamma;
    r.powi(params.m as i32 + 1) * integrate(|u| u.powf(s) / (1.0 - q * r * u), 0.0, 1.0, QUAD_TOL)
}

/// Closed form of the extremal majorant at `(p, r)`.
pub fn extremal_closed_form(ineq: Inequality, p: f64, r: f64) -> Result<f64> {
    ineq.validate()?;
    check_p_r(p, r)?;
    let q = 1.0 - p * p;
    Ok(match ineq {
        Inequality::Cesaro { beta } => {
            let a = kernel_integral(beta, r);
            p * a / r + q / r * cesaro_extremal_integral(beta, p, r)
        }
        Inequality::Bernardi { gamma, m } => {
            let params = BernardiParams::new(gamma, m)?;
            p * params.bound(r) + q * bernardi_weighted_tail(params, p, r)
        }
        Inequality::Fourier => p / (1.0 - r) + (1.0 + p) * (r / (1.0 - r) - p * r / (1.0 - p * r)),
        Inequality::Laplace => {
            // Σ_n r^n (n+1)^{-2} (1 - s^n)/(1 - s) with s = p/(n+1)
            let mut sum = 0.0;
            let mut rn = r;
            let mut n = 1.0f64;
            loop {
                let s = p / (n + 1.0);
                let term = rn / ((n + 1.0) * (n + 1.0)) * (1.0 - s.powf(n)) / (1.0 - s);
                sum += term;
                if rn / ((n + 1.0) * (n + 1.0) * (1.0 - r)) < 1e-18 {
                    break;
                }
                rn *= r;
                n += 1.0;
            }
            p / r * -(-r).ln_1p() + q * sum
        }
    })
}

/// Series majorant of the extremal family against its closed form.
pub fn closed_form_check(ineq: Inequality, p: f64, r: f64) -> Result<ClosedFormCheck> {
    let closed = extremal_closed_form(ineq, p, r)?;
    let f = ineq.extremal(p, extremal_order(p, r))?;
    let series = ineq.majorant(&f.majorant_coeffs(), r)?;
    Ok(ClosedFormCheck { series, closed })
}

/// Slope `h` of the extremal majorant in `p` at `p = 1`: near `p = 1` the
/// majorant is `bound - (1-p) h + correction`.
pub fn leading_slope(ineq: Inequality, r: f64) -> Result<f64> {
    ineq.validate()?;
    check_p_r(0.0, r)?;
    Ok(match ineq {
        Inequality::Cesaro { beta } => {
            (3.0 * kernel_integral(beta, r) - 2.0 * kernel_integral(beta + 1.0, r)) / r
        }
        Inequality::Bernardi { gamma, m } => {
            let params = BernardiParams::new(gamma, m)?;
            params.bound(r) - 2.0 * bernardi_weighted_tail(params, 1.0, r)
        }
        Inequality::Fourier => (1.0 - 3.0 * r) / (1.0 - r),
        Inequality::Laplace => {
            return Err(Error::Precondition(
                "the Laplace inequality has no finite radius to test sharpness at".into(),
            ))
        }
    })
}

/// The correction term of the extremal decomposition, in closed form.
///
/// * Cesàro: `N_p = 2(1-p)(A-B)/r + ((1-p²)/r) ∫_0^r t/((1-pt)(1-t)^β) dt`
///   with `A = ∫_0^r (1-t)^{-β}`, `B = ∫_0^r (1-t)^{-β-1}`.
/// * Bernardi: `M_p = 2(p-1) S + (1-p²) Σ_{k>m} p^{k-m-1} r^k/(k+γ)` with
///   `S = Σ_{k>m} r^k/(k+γ)`.
/// * Fourier: `H_p = (2p-1) 2r/(1-r) - (1+p) p r/(1-pr)`.
///
/// The first two are `O((1-p)^2)`; `H_p` is only `O(1-p)`.
pub fn correction_term(ineq: Inequality, p: f64, r: f64) -> Result<f64> {
    ineq.validate()?;
    check_p_r(p, r)?;
    Ok(match ineq {
        Inequality::Cesaro { beta } => {
            let a = kernel_integral(beta, r);
            let b = kernel_integral(beta + 1.0, r);
            2.0 * (1.0 - p) * (a - b) / r + (1.0 - p * p) / r * cesaro_extremal_integral(beta, p, r)
        }
        Inequality::Bernardi { gamma, m } => {
            let params = BernardiParams::new(gamma, m)?;
            2.0 * (p - 1.0) * bernardi_weighted_tail(params, 1.0, r)
                + (1.0 - p * p) * bernardi_weighted_tail(params, p, r)
        }
        Inequality::Fourier => {
            (2.0 * p - 1.0) * 2.0 * r / (1.0 - r) - (1.0 + p) * p * r / (1.0 - p * r)
        }
        Inequality::Laplace => {
            return Err(Error::Precondition(
                "the Laplace inequality has no finite radius to test sharpness at".into(),
            ))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharpnessRow {
    pub p: f64,
    pub order: usize,
    pub majorant_series: f64,
    pub series_tail: f64,
    pub majorant_closed: f64,
    pub bound: f64,
    /// `majorant_series - bound`.
    pub excess: f64,
    /// `-(1-p) h`, see [`leading_slope`].
    pub leading: f64,
    /// See [`correction_term`].
    pub correction: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub inequality: Inequality,
    pub radius: f64,
    pub r_test: f64,
    pub p_list: Vec<f64>,
    pub rows: Vec<SharpnessRow>,
    /// Fitted exponent `q` in `|correction| ≈ C (1-p)^q`.
    pub correction_decay: Option<f64>,
}

impl SharpnessReport {
    pub fn any_positive_excess(&self) -> bool {
        self.rows.iter().any(|row| row.excess > row.series_tail)
    }

    pub fn max_excess(&self) -> f64 {
        self.rows
            .iter()
            .map(|row| row.excess)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Evaluates the extremal family at `r_test`, which must lie strictly
/// between the claimed radius and 1.
pub fn sharpness_scan(ineq: Inequality, r_test: f64, p_list: &[f64]) -> Result<SharpnessReport> {
    ineq.validate()?;
    if matches!(ineq, Inequality::Laplace) {
        return Err(Error::Precondition(
            "the Laplace inequality is claimed on the whole disc; there is no radius to exceed"
                .into(),
        ));
    }
    let radius = ineq.claimed_radius()?;
    if !(r_test > radius && r_test < 1.0) {
        return Err(Error::Precondition(format!(
            "sharpness needs {radius} < r < 1, got r = {r_test}"
        )));
    }
    if p_list.is_empty() {
        return Err(Error::Precondition("empty p list".into()));
    }
    let bound = ineq.bound(r_test)?;
    let slope = leading_slope(ineq, r_test)?;
    let mut rows = Vec::with_capacity(p_list.len());
    for &p in p_list {
        check_p_r(p, r_test)?;
        let order = extremal_order(p, r_test);
        let f = ineq.extremal(p, order)?;
        let series = ineq.majorant(&f.majorant_coeffs(), r_test)?;
        rows.push(SharpnessRow {
            p,
            order,
            majorant_series: series.value,
            series_tail: series.tail,
            majorant_closed: extremal_closed_form(ineq, p, r_test)?,
            bound,
            excess: series.value - bound,
            leading: -(1.0 - p) * slope,
            correction: correction_term(ineq, p, r_test)?,
        });
    }
    let xs: Vec<f64> = rows.iter().map(|row| 1.0 - row.p).collect();
    let ys: Vec<f64> = rows.iter().map(|row| row.correction).collect();
    Ok(SharpnessReport {
        inequality: ineq,
        radius,
        r_test,
        p_list: p_list.to_vec(),
        rows,
        correction_decay: fit_power_law(&xs, &ys),
    })
}

/// Score functions whose maximum over `p ∈ [0, 1]` gives each inequality.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "score", rename_all = "snake_case")]
pub enum Score {
    /// Cesàro: `((p²+p-1)A + (1-p²)B)/r`.
    Psi { beta: f64 },
    /// Bernardi: `p r^m/(m+γ) + (1-p²) Σ_{k>m} r^k/(k+γ)`.
    Phi { gamma: f64, m: usize },
    /// Fourier: `p/(1-r) + (1-p²) r/(1-r)²`.
    G,
    /// Laplace: `((1-r-p²+p²r-p)/r) ln(1-r) + 1 - p²`.
    Q,
    /// Laplace, rearranged:
    /// `(p/r) ln(1/(1-r)) + (1-p²)((1/r) ln(1/(1-r)) - Li2(r)/r)`.
    W,
}

impl Score {
    pub fn name(&self) -> &'static str {
        match self {
            Score::Psi { .. } => "psi",
            Score::Phi { .. } => "phi",
            Score::G => "g",
            Score::Q => "q",
            Score::W => "w",
        }
    }

    /// `p`-independent pieces of the score at radius `r`.
    fn parts(&self, r: f64) -> Result<(f64, f64)> {
        Ok(match *self {
            Score::Psi { beta } => {
                CesaroParams::new(beta)?;
                (kernel_integral(beta, r), kernel_integral(beta + 1.0, r))
            }
            Score::Phi { gamma, m } => {
                let params = BernardiParams::new(gamma, m)?;
                let s = bernardi_tail_sum(params, r, 1e-18);
                (params.bound(r), s.value)
            }
            Score::G | Score::Q => (0.0, 0.0),
            Score::W => (-(-r).ln_1p(), li2(r)?),
        })
    }

    fn eval_with(&self, (a, b): (f64, f64), p: f64, r: f64) -> f64 {
        let q = 1.0 - p * p;
        match self {
            Score::Psi { .. } => ((p * p + p - 1.0) * a + q * b) / r,
            Score::Phi { .. } => p * a + q * b,
            Score::G => p / (1.0 - r) + q * r / ((1.0 - r) * (1.0 - r)),
            Score::Q => (1.0 - r - p * p + p * p * r - p) / r * (-r).ln_1p() + q,
            Score::W => p / r * a + q * (a / r - b / r),
        }
    }

    /// The score at `(p, r)`.
    pub fn eval(&self, p: f64, r: f64) -> Result<f64> {
        if !(r > 0.0 && r < 1.0) {
            return domain(format!("r = {r} must lie in (0, 1)"));
        }
        Ok(self.eval_with(self.parts(r)?, p, r))
    }

    /// Derivative in `p` at `p = 1`, in closed form.
    pub fn derivative_at_one(&self, r: f64) -> Result<f64> {
        if !(r > 0.0 && r < 1.0) {
            return domain(format!("r = {r} must lie in (0, 1)"));
        }
        let (a, b) = self.parts(r)?;
        Ok(match self {
            Score::Psi { .. } => (3.0 * a - 2.0 * b) / r,
            Score::Phi { .. } => a - 2.0 * b,
            Score::G => (1.0 - 3.0 * r) / ((1.0 - r) * (1.0 - r)),
            Score::Q => q_prime_at_one(r),
            Score::W => -laplace_p(r)?,
        })
    }

    /// Radius up to which the maximum over `p` should sit at `p = 1`.
    pub fn radius(&self) -> Result<f64> {
        Ok(match *self {
            Score::Psi { beta } => radius_cesaro(beta, DEFAULT_TOL)?.root,
            Score::Phi { gamma, m } => radius_bernardi(gamma, m, DEFAULT_TOL)?.root,
            Score::G => radius_fourier(),
            Score::Q => 1.0,
            Score::W => radius_laplace_rstar(DEFAULT_TOL)?
                .first()
                .map(|root| root.root)
                .unwrap_or(1.0),
        })
    }
}

/// `Q'(1) = ((2r-3)/r) ln(1-r) - 2`.
pub fn q_prime_at_one(r: f64) -> f64 {
    (2.0 * r - 3.0) / r * (-r).ln_1p() - 2.0
}

/// Number of intervals of the `p` grid used by [`concavity_check`].
pub const CONCAVITY_STEPS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcavityReport {
    pub score: Score,
    pub r: f64,
    pub radius: f64,
    pub below_radius: bool,
    /// Largest second difference on the grid; concave when `<= 1e-10`.
    pub max_second_difference: f64,
    pub concave: bool,
    pub argmax_p: f64,
    pub max_at_one: bool,
    pub value_at_one: f64,
    pub derivative_at_one: f64,
}

impl ConcavityReport {
    /// Concave, and maximised at `p = 1` whenever `r` is inside the radius.
    pub fn holds(&self) -> bool {
        self.concave && (!self.below_radius || self.max_at_one)
    }
}

/// Evaluates `score` at `p = i/100`, `i = 0..=100`.
pub fn concavity_check(score: Score, r: f64) -> Result<ConcavityReport> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("r = {r} must lie in (0, 1)"));
    }
    let parts = score.parts(r)?;
    let values: Vec<f64> = (0..=CONCAVITY_STEPS)
        .map(|i| score.eval_with(parts, i as f64 / CONCAVITY_STEPS as f64, r))
        .collect();
    let max_second_difference = values
        .windows(3)
        .map(|w| w[0] - 2.0 * w[1] + w[2])
        .fold(f64::NEG_INFINITY, f64::max);
    let (imax, vmax) =
        values
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (i, v)| if v > acc.1 { (i, v) } else { acc },
            );
    let value_at_one = values[CONCAVITY_STEPS];
    let radius = score.radius()?;
    Ok(ConcavityReport {
        score,
        r,
        radius,
        below_radius: r <= radius,
        max_second_difference,
        concave: max_second_difference <= 1e-10,
        argmax_p: imax as f64 / CONCAVITY_STEPS as f64,
        max_at_one: value_at_one >= vmax - 1e-14 * vmax.abs().max(1.0),
        value_at_one,
        derivative_at_one: score.derivative_at_one(r)?,
    })
}
