//! Bohr radii as roots of their defining equations.
//!
//! * β-Cesàro: `3(1-(1-y)^{1-β})/(1-β) - 2((1-y)^{-β}-1)/β = 0`, which at
//!   β = 1 becomes `2y - 3(1-y) log(1/(1-y)) = 0`.
//! * Bernardi: `y^m/(m+γ) - 2 Σ_{k>m} y^k/(k+γ) = 0`.
//! * discrete Fourier: the classical constant 1/3.
//! * discrete Laplace, rearranged bound: `P(r) = 0` with
//!   `P(r) = (1/r) ln(1-r) + 2((1/r) ln(1/(1-r)) - Li2(r)/r)`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{find_root, li2, scan_brackets, RootResult, UPPER_CAP};
use crate::operators::{kernel_integral, BernardiParams, CesaroParams};

/// Lower end of the radius searches; every equation here is positive just
/// above zero.
const SCAN_LO: f64 = 1e-3;
const SCAN_STEP: f64 = 1e-3;

/// Which radius a query asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusKind {
    Cesaro,
    CesaroBeta1,
    Bernardi,
    Fourier,
    LaplaceRstar,
}

impl RadiusKind {
    pub fn name(&self) -> &'static str {
        match self {
            RadiusKind::Cesaro => "cesaro",
            RadiusKind::CesaroBeta1 => "cesaro_beta1",
            RadiusKind::Bernardi => "bernardi",
            RadiusKind::Fourier => "fourier",
            RadiusKind::LaplaceRstar => "laplace_rstar",
        }
    }
}

/// The Cesàro radius function. Positive on `(0, R_β)`, negative beyond.
///
/// Uses the β = 1 form `2y - 3(1-y) log(1/(1-y))` when β is within
/// [`crate::operators::BETA_ONE_TOL`] of 1; that form has the opposite sign
/// convention (negative below the root).
pub fn cesaro_radius_equation(beta: f64, y: f64) -> f64 {
    if (beta - 1.0).abs() < crate::operators::BETA_ONE_TOL {
        2.0 * y + 3.0 * (1.0 - y) * (-y).ln_1p()
    } else {
        3.0 * kernel_integral(beta, y) - 2.0 * kernel_integral(beta + 1.0, y)
    }
}

/// `R_β`, the positive root of the Cesàro radius equation.
pub fn radius_cesaro(beta: f64, tol: f64) -> Result<RootResult> {
    CesaroParams::new(beta)?;
    let f = |y: f64| cesaro_radius_equation(beta, y);
    let brackets = scan_brackets(f, SCAN_LO, UPPER_CAP, SCAN_STEP);
    let &(lo, hi) = brackets
        .first()
        .ok_or_else(|| Error::Precondition(format!("no Cesàro radius found for beta = {beta}")))?;
    find_root(f, lo, hi, tol)
}

/// Value of the Bernardi radius function at `y`, with a bound on the
/// neglected part of the infinite sum (already scaled by the factor 2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncatedValue {
    pub value: f64,
    pub tail: f64,
}

const MAX_TERMS: usize = 100_000_000;

/// `Σ_{k>m} y^k/(k+γ)`, summed until `y^{K+1}/((K+1+γ)(1-y)) < tol` or
/// until 10^8 terms have been added.
pub fn bernardi_tail_sum(params: BernardiParams, y: f64, tol: f64) -> TruncatedValue {
    let g = params.gamma;
    let mut k = params.m + 1;
    let mut yk = y.powi(k as i32);
    let mut sum = 0.0;
    loop {
        sum += yk / (k as f64 + g);
        yk *= y;
        let bound = yk / ((k as f64 + 1.0 + g) * (1.0 - y));
        if bound < tol || yk == 0.0 || k - params.m >= MAX_TERMS {
            return TruncatedValue {
                value: sum,
                tail: bound,
            };
        }
        k += 1;
    }
}

/// `y^m/(m+γ) - 2 Σ_{k>m} y^k/(k+γ)`.
pub fn bernardi_radius_equation(params: BernardiParams, y: f64, tol: f64) -> TruncatedValue {
    let s = bernardi_tail_sum(params, y, tol);
    TruncatedValue {
        value: params.bound(y) - 2.0 * s.value,
        tail: 2.0 * s.tail,
    }
}

/// `R_γ`, the positive root of the Bernardi radius equation.
///
/// Divided by `y^m` the equation is strictly decreasing, so the root is
/// unique. The search walks a grid of step 0.01 and then `1 - 10^{-j}`
/// until the sign flips. Each sum is truncated with tail below `tol/10`.
pub fn radius_bernardi(gamma: f64, m: usize, tol: f64) -> Result<RootResult> {
    let params = BernardiParams::new(gamma, m)?;
    if !(tol > 0.0) {
        return domain(format!("tolerance {tol} must be positive"));
    }
    let eq = |y: f64| bernardi_radius_equation(params, y, tol / 10.0).value;
    let mut pts: Vec<f64> = (1..100).map(|i| i as f64 / 100.0).collect();
    pts.extend((3..=9).map(|j| 1.0 - 10f64.powi(-j)));
    let mut prev = pts[0];
    if eq(prev) <= 0.0 {
        return find_root(eq, f64::MIN_POSITIVE.max(1e-12), prev, tol);
    }
    for &y in &pts[1..] {
        if eq(y) <= 0.0 {
            return find_root(eq, prev, y, tol);
        }
        prev = y;
    }
    Err(Error::Precondition(format!(
        "Bernardi radius for gamma = {gamma}, m = {m} lies above {UPPER_CAP}"
    )))
}

/// The discrete Fourier radius, exactly 1/3.
pub fn radius_fourier() -> f64 {
    1.0 / 3.0
}

/// `P(r) = (1/r) ln(1-r) + 2((1/r) ln(1/(1-r)) - Li2(r)/r)`, simplified to
/// `(ln(1/(1-r)) - 2 Li2(r))/r`.
pub fn laplace_p(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("P(r) needs 0 < r < 1, got {r}"));
    }
    Ok((-(-r).ln_1p() - 2.0 * li2(r)?) / r)
}

/// Every root of `P` in (0, 1) found on a step-1e-3 grid, each refined to
/// `tol`. An empty list means no sign change was observed.
pub fn radius_laplace_rstar(tol: f64) -> Result<Vec<RootResult>> {
    let p = |r: f64| laplace_p(r).unwrap_or(f64::NAN);
    scan_brackets(p, SCAN_LO, UPPER_CAP, SCAN_STEP)
        .into_iter()
        .map(|(lo, hi)| find_root(p, lo, hi, tol))
        .collect()
}
