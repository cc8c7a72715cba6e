//! Coefficient-level operators on slice series and their majorant series.
//!
//! Every majorant here is a function of the coefficient moduli only, so the
//! routines take a [`MajorantProfile`]. The octonion-valued transforms are
//! exposed alongside for completeness; they use the same weights.
//!
//! | operator | coefficient `k` of the image | majorant bound |
//! |---|---|---|
//! | β-Cesàro | `(1/(k+1)) Σ_{n<=k} c_{k-n}(β) a_n` | [`cesaro_bound`] |
//! | Bernardi | `a_k / (k+γ)`, `k >= m` | `r^m/(m+γ)` |
//! | discrete Fourier | `Σ_{k<=n} a_k e^{-2πJnk/(n+1)}` | `1/(1-r)` |
//! | discrete Laplace | `Σ_{k<=n} a_k/(n+1)^{k+1}` | `(1/r) log(1/(1-r))` |
//!
//! with `c_j(β) = Γ(j+β) / (Γ(j+1) Γ(β))`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::octonion::{ImaginaryUnit, Octonion};
use crate::series::{Majorant, MajorantProfile, OctSeries};

/// Distance from 1 below which β is treated as exactly 1.
pub const BETA_ONE_TOL: f64 = 1e-9;

/// Output series are summed until the neglected remainder falls below this
/// fraction of the largest coefficient modulus.
const REMAINDER_RTOL: f64 = 1e-17;

const MAX_OUTPUT_TERMS: usize = 1 << 20;

/// Parameter of the β-Cesàro operator.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CesaroParams {
    pub beta: f64,
}

impl CesaroParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return domain(format!("Cesàro parameter beta = {beta} must be positive"));
        }
        Ok(CesaroParams { beta })
    }

    pub fn is_classical(&self) -> bool {
        (self.beta - 1.0).abs() < BETA_ONE_TOL
    }
}

/// Parameters of the Bernardi operator: the image of `Σ_{k>=m} x^k a_k` is
/// `Σ_{k>=m} x^k a_k/(k+γ)`, defined for `γ > -m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BernardiParams {
    pub gamma: f64,
    pub m: usize,
}

impl BernardiParams {
    pub fn new(gamma: f64, m: usize) -> Result<Self> {
        if !(gamma.is_finite() && gamma + m as f64 > 0.0) {
            return domain(format!(
                "Bernardi parameters need gamma > -m, got gamma = {gamma}, m = {m}"
            ));
        }
        Ok(BernardiParams { gamma, m })
    }

    /// γ = 1, m = 0. The classical Libera operator carries an extra factor 2;
    /// this crate uses the unscaled form, whose Bohr bound is 1.
    pub fn libera() -> Self {
        BernardiParams { gamma: 1.0, m: 0 }
    }

    /// γ = 0, m = 1.
    pub fn alexander() -> Self {
        BernardiParams { gamma: 0.0, m: 1 }
    }

    /// `r^m / (m + γ)`.
    pub fn bound(&self, r: f64) -> f64 {
        r.powi(self.m as i32) / (self.m as f64 + self.gamma)
    }
}

/// `c_j = Γ(j+β) / (Γ(j+1) Γ(β))` for `j = 0..=n`, via `c_j = c_{j-1} (j-1+β)/j`.
pub fn gamma_weight_seq(beta: f64, n: usize) -> Result<Vec<f64>> {
    CesaroParams::new(beta)?;
    let mut c = Vec::with_capacity(n + 1);
    c.push(1.0);
    for j in 1..=n {
        let prev = c[j - 1];
        c.push(prev * (j as f64 - 1.0 + beta) / j as f64);
    }
    Ok(c)
}

/// `∫_0^r (1-t)^{-s} dt`, i.e. `(1 - (1-r)^{1-s})/(1-s)`, or `log(1/(1-r))`
/// when `s` is within [`BETA_ONE_TOL`] of 1.
pub fn kernel_integral(s: f64, r: f64) -> f64 {
    let log1m = (-r).ln_1p();
    if (s - 1.0).abs() < BETA_ONE_TOL {
        -log1m
    } else {
        -((1.0 - s) * log1m).exp_m1() / (1.0 - s)
    }
}

fn check_open_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("radius r = {r} must lie in [0, 1)"));
    }
    Ok(())
}

/// Sharp bound on `|T_β[f](x)|` at `|x| = r`:
/// `(1/r)(1-(1-r)^{1-β})/(1-β)`, or `(1/r) log(1/(1-r))` at β = 1.
pub fn cesaro_bound(beta: f64, r: f64) -> Result<f64> {
    CesaroParams::new(beta)?;
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("cesaro_bound needs 0 < r < 1, got {r}"));
    }
    Ok(kernel_integral(beta, r) / r)
}

/// The β-Cesàro image of `f`, truncated at the order of `f`.
pub fn cesaro_transform(f: &OctSeries, beta: f64) -> Result<OctSeries> {
    let n = f.order();
    let c = gamma_weight_seq(beta, n)?;
    let coeffs = (0..=n)
        .map(|k| {
            let s: Octonion = (0..=k).map(|j| f.coeff(j) * c[k - j]).sum();
            s / (k as f64 + 1.0)
        })
        .collect();
    OctSeries::new(coeffs)
}

/// Upper bound on `Σ_{k>L} r^k c_k(β+1)/(k+1)` from the ratio
/// `c_{k+1}(β+1)/c_k(β+1) = (k+1+β)/(k+1)`, which decreases in `k`.
fn cesaro_remainder(beta: f64, r: f64, last: usize, c_next: f64) -> f64 {
    let l = last as f64;
    let ratio = (l + 2.0 + beta) / (l + 2.0);
    if ratio * r >= 1.0 {
        return f64::INFINITY;
    }
    r.powi(last as i32 + 1) * c_next / ((l + 2.0) * (1.0 - ratio * r))
}

/// The Cesàro majorant `Σ_k r^k (1/(k+1)) Σ_{n<=k} c_{k-n}(β) |a_n|`.
///
/// The weights act on the moduli `|a_n|`, not on the moduli of the image
/// coefficients. The output series is summed past the order of `f` until its
/// remainder is negligible.
pub fn cesaro_majorant(f: &MajorantProfile, beta: f64, r: f64) -> Result<Majorant> {
    CesaroParams::new(beta)?;
    check_open_radius(r)?;
    let mags = f.mags();
    let n = f.order();
    let big_m = f.max_modulus();
    if r == 0.0 || big_m == 0.0 {
        return Ok(Majorant {
            value: mags[0],
            tail: 0.0,
        });
    }

    // c_k(β+1) for the remainder bound, advanced until the bound is negligible.
    let mut c1 = 1.0;
    let mut coeff_tail = f64::NAN;
    let mut k = 0usize;
    let output_rem = loop {
        let next = c1 * (k as f64 + 1.0 + beta) / (k as f64 + 1.0);
        if k == n {
            coeff_tail = big_m * cesaro_remainder(beta, r, n, next);
        }
        if k >= n {
            let rem = big_m * cesaro_remainder(beta, r, k, next);
            if rem <= REMAINDER_RTOL * big_m || k >= MAX_OUTPUT_TERMS {
                break rem;
            }
        }
        c1 = next;
        k += 1;
    };
    let last = k;

    let c = gamma_weight_seq(beta, last)?;
    let mut value = 0.0;
    let mut rk = 1.0;
    for k in 0..=last {
        let inner: f64 = (0..=k.min(n)).map(|j| c[k - j] * mags[j]).sum();
        value += rk * inner / (k as f64 + 1.0);
        rk *= r;
    }
    Ok(Majorant {
        value,
        tail: coeff_tail + output_rem,
    })
}

fn check_low_order_zero(mags: &[f64], m: usize) -> Result<()> {
    if let Some(k) = mags.iter().take(m).position(|v| *v != 0.0) {
        return Err(Error::Precondition(format!(
            "coefficient a_{k} is nonzero but the Bernardi operator with m = {m} needs a_k = 0 for k < m"
        )));
    }
    Ok(())
}

/// The Bernardi image `Σ_{k>=m} x^k a_k/(k+γ)`.
pub fn bernardi_transform(f: &OctSeries, params: BernardiParams) -> Result<OctSeries> {
    let params = BernardiParams::new(params.gamma, params.m)?;
    check_low_order_zero(f.majorant_coeffs().mags(), params.m)?;
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            if k < params.m {
                Octonion::ZERO
            } else {
                *a / (k as f64 + params.gamma)
            }
        })
        .collect();
    OctSeries::new(coeffs)
}

/// `Σ_{k>=m} |a_k| r^k/(k+γ)`; bounded by `r^m/(m+γ)` up to the Bernardi radius.
pub fn bernardi_majorant(f: &MajorantProfile, params: BernardiParams, r: f64) -> Result<Majorant> {
    let params = BernardiParams::new(params.gamma, params.m)?;
    check_open_radius(r)?;
    let mags = f.mags();
    check_low_order_zero(mags, params.m)?;
    let n = f.order();
    let value = (params.m..=n)
        .map(|k| mags[k] * r.powi(k as i32) / (k as f64 + params.gamma))
        .sum();
    let tail =
        f.max_modulus() * r.powi(n as i32 + 1) / ((n as f64 + 1.0 + params.gamma) * (1.0 - r));
    Ok(Majorant { value, tail })
}

/// `Σ_k |a_k| r^k/(k+1)`, bounded by 1 up to the Libera radius.
pub fn libera_majorant(f: &MajorantProfile, r: f64) -> Result<Majorant> {
    bernardi_majorant(f, BernardiParams::libera(), r)
}

/// `Σ_{k>=1} |a_k| r^k/k`, bounded by `r` up to the Alexander radius.
pub fn alexander_majorant(f: &MajorantProfile, r: f64) -> Result<Majorant> {
    bernardi_majorant(f, BernardiParams::alexander(), r)
}

/// The phase `e^{-2π J n k/(n+1)}`.
pub fn fourier_phase(unit: ImaginaryUnit, n: usize, k: usize) -> Octonion {
    let theta = 2.0 * PI * (n as f64) * (k as f64) / (n as f64 + 1.0);
    unit.exp(-theta)
}

/// Discrete Fourier image along the slice of `unit`, truncated at the order of `f`.
pub fn fourier_transform(f: &OctSeries, unit: ImaginaryUnit) -> Result<OctSeries> {
    let coeffs = (0..=f.order())
        .map(|n| {
            (0..=n)
                .map(|k| f.coeff(k) * fourier_phase(unit, n, k))
                .sum()
        })
        .collect();
    OctSeries::new(coeffs)
}

/// `Σ_n r^n Σ_{k<=n} |a_k|`. The phases have unit modulus for every `J`, so
/// the majorant does not depend on the slice.
pub fn fourier_majorant(f: &MajorantProfile, r: f64) -> Result<Majorant> {
    check_open_radius(r)?;
    let mut value = 0.0;
    let mut prefix = 0.0;
    let mut rn = 1.0;
    for m in f.mags() {
        prefix += m;
        value += rn * prefix;
        rn *= r;
    }
    // rn = r^{N+1}; the prefix sum is constant from N on
    value += prefix * rn / (1.0 - r);
    let tail = f.max_modulus() * rn / ((1.0 - r) * (1.0 - r));
    Ok(Majorant { value, tail })
}

pub fn fourier_bound(r: f64) -> f64 {
    1.0 / (1.0 - r)
}

/// Discrete Laplace image `Σ_n x^n Σ_{k<=n} a_k/(n+1)^{k+1}`, truncated at the order of `f`.
pub fn laplace_transform(f: &OctSeries) -> Result<OctSeries> {
    let coeffs = (0..=f.order())
        .map(|n| {
            let w = 1.0 / (n as f64 + 1.0);
            let mut pw = w;
            let mut s = Octonion::ZERO;
            for k in 0..=n {
                s += f.coeff(k) * pw;
                pw *= w;
            }
            s
        })
        .collect();
    OctSeries::new(coeffs)
}

/// `Σ_n r^n Σ_{k<=n} |a_k|/(n+1)^{k+1}` for `0 < r < 1`.
pub fn laplace_majorant(f: &MajorantProfile, r: f64) -> Result<Majorant> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("laplace_majorant needs 0 < r < 1, got {r}"));
    }
    let mags = f.mags();
    let n = f.order();
    let big_m = f.max_modulus();
    if big_m == 0.0 {
        return Ok(Majorant {
            value: 0.0,
            tail: 0.0,
        });
    }

    // Σ_{j>K} r^j (m_0/(j+1) + M/(j(j+1))) <= (m_0 + M/(K+1)) r^{K+1}/((K+2)(1-r))
    let remainder = |k: usize| {
        let kf = k as f64;
        (mags[0] + big_m / (kf + 1.0)) * r.powi(k as i32 + 1) / ((kf + 2.0) * (1.0 - r))
    };
    let mut last = n;
    while remainder(last) > REMAINDER_RTOL * big_m && last < MAX_OUTPUT_TERMS {
        last += 1;
    }

    let mut value = 0.0;
    let mut rn = 1.0;
    for j in 0..=last {
        let w = 1.0 / (j as f64 + 1.0);
        let mut pw = w;
        let mut inner = 0.0;
        for m in mags.iter().take(j.min(n) + 1) {
            inner += m * pw;
            pw *= w;
            if pw == 0.0 {
                break;
            }
        }
        value += rn * inner;
        rn *= r;
    }

    // unknown coefficients k > N contribute at most M r^{N+1} (N+2)^{-(N+1)} / ((N+1)(1-r))
    let nf = n as f64;
    let coeff_tail = big_m * ((nf + 1.0) * r.ln() - (nf + 1.0) * (nf + 2.0).ln()).exp()
        / ((nf + 1.0) * (1.0 - r));
    Ok(Majorant {
        value,
        tail: coeff_tail + remainder(last),
    })
}

/// `(1/r) log(1/(1-r))`.
pub fn laplace_bound(r: f64) -> f64 {
    -(-r).ln_1p() / r
}
