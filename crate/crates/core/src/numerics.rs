//! Special functions and one-dimensional solvers shared by the radius and
//! verification code.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Default bracket-width tolerance for [`find_root`].
pub const DEFAULT_TOL: f64 = 1e-12;

/// Upper end used instead of 1 for equations with a singularity at y = 1.
pub const UPPER_CAP: f64 = 1.0 - 1e-9;

const MAX_ITERATIONS: usize = 200;

/// Dilogarithm `Li2(r) = Σ_{k>=1} r^k / k^2` for `0 <= r < 1`.
///
/// Above 1/2 the reflection `Li2(r) + Li2(1-r) = π²/6 - ln(r) ln(1-r)` moves
/// the argument back under 1/2, where the series converges at least like 2^-k.
pub fn li2(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("li2 argument {r} outside [0, 1)"));
    }
    if r <= 0.5 {
        return Ok(li2_series(r));
    }
    let s = 1.0 - r;
    Ok(PI * PI / 6.0 - r.ln() * (-r).ln_1p() - li2_series(s))
}

fn li2_series(r: f64) -> f64 {
    let mut sum = 0.0;
    let mut rk = r;
    let mut k = 1.0_f64;
    while rk > 0.0 {
        let term = rk / (k * k);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        k += 1.0;
        rk *= r;
    }
    sum
}

/// Outcome of a bracketed root search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub root: f64,
    /// Final bracket; contains `root` and a sign change of the function.
    pub bracket: (f64, f64),
    /// Function value at `root`.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn checked<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { x })
    }
}

/// Hybrid secant/bisection root finder on `[lo, hi]`.
///
/// Each step takes an Illinois-weighted secant point; whenever a step fails
/// to halve the bracket the next one bisects, so the width at least halves
/// every two iterations. Stops once the bracket is no wider than `tol` and
/// returns its midpoint. A point where `f` is exactly zero is returned at
/// once with the degenerate bracket `(x, x)`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult> {
    if !(lo < hi) || !(tol > 0.0) {
        return domain(format!("invalid bracket [{lo}, {hi}] or tolerance {tol}"));
    }
    let f_lo = checked(&f, lo)?;
    let f_hi = checked(&f, hi)?;
    for (x, fx) in [(lo, f_lo), (hi, f_hi)] {
        if fx == 0.0 {
            return Ok(RootResult {
                root: x,
                bracket: (x, x),
                residual: 0.0,
                iterations: 0,
                converged: true,
            });
        }
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::NoBracket { lo, hi, f_lo, f_hi });
    }

    let (mut a, mut fa, mut b, mut fb) = (lo, f_lo, hi, f_hi);
    let mut side = 0i8;
    let mut bisect = false;
    let mut iterations = 0;
    while b - a > tol && iterations < MAX_ITERATIONS {
        iterations += 1;
        let width = b - a;
        let mut x = if bisect {
            0.5 * (a + b)
        } else {
            (a * fb - b * fa) / (fb - fa)
        };
        if !(x > a && x < b) {
            x = 0.5 * (a + b);
        }
        let fx = checked(&f, x)?;
        if fx == 0.0 {
            return Ok(RootResult {
                root: x,
                bracket: (x, x),
                residual: 0.0,
                iterations,
                converged: true,
            });
        }
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        } else {
            b = x;
            fb = fx;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        }
        bisect = b - a > 0.5 * width;
    }
    let root = 0.5 * (a + b);
    Ok(RootResult {
        root,
        bracket: (a, b),
        residual: checked(&f, root)?,
        iterations,
        converged: b - a <= tol,
    })
}

/// Grid points `lo, lo + step, ...` up to and including `hi`.
pub fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil() as usize;
    let mut pts: Vec<f64> = (0..n)
        .map(|i| lo + i as f64 * step)
        .filter(|x| *x < hi)
        .collect();
    pts.push(hi);
    pts
}

/// Every grid cell of width `step` on `[lo, hi]` over which `f` changes sign.
///
/// Cells touching a non-finite value are skipped. A grid value of exactly
/// zero closes the cell that ends on it.
pub fn scan_brackets<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, step: f64) -> Vec<(f64, f64)> {
    if !(step > 0.0) || !(lo < hi) {
        return Vec::new();
    }
    let pts = grid(lo, hi, step);
    let vals: Vec<f64> = pts.iter().map(|&x| f(x)).collect();
    let sign = |v: f64| {
        if v > 0.0 {
            1
        } else if v < 0.0 {
            -1
        } else {
            0
        }
    };
    pts.windows(2)
        .zip(vals.windows(2))
        .filter(|(_, v)| v[0].is_finite() && v[1].is_finite())
        .filter(|(_, v)| {
            let (s0, s1) = (sign(v[0]), sign(v[1]));
            s0 * s1 < 0 || (s1 == 0 && s0 != 0)
        })
        .map(|(x, _)| (x[0], x[1]))
        .collect()
}

/// Double-exponential quadrature of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> f64 {
    quadrature::integrate(f, a, b, abs_tol).integral
}

/// Least-squares slope of `ln|y|` against `ln x`: the exponent `q` in
/// `|y| ≈ C x^q`. Needs at least two points with positive `x` and nonzero `y`.
pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| **x > 0.0 && **y != 0.0 && y.is_finite())
        .map(|(x, y)| (x.ln(), y.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn li2_brute(r: f64, terms: usize) -> f64 {
        // summed smallest-first to limit rounding
        (1..=terms)
            .rev()
            .map(|k| r.powi(k as i32) / (k as f64 * k as f64))
            .sum()
    }

    #[test]
    fn li2_known_values() {
        assert_eq!(li2(0.0).unwrap(), 0.0);
        let ln2 = 2f64.ln();
        let half = PI * PI / 12.0 - ln2 * ln2 / 2.0;
        assert!((li2(0.5).unwrap() - half).abs() < 1e-15);
        // 1.29971472300495872517... (30-digit reference)
        assert!((li2(0.9).unwrap() - 1.299_714_723_004_958_7).abs() < 1e-14);
        assert!(li2(1.0).is_err());
        assert!(li2(-0.1).is_err());
    }

    #[test]
    fn li2_matches_brute_force_below_half() {
        for r in [0.01, 0.1, 0.25, 0.4, 0.5] {
            assert!(
                (li2(r).unwrap() - li2_brute(r, 200)).abs() < 1e-15,
                "r = {r}"
            );
        }
    }

    #[test]
    fn root_of_linear_function() {
        let res = find_root(|y| y - 0.5, 0.0, 1.0, 1e-12).unwrap();
        assert!((res.root - 0.5).abs() < 1e-12);
        assert!(res.converged);
    }

    #[test]
    fn root_requires_sign_change() {
        let err = find_root(|y| y * y + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, Error::NoBracket { .. }));
    }

    #[test]
    fn root_rejects_non_finite_values() {
        let err = find_root(|y| (1.0 - y).ln(), 0.5, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }

    #[test]
    fn root_on_steep_log_equation() {
        // 3y + 2 log(1 - y) = 0, root 0.58281164386581138604...
        let res = find_root(|y| 3.0 * y + 2.0 * (-y).ln_1p(), 0.3, 0.9, 1e-13).unwrap();
        assert!((res.root - 0.582_811_643_865_811_4).abs() < 1e-12);
        assert!(res.residual.abs() < 1e-11);
        let (lo, hi) = res.bracket;
        assert!(lo <= res.root && res.root <= hi);
        assert!(res.iterations < 100);
    }

    #[test]
    fn scan_counts_crossings() {
        assert_eq!(scan_brackets(|x| x - 0.37, 0.0, 1.0, 0.1).len(), 1);
        assert!(scan_brackets(|_| 2.0, 0.0, 1.0, 0.01).is_empty());
        let b = scan_brackets(|x| (10.0 * x).sin(), 0.1, 1.0, 0.01);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|(lo, hi)| hi > lo && hi - lo <= 0.01 + 1e-15));
    }

    #[test]
    fn scan_counts_exact_zero_once() {
        let b = scan_brackets(|x| x - 0.5, 0.0, 1.0, 0.25);
        assert_eq!(b, vec![(0.25, 0.5)]);
    }

    #[test]
    fn scan_skips_non_finite_cells() {
        let b = scan_brackets(|x| if x > 0.8 { f64::NAN } else { x - 0.3 }, 0.0, 1.0, 0.1);
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn grid_ends_at_hi() {
        let g = grid(0.0, 1.0, 0.3);
        assert_eq!(g.len(), 5);
        assert_eq!(*g.last().unwrap(), 1.0);
    }

    #[test]
    fn quadrature_smoke() {
        let v = integrate(|t| t * t, 0.0, 1.0, 1e-14);
        assert!((v - 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn power_law_fit_recovers_exponent() {
        let xs = [0.1, 0.01, 0.001];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| -3.0 * x.powi(2)).collect();
        assert!((fit_power_law(&xs, &ys).unwrap() - 2.0).abs() < 1e-12);
        assert!(fit_power_law(&[0.1], &[1.0]).is_none());
    }
}
