//! Truncated slice-regular power series `f(x) = Σ x^k a_k` on the unit ball.
//!
//! Coefficients sit to the right of the powers. A series of order `N` holds
//! `a_0..a_N`; everything above `N` is zero, so an [`OctSeries`] is an exact
//! polynomial. Majorant routines additionally report how much coefficients
//! beyond `N` could contribute if they were bounded by the largest modulus
//! present (see [`Majorant::tail`]).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::octonion::Octonion;

/// Order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 256;

/// Tolerance on `|u| = 1` for the extremal families.
const UNIT_NORM_TOLERANCE: f64 = 1e-12;

/// A truncated power series with octonion coefficients on the right.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct OctSeries {
    coeffs: Vec<Octonion>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<Octonion>,
}

impl TryFrom<SeriesRepr> for OctSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.order + 1 {
            return domain(format!(
                "order {} requires {} coefficients, found {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            ));
        }
        OctSeries::new(r.coeffs)
    }
}

impl From<OctSeries> for SeriesRepr {
    fn from(s: OctSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs,
        }
    }
}

impl OctSeries {
    /// Builds a series from `a_0..a_N`. At least one coefficient is required
    /// and all must be finite.
    pub fn new(coeffs: Vec<Octonion>) -> Result<Self> {
        if coeffs.is_empty() {
            return domain("a series needs at least the constant coefficient");
        }
        if let Some(k) = coeffs.iter().position(|a| !a.is_finite()) {
            return domain(format!("coefficient {k} is not finite"));
        }
        Ok(OctSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        OctSeries {
            coeffs: vec![Octonion::ZERO; order + 1],
        }
    }

    /// The constant series `a`, padded with zeros up to `order`.
    pub fn constant(a: Octonion, order: usize) -> Self {
        let mut s = OctSeries::zero(order);
        s.coeffs[0] = a;
        s
    }

    /// `x^k a`. Panics if `k > order`.
    pub fn monomial(k: usize, a: Octonion, order: usize) -> Self {
        assert!(k <= order, "monomial degree {k} exceeds order {order}");
        let mut s = OctSeries::zero(order);
        s.coeffs[k] = a;
        s
    }

    /// A series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        OctSeries::new(coeffs.iter().map(|&c| Octonion::real(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Octonion] {
        &self.coeffs
    }

    /// `a_k`, or zero above the order.
    pub fn coeff(&self, k: usize) -> Octonion {
        self.coeffs.get(k).copied().unwrap_or(Octonion::ZERO)
    }

    /// Re-truncates (or zero-pads) to `order`.
    pub fn with_order(&self, order: usize) -> Self {
        OctSeries {
            coeffs: (0..=order).map(|k| self.coeff(k)).collect(),
        }
    }

    /// `x^m f(x)`: shifts every coefficient up by `m`.
    pub fn shifted(&self, m: usize) -> Self {
        let mut coeffs = vec![Octonion::ZERO; m];
        coeffs.extend_from_slice(&self.coeffs);
        OctSeries { coeffs }
    }

    /// `Σ (x^k) a_k`, with `x^k` built by repeated multiplication.
    pub fn eval(&self, x: Octonion) -> Octonion {
        let mut power = Octonion::ONE;
        let mut acc = Octonion::ZERO;
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power * x;
            }
            acc += power * *a;
        }
        acc
    }

    /// Slice product: the Cauchy convolution `c_n = Σ a_k b_{n-k}`, truncated
    /// at the smaller of the two orders.
    pub fn slice_mul(&self, other: &OctSeries) -> OctSeries {
        self.slice_mul_to(other, self.order().min(other.order()))
    }

    fn slice_mul_to(&self, other: &OctSeries, order: usize) -> OctSeries {
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&k| k <= self.order() && n - k <= other.order())
                    .map(|k| self.coeffs[k] * other.coeffs[n - k])
                    .sum()
            })
            .collect();
        OctSeries { coeffs }
    }

    /// Slice conjugate: conjugates every coefficient.
    pub fn slice_conj(&self) -> OctSeries {
        OctSeries {
            coeffs: self.coeffs.iter().map(Octonion::conj).collect(),
        }
    }

    /// Normal function `f . f^c`. Its coefficients are real up to rounding.
    pub fn normal(&self) -> OctSeries {
        self.slice_mul(&self.slice_conj())
    }

    /// Slice reciprocal `N(f)^{-1} . f^c`, truncated at `order`.
    ///
    /// `N(f)` has real coefficients, so its formal inverse is the ordinary
    /// real power-series reciprocal.
    pub fn slice_recip(&self, order: usize) -> Result<OctSeries> {
        let padded = self.with_order(order);
        let normal: Vec<f64> = padded.normal().coeffs.iter().map(Octonion::re).collect();
        let inverse = real_series_reciprocal(&normal)?;
        let inverse = OctSeries::from_real(&inverse)?;
        Ok(inverse.slice_mul_to(&padded.slice_conj(), order))
    }

    /// Coefficient moduli `|a_k|`.
    pub fn majorant_coeffs(&self) -> MajorantProfile {
        MajorantProfile {
            mags: self.coeffs.iter().map(Octonion::norm).collect(),
        }
    }

    /// Largest coordinate difference over all coefficients (shorter series
    /// are zero-padded).
    pub fn max_abs_diff(&self, other: &OctSeries) -> f64 {
        let n = self.order().max(other.order());
        (0..=n)
            .map(|k| self.coeff(k).max_abs_diff(&other.coeff(k)))
            .fold(0.0, f64::max)
    }
}

/// Formal reciprocal of a real power series with the same number of terms.
pub fn real_series_reciprocal(c: &[f64]) -> Result<Vec<f64>> {
    let c0 = c.first().copied().unwrap_or(0.0);
    if c0 == 0.0 || !c0.is_finite() {
        return Err(Error::Singular(format!(
            "constant coefficient {c0} cannot be inverted"
        )));
    }
    let mut inv = Vec::with_capacity(c.len());
    inv.push(1.0 / c0);
    for n in 1..c.len() {
        let s: f64 = (1..=n).map(|j| c[j] * inv[n - j]).sum();
        inv.push(-s / c0);
    }
    Ok(inv)
}

fn check_unit(u: Octonion) -> Result<()> {
    if (u.norm() - 1.0).abs() > UNIT_NORM_TOLERANCE {
        return domain(format!(
            "|u| = {} but a boundary point is required",
            u.norm()
        ));
    }
    Ok(())
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return domain(format!("p = {p} must lie in [0, 1)"));
    }
    Ok(())
}

/// The Möbius-type extremal function `p - (1-p^2) u Σ_{k>=1} x^k p^{k-1}`.
pub fn extremal_fp(p: f64, u: Octonion, order: usize) -> Result<OctSeries> {
    check_p(p)?;
    check_unit(u)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Octonion::real(p));
    let scale = 1.0 - p * p;
    let mut pk = 1.0;
    for _ in 1..=order {
        coeffs.push(u * (-scale * pk));
        pk *= p;
    }
    OctSeries::new(coeffs)
}

/// `g_p(x) = -x^m p + (1-p^2) Σ_{k>=1} x^{k+m} u p^{k-1}`.
pub fn extremal_gp(p: f64, u: Octonion, m: usize, order: usize) -> Result<OctSeries> {
    check_p(p)?;
    check_unit(u)?;
    if order < m {
        return domain(format!(
            "order {order} is below the vanishing order m = {m}"
        ));
    }
    let mut coeffs = vec![Octonion::ZERO; order + 1];
    coeffs[m] = Octonion::real(-p);
    let scale = 1.0 - p * p;
    let mut pk = 1.0;
    for c in coeffs.iter_mut().skip(m + 1) {
        *c = u * (scale * pk);
        pk *= p;
    }
    OctSeries::new(coeffs)
}

fn random_direction(rng: &mut ChaCha8Rng) -> Octonion {
    loop {
        let v = Octonion::new(std::array::from_fn(|_| rng.sample(StandardNormal)));
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

/// A seeded random series satisfying `|a_0| = p` and `|a_k| <= 1 - p^2`.
///
/// Moduli of `a_k`, `k >= 1`, are uniform on `[0, 1 - p^2]`; directions are
/// uniform on the unit sphere of R^8. The same `(p, seed, order)` always
/// yields bit-identical coefficients.
pub fn admissible_random(p: f64, seed: u64, order: usize) -> Result<OctSeries> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1.0 - p * p;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(random_direction(&mut rng) * p);
    for _ in 1..=order {
        let modulus = rng.random::<f64>() * bound;
        coeffs.push(random_direction(&mut rng) * modulus);
    }
    OctSeries::new(coeffs)
}

/// A majorant value together with a bound on what was left out.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Majorant {
    /// Sum over the stored coefficients.
    pub value: f64,
    /// Upper bound on the contribution of coefficients beyond the order,
    /// assuming they are bounded by the largest stored modulus, plus any
    /// remainder of the output series that was not summed.
    pub tail: f64,
}

impl Majorant {
    pub fn upper(&self) -> f64 {
        self.value + self.tail
    }
}

/// The coefficient moduli `m_k = |a_k|` of a series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MajorantProfile {
    mags: Vec<f64>,
}

impl MajorantProfile {
    pub fn new(mags: Vec<f64>) -> Result<Self> {
        if mags.is_empty() {
            return domain("empty majorant profile");
        }
        if let Some(k) = mags.iter().position(|m| !(m.is_finite() && *m >= 0.0)) {
            return domain(format!(
                "modulus m_{k} = {} is not a finite nonnegative number",
                mags[k]
            ));
        }
        Ok(MajorantProfile { mags })
    }

    pub fn mags(&self) -> &[f64] {
        &self.mags
    }

    pub fn order(&self) -> usize {
        self.mags.len() - 1
    }

    pub fn max_modulus(&self) -> f64 {
        self.mags.iter().copied().fold(0.0, f64::max)
    }

    /// Multiplies every modulus by `s >= 0`.
    pub fn scaled(&self, s: f64) -> MajorantProfile {
        MajorantProfile {
            mags: self.mags.iter().map(|m| m * s).collect(),
        }
    }

    /// `Σ m_k r^k` with tail `max_k m_k r^{N+1} / (1 - r)`.
    pub fn eval(&self, r: f64) -> Result<Majorant> {
        if !(0.0..1.0).contains(&r) {
            return domain(format!("radius r = {r} must lie in [0, 1)"));
        }
        let mut value = 0.0;
        let mut rk = 1.0;
        for m in &self.mags {
            value += m * rk;
            rk *= r;
        }
        Ok(Majorant {
            value,
            tail: self.max_modulus() * rk / (1.0 - r),
        })
    }
}

impl From<&OctSeries> for MajorantProfile {
    fn from(f: &OctSeries) -> Self {
        f.majorant_coeffs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Octonion {
        Octonion::real(re) + Octonion::I * im
    }

    #[test]
    fn eval_constant_and_identity() {
        let a = Octonion::new([1.0, -2.0, 0.5, 0.0, 3.0, 0.0, 0.0, 1.0]);
        let x = Octonion::new([0.1, 0.2, -0.1, 0.0, 0.3, 0.0, 0.1, 0.0]);
        assert_eq!(OctSeries::constant(a, 5).eval(x), a);
        assert_eq!(OctSeries::monomial(1, Octonion::ONE, 3).eval(x), x);
    }

    #[test]
    fn unit_constant_is_neutral_for_slice_mul() {
        let f = admissible_random(0.4, 3, 12).unwrap();
        let one = OctSeries::constant(Octonion::ONE, 12);
        assert_eq!(f.slice_mul(&one), f);
        assert_eq!(one.slice_mul(&f), f);
    }

    #[test]
    fn geometric_series_inverts_one_minus_px() {
        let p = 0.6;
        let n = 20;
        let lin = OctSeries::from_real(&[1.0, -p]).unwrap().with_order(n);
        let geo =
            OctSeries::from_real(&(0..=n).map(|k| p.powi(k as i32)).collect::<Vec<_>>()).unwrap();
        let prod = lin.slice_mul(&geo);
        assert!(prod.max_abs_diff(&OctSeries::constant(Octonion::ONE, n)) < 1e-15);

        let recip = lin.slice_recip(n).unwrap();
        assert!(recip.max_abs_diff(&geo) < 1e-14);
    }

    #[test]
    fn recip_of_unit_constant() {
        let one = OctSeries::constant(Octonion::ONE, 4);
        assert_eq!(one.slice_recip(4).unwrap(), one);
    }

    #[test]
    fn recip_requires_nonzero_constant() {
        let f = OctSeries::monomial(1, Octonion::ONE, 3);
        assert!(matches!(f.slice_recip(3), Err(Error::Singular(_))));
    }

    #[test]
    fn conj_involution_and_real_fixed_points() {
        let f = admissible_random(0.3, 9, 8).unwrap();
        assert_eq!(f.slice_conj().slice_conj(), f);
        let g = OctSeries::from_real(&[1.0, -0.5, 0.25]).unwrap();
        assert_eq!(g.slice_conj(), g);
    }

    #[test]
    fn normal_of_simple_series() {
        let a0 = Octonion::new([0.3, 0.1, 0.0, -0.2, 0.0, 0.4, 0.0, 0.0]);
        let n = OctSeries::constant(a0, 3).normal();
        assert!((n.coeff(0).re() - a0.norm_sqr()).abs() < 1e-16);
        assert!(n.coeff(0).im().norm() < 1e-16);

        let u = Octonion::new([0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0]);
        let n = OctSeries::monomial(1, u, 3).normal();
        assert!(n.max_abs_diff(&OctSeries::monomial(2, Octonion::ONE, 3)) < 1e-15);
    }

    #[test]
    fn normal_of_p_minus_xu_is_real() {
        // (p - x u)(p - x conj(u)) = p^2 - 2 p Re(u) x + x^2
        let u = Octonion::new([0.5, 0.5, 0.5, 0.0, 0.0, 0.5, 0.0, 0.0]);
        let p = 0.7;
        let f = OctSeries::new(vec![Octonion::real(p), -u]).unwrap();
        let n = f.normal();
        let expect = OctSeries::from_real(&[p * p, -2.0 * p * u.re()]).unwrap();
        assert!(n.max_abs_diff(&expect) < 1e-15);
        // at order 2 the x^2 term appears
        let n2 = f.with_order(2).normal();
        assert!((n2.coeff(2).re() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn slice_mul_on_a_single_slice_is_pointwise() {
        let f = OctSeries::new(vec![c(0.2, 0.1), c(-0.3, 0.4), c(0.1, 0.0)]).unwrap();
        let g = OctSeries::new(vec![c(0.5, -0.2), c(0.0, 0.3), c(0.2, 0.2)]).unwrap();
        let x = c(0.3, 0.2);
        let lhs = f.with_order(4).slice_mul(&g.with_order(4)).eval(x);
        let rhs = f.eval(x) * g.eval(x);
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn slice_mul_differs_from_pointwise_off_slice() {
        let f = OctSeries::new(vec![Octonion::ZERO, Octonion::J]).unwrap();
        let g = OctSeries::new(vec![Octonion::L, Octonion::ZERO]).unwrap();
        let x = c(0.3, 0.2);
        let lhs = f.slice_mul(&g).eval(x);
        let rhs = f.eval(x) * g.eval(x);
        assert!(lhs.max_abs_diff(&rhs) > 1e-3);
    }

    #[test]
    fn extremal_fp_examples() {
        let u = Octonion::LJ;
        let f0 = extremal_fp(0.0, u, 4).unwrap();
        assert!(f0.max_abs_diff(&OctSeries::monomial(1, -u, 4)) == 0.0);

        let f = extremal_fp(0.5, Octonion::I, 6).unwrap();
        let mags = f.majorant_coeffs();
        let expect = [0.5, 0.75, 0.375, 0.1875];
        for (k, e) in expect.iter().enumerate() {
            assert!((mags.mags()[k] - e).abs() < 1e-15);
        }
        assert!(extremal_fp(1.0, u, 4).is_err());
        assert!(extremal_fp(0.5, u * 2.0, 4).is_err());
    }

    #[test]
    fn extremal_gp_examples() {
        let u = Octonion::K;
        let g = extremal_gp(0.0, u, 1, 5).unwrap();
        assert!(g.max_abs_diff(&OctSeries::monomial(2, u, 5)) == 0.0);

        let g = extremal_gp(0.4, u, 3, 10).unwrap();
        for k in 0..3 {
            assert_eq!(g.coeff(k), Octonion::ZERO);
        }
        assert_eq!(g.coeff(3), Octonion::real(-0.4));
        assert!((g.coeff(5).norm() - 0.84 * 0.4).abs() < 1e-15);
        assert!(extremal_gp(0.4, u, 3, 2).is_err());

        // m = 0 is the negative of f_p with the same u
        let f = extremal_fp(0.3, u, 8).unwrap();
        let g = extremal_gp(0.3, u, 0, 8).unwrap();
        let neg: Vec<_> = f.coeffs().iter().map(|a| -*a).collect();
        assert!(g.max_abs_diff(&OctSeries::new(neg).unwrap()) < 1e-16);
    }

    #[test]
    fn admissible_is_deterministic_and_bounded() {
        let a = admissible_random(0.8, 42, 64).unwrap();
        let b = admissible_random(0.8, 42, 64).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, admissible_random(0.8, 43, 64).unwrap());
        let mags = a.majorant_coeffs();
        assert!((mags.mags()[0] - 0.8).abs() < 1e-15);
        assert!(mags.mags()[1..].iter().all(|m| *m <= 1.0 - 0.64));

        let eps = 1e-6;
        let tight = admissible_random(1.0 - eps, 1, 32)
            .unwrap()
            .majorant_coeffs();
        assert!(tight.mags()[1..]
            .iter()
            .all(|m| *m <= 2.0 * eps - eps * eps + 1e-18));
    }

    #[test]
    fn profile_eval_and_tail() {
        let prof = OctSeries::constant(Octonion::ONE, 3).majorant_coeffs();
        assert_eq!(prof.mags(), &[1.0, 0.0, 0.0, 0.0]);
        let m = prof.eval(0.0).unwrap();
        assert_eq!(m.value, 1.0);
        let m = prof.eval(0.5).unwrap();
        assert_eq!(m.value, 1.0);
        assert!((m.tail - 0.0625 / 0.5).abs() < 1e-15);
        assert!(prof.eval(1.0).is_err());
    }

    #[test]
    fn json_shape() {
        let f = OctSeries::from_real(&[1.0, 0.5]).unwrap();
        let v: serde_json::Value = serde_json::to_value(&f).unwrap();
        assert_eq!(v["order"], 1);
        assert_eq!(v["coeffs"][1][0], 0.5);
        assert_eq!(v["coeffs"][1].as_array().unwrap().len(), 8);
        let back: OctSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);

        let bad = r#"{"order": 2, "coeffs": [[1,0,0,0,0,0,0,0]]}"#;
        assert!(serde_json::from_str::<OctSeries>(bad).is_err());
    }
}
