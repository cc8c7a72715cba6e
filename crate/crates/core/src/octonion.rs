//! Octonions built from pairs of quaternions by the Cayley–Dickson process.
//!
//! An element is stored as eight real coordinates `c0..c7` in the basis
//! `1, i, j, k, l, li, lj, lk`. Writing `x = a + l b` with quaternions
//! `a = c0 + c1 i + c2 j + c3 k` and `b = c4 + c5 i + c6 j + c7 k`, the
//! product is
//!
//! ```text
//! (a + l b)(c + l d) = (a c - d conj(b)) + l (conj(a) d + c b)
//! ```
//!
//! The multiplication table in [`multiplication_table`] is derived from that
//! rule at first use; nothing here is hand-typed.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Imaginary parts this small relative to `max(1, |x|)` are treated as zero
/// by [`Octonion::decompose`].
pub const REAL_AXIS_TOLERANCE: f64 = 1e-14;

/// Tolerance used when validating an [`ImaginaryUnit`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
struct Quaternion([f64; 4]);

impl Quaternion {
    fn mul(self, o: Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = o.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }

    fn conj(self) -> Quaternion {
        let [a0, a1, a2, a3] = self.0;
        Quaternion([a0, -a1, -a2, -a3])
    }

    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|n| self.0[n] + o.0[n]))
    }

    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|n| self.0[n] - o.0[n]))
    }
}

/// An element of the octonion algebra.
///
/// Serializes as a JSON array of the eight coordinates in basis order.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion([f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion::basis(0);
    pub const I: Octonion = Octonion::basis(1);
    pub const J: Octonion = Octonion::basis(2);
    pub const K: Octonion = Octonion::basis(3);
    pub const L: Octonion = Octonion::basis(4);
    pub const LI: Octonion = Octonion::basis(5);
    pub const LJ: Octonion = Octonion::basis(6);
    pub const LK: Octonion = Octonion::basis(7);

    pub const fn new(coords: [f64; 8]) -> Self {
        Octonion(coords)
    }

    /// The `n`-th canonical basis element. Panics if `n >= 8`.
    pub const fn basis(n: usize) -> Self {
        let mut c = [0.0; 8];
        c[n] = 1.0;
        Octonion(c)
    }

    pub const fn real(x: f64) -> Self {
        Octonion([x, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    pub fn coords(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    pub fn im(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    fn halves(&self) -> (Quaternion, Quaternion) {
        let c = &self.0;
        (
            Quaternion([c[0], c[1], c[2], c[3]]),
            Quaternion([c[4], c[5], c[6], c[7]]),
        )
    }

    fn from_halves(a: Quaternion, b: Quaternion) -> Octonion {
        let (a, b) = (a.0, b.0);
        Octonion([a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]])
    }

    pub fn conj(&self) -> Octonion {
        let c = &self.0;
        Octonion([c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Euclidean norm of the coordinate vector; multiplicative in this algebra.
    pub fn norm(&self) -> f64 {
        // hypot-style scaling keeps tiny and huge inputs representable
        let scale = self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        if scale == 0.0 || !scale.is_finite() {
            return scale;
        }
        let s: f64 = self.0.iter().map(|c| (c / scale) * (c / scale)).sum();
        scale * s.sqrt()
    }

    /// `x^{-1} = conj(x) / |x|^2`.
    pub fn inv(&self) -> Result<Octonion> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return domain("octonion inverse of zero");
        }
        Ok(self.conj() / n2)
    }

    pub fn scale(&self, s: f64) -> Octonion {
        Octonion(self.0.map(|c| c * s))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Non-negative integer power by repeated multiplication. Powers of a
    /// single octonion associate, so the grouping is irrelevant.
    pub fn powi(&self, n: u32) -> Octonion {
        let mut acc = Octonion::ONE;
        for _ in 0..n {
            acc = acc * *self;
        }
        acc
    }

    /// Writes `x = alpha + beta I` with `beta = |Im x| >= 0`.
    pub fn decompose(&self) -> Decomposition {
        let alpha = self.re();
        let im = self.im();
        let beta = im.norm();
        if beta < REAL_AXIS_TOLERANCE * self.norm().max(1.0) {
            return Decomposition {
                alpha,
                beta: 0.0,
                unit: None,
            };
        }
        Decomposition {
            alpha,
            beta,
            unit: Some(ImaginaryUnit(im / beta)),
        }
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &Octonion) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({:?})", self.0)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["", "i", "j", "k", "l", "li", "lj", "lk"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(NAMES) {
            if *c == 0.0 {
                continue;
            }
            if !first {
                f.write_str(if *c < 0.0 { " - " } else { " + " })?;
            } else if *c < 0.0 {
                f.write_str("-")?;
            }
            write!(f, "{}{}", c.abs(), name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let (a, b) = self.halves();
        let (c, d) = rhs.halves();
        let left = a.mul(c).sub(d.mul(b.conj()));
        let right = a.conj().mul(d).add(c.mul(b));
        Octonion::from_halves(left, right)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;

    fn div(self, rhs: f64) -> Octonion {
        Octonion(self.0.map(|c| c / rhs))
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|n| self.0[n] + rhs.0[n]))
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|n| self.0[n] - rhs.0[n]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion(self.0.map(|c| -c))
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Sum for Octonion {
    fn sum<I: Iterator<Item = Octonion>>(iter: I) -> Octonion {
        iter.fold(Octonion::ZERO, |a, b| a + b)
    }
}

impl From<f64> for Octonion {
    fn from(x: f64) -> Self {
        Octonion::real(x)
    }
}

/// `(ab)c - a(bc)`.
pub fn associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion {
    (a * b) * c - a * (b * c)
}

/// `ab - ba`.
pub fn commutator(a: Octonion, b: Octonion) -> Octonion {
    a * b - b * a
}

/// A unit-modulus purely imaginary octonion; every such element squares to -1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Octonion", into = "Octonion")]
pub struct ImaginaryUnit(Octonion);

impl ImaginaryUnit {
    /// Validates that `x` has zero real part and unit modulus.
    pub fn new(x: Octonion) -> Result<Self> {
        if x.re().abs() > UNIT_TOLERANCE || (x.norm() - 1.0).abs() > UNIT_TOLERANCE {
            return domain(format!("{x} is not an imaginary unit"));
        }
        Ok(ImaginaryUnit(x))
    }

    /// Normalizes the imaginary part of `x`.
    pub fn from_direction(x: Octonion) -> Result<Self> {
        match x.decompose().unit {
            Some(u) => Ok(u),
            None => domain(format!("{x} has no imaginary direction")),
        }
    }

    pub fn as_octonion(&self) -> Octonion {
        self.0
    }

    /// `alpha + beta I`, an element of the slice through this unit.
    pub fn slice_point(&self, alpha: f64, beta: f64) -> Octonion {
        Octonion::real(alpha) + self.0 * beta
    }

    /// `exp(theta I) = cos(theta) + sin(theta) I`.
    pub fn exp(&self, theta: f64) -> Octonion {
        self.slice_point(theta.cos(), theta.sin())
    }
}

impl TryFrom<Octonion> for ImaginaryUnit {
    type Error = crate::Error;

    fn try_from(x: Octonion) -> Result<Self> {
        ImaginaryUnit::new(x)
    }
}

impl From<ImaginaryUnit> for Octonion {
    fn from(u: ImaginaryUnit) -> Octonion {
        u.0
    }
}

/// Result of [`Octonion::decompose`]; `unit` is `None` on the real axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Decomposition {
    pub alpha: f64,
    pub beta: f64,
    pub unit: Option<ImaginaryUnit>,
}

/// Product of two basis elements: `e_a e_b = sign * e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

pub type MulTable = [[BasisProduct; 8]; 8];

/// The 8x8 basis multiplication table, generated once from the doubling rule.
pub fn multiplication_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let prod = Octonion::basis(a) * Octonion::basis(b);
                let (index, value) = prod
                    .0
                    .iter()
                    .enumerate()
                    .find(|(_, c)| **c != 0.0)
                    .expect("basis products are nonzero");
                BasisProduct {
                    sign: if *value > 0.0 { 1 } else { -1 },
                    index,
                }
            })
        })
    })
}
