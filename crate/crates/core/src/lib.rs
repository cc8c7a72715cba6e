//! Bohr-type inequalities for slice regular functions of an octonionic
//! variable, checked numerically.
//!
//! The crate is organised bottom-up:
//!
//! * [`octonion`]: the algebra, built from quaternion pairs.
//! * [`series`]: truncated power series with coefficients on the right, the
//!   slice product and reciprocal, and the admissible and extremal families.
//! * [`operators`]: Cesàro, Bernardi, discrete Fourier and discrete Laplace
//!   transforms with their majorant series and bounds.
//! * [`numerics`]: dilogarithm, bracketed root finding, quadrature.
//! * [`radii`]: the radius equations and their roots.
//! * [`verification`]: sweeps, sharpness scans and concavity checks.
//!
//! ```
//! use octobohr::radii::radius_cesaro;
//!
//! let r = radius_cesaro(1.0, 1e-12).unwrap();
//! assert!((r.root - 0.5335).abs() < 5e-4);
//! ```

pub mod error;
pub mod numerics;
pub mod octonion;
pub mod operators;
pub mod radii;
pub mod series;
pub mod verification;

pub use error::{Error, Result};
pub use octonion::{ImaginaryUnit, Octonion};
pub use series::{Majorant, MajorantProfile, OctSeries};
pub use verification::{Inequality, Score};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/octonions.md")]
    mod octonions {}
    #[doc = include_str!("../../../book/src/slice-series.md")]
    mod slice_series {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/radii.md")]
    mod radii {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
