//! Numeric plumbing shared by the elliptic-function modules: a complex
//! scalar alias, tanh-sinh quadrature, bracketed root finding and the
//! three-real-root depressed cubic, plus numerical differentiation used by
//! the residual checks.

mod cubic;
mod derivative;
mod quad;
mod roots;

pub use cubic::{solve_depressed_cubic, Roots3};
pub use derivative::{cauchy_derivative, central_difference, five_point_difference};
pub use quad::{integrate, integrate_with_complement, MAX_LEVEL};
pub use roots::{find_root, newton_bisect};

use crate::error::{Error, Result};

/// Complex argument and value type of every elliptic function here.
pub type ComplexScalar = num_complex::Complex64;

/// Library-wide default absolute tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// A closed real interval with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::Domain(format!("interval requires lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}
