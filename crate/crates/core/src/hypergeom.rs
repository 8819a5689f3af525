//! Gauss hypergeometric series on `[0, 1)`.
//!
//! Only the power series is implemented. The arguments that occur here are
//! `κ² sin² t` and `λ²`, which stay below one for any modulus in `(0, 1)`.

use crate::error::{Error, Result};

/// Hard cap on series terms. The terms of F(1/4, 3/4; c; x) shrink roughly
/// like `x^n`, so this covers x up to about 0.995 at double precision.
const MAX_TERMS: usize = 20_000;

/// Parameter triple `(a, b; c)` of ₂F₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    a: f64,
    b: f64,
    c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if c <= 0.0 && c.fract() == 0.0 {
            return Err(Error::Domain(format!("c = {c} is a non-positive integer")));
        }
        Ok(Self { a, b, c })
    }

    /// `(1/4, 3/4; 1/2)`, the integrand family of the incomplete integral.
    pub const QUARTER_HALF: HypParams = HypParams { a: 0.25, b: 0.75, c: 0.5 };

    /// `(1/4, 3/4; 1)`, the family of the complete values.
    pub const QUARTER_ONE: HypParams = HypParams { a: 0.25, b: 0.75, c: 1.0 };

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// `₂F₁(a, b; c; x)` for `0 <= x < 1` by direct summation.
///
/// Stops once a term drops below `1e-16` of the partial sum; a series that
/// has not done so within [`MAX_TERMS`] yields [`Error::PrecisionLoss`].
pub fn gauss_2f1(p: HypParams, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("2F1 series needs 0 <= x < 1, got {x}")));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let n = n as f64;
        term *= (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1.0)) * x;
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::PrecisionLoss { x })
}

/// Closed form `F(1/4, 3/4; 1/2; sin² z) = cos(z/2) / cos z`.
pub fn f_half_closed(z: f64) -> Result<f64> {
    let c = z.cos();
    if c.abs() < 1e-14 {
        return Err(Error::Pole);
    }
    Ok((0.5 * z).cos() / c)
}

/// `F(1/4, 3/4; 1; m)`; `(π/2)·complete_f(κ²)` is the real half-period.
pub fn complete_f(m: f64) -> Result<f64> {
    gauss_2f1(HypParams::QUARTER_ONE, m)
}
