//! Elliptic solutions of the Chebyshev equation
//!
//! ```text
//! (y′)² = T₄(y) − (1 − 2λ²) = 8y⁴ − 8y² + 2λ²
//! ```
//!
//! with initial value one of the zeros `±μ±`, `μ± = √((1 ± κ)/2)`. With
//! `P = ℘(·; G2, G3)`, `G2 = (16/3)(1 + 3λ²)`, `G3 = (64/27)(1 − 9λ²)`:
//!
//! ```text
//! y₄⁺ = μ⁺ [1 + 4κ / (P − (4/3 + 2κ))]
//! ```
//!
//! and `y₄⁻` is the same expression with `−κ` in place of `κ`.

use crate::error::{Error, Result};
use crate::numeric::ComplexScalar;
use crate::quartic::QuarticCoefficients;
use crate::weierstrass::{Invariants, PeriodPair, Weierstrass};

/// `T₄(t) = 8t⁴ − 8t² + 1`.
pub fn chebyshev_t4(t: f64) -> f64 {
    let t2 = t * t;
    8.0 * t2 * (t2 - 1.0) + 1.0
}

#[derive(Debug, Clone)]
pub struct Y4Context {
    param_lambda: f64,
    kappa: f64,
    mu_plus: f64,
    mu_minus: f64,
    wp: Weierstrass,
}

/// Context for the equation with parameter `lambda ∈ (0, 1)`.
///
/// Passing the modulus `κ` instead gives the variant with `T₄(y) − (1 − 2κ²)`
/// on the right-hand side, whose roles of `κ` and `λ` are swapped.
pub fn make_y4_context(lambda: f64) -> Result<Y4Context> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain(format!("parameter must lie in (0, 1), got {lambda}")));
    }
    let kappa = ((1.0 - lambda) * (1.0 + lambda)).sqrt();
    let l2 = lambda * lambda;
    let inv = Invariants::new(16.0 / 3.0 * (1.0 + 3.0 * l2), 64.0 / 27.0 * (1.0 - 9.0 * l2))?;
    Ok(Y4Context {
        param_lambda: lambda,
        kappa,
        mu_plus: (0.5 * (1.0 + kappa)).sqrt(),
        mu_minus: (0.5 * (1.0 - kappa)).sqrt(),
        wp: Weierstrass::new(inv)?,
    })
}

impl Y4Context {
    pub fn lambda(&self) -> f64 {
        self.param_lambda
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn mu_plus(&self) -> f64 {
        self.mu_plus
    }

    pub fn mu_minus(&self) -> f64 {
        self.mu_minus
    }

    pub fn invariants(&self) -> Invariants {
        self.wp.invariants()
    }

    /// `(Ω, |Ω′|)`.
    pub fn periods(&self) -> PeriodPair {
        self.wp.periods()
    }

    /// The coperiodic Weierstrass function `P`.
    pub fn weierstrass(&self) -> &Weierstrass {
        &self.wp
    }

    /// Right-hand side `8y⁴ − 8y² + 2λ²` of the differential equation.
    pub fn rhs(&self, y: ComplexScalar) -> ComplexScalar {
        let y2 = y * y;
        8.0 * y2 * (y2 - 1.0) + 2.0 * self.param_lambda * self.param_lambda
    }

    /// The right-hand side as a quartic in binomial normalization.
    pub fn equation(&self) -> QuarticCoefficients {
        QuarticCoefficients::new(8.0, 0.0, -4.0 / 3.0, 0.0, 2.0 * self.param_lambda * self.param_lambda)
            .expect("quartic is non-constant")
    }

    pub fn y4_plus(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        self.branch(z, self.kappa, self.mu_plus)
    }

    pub fn y4_minus(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        self.branch(z, -self.kappa, self.mu_minus)
    }

    fn branch(&self, z: ComplexScalar, k: f64, mu: f64) -> Result<ComplexScalar> {
        let p = match self.wp.value(z) {
            Ok(p) => p,
            Err(Error::Pole) => return Ok(ComplexScalar::new(mu, 0.0)),
            Err(e) => return Err(e),
        };
        let denom = p - (4.0 / 3.0 + 2.0 * k);
        if denom.norm() < 1e-12 {
            return Err(Error::Pole);
        }
        Ok(mu * (1.0 + 4.0 * k / denom))
    }

    /// `1/y₄⁺(z)`, finite at the poles of `y₄⁺`.
    pub fn y4_plus_reciprocal(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        let p = match self.wp.value(z) {
            Ok(p) => p,
            Err(Error::Pole) => return Ok(ComplexScalar::new(1.0 / self.mu_plus, 0.0)),
            Err(e) => return Err(e),
        };
        let shifted = p - (4.0 / 3.0 + 2.0 * self.kappa);
        let denom = shifted + 4.0 * self.kappa;
        if denom.norm() < 1e-12 {
            return Err(Error::Pole);
        }
        Ok(shifted / (self.mu_plus * denom))
    }

    /// `(½Ω + Ω′, ½Ω)`: a zero and a pole of `y₄⁺`. Every zero is congruent
    /// to `±(½Ω + Ω′)` and every pole to `±½Ω`.
    pub fn zeros_poles(&self) -> (ComplexScalar, ComplexScalar) {
        let pp = self.periods();
        let half = 0.5 * pp.omega();
        (half + pp.omega_prime(), half)
    }

    /// The solution with `y(0) = 0`: `z ↦ y₄⁺(z + ½Ω + Ω′)`. Its negative is
    /// the only other one.
    pub fn zero_ivp_solution(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        let (zero, _) = self.zeros_poles();
        self.y4_plus(z + zero)
    }
}

pub fn y4_plus(z: ComplexScalar, ctx: &Y4Context) -> Result<ComplexScalar> {
    ctx.y4_plus(z)
}

pub fn y4_minus(z: ComplexScalar, ctx: &Y4Context) -> Result<ComplexScalar> {
    ctx.y4_minus(z)
}

pub fn y4_zeros_poles(ctx: &Y4Context) -> (ComplexScalar, ComplexScalar) {
    ctx.zeros_poles()
}

pub fn y4_zero_ivp_solution(z: ComplexScalar, ctx: &Y4Context) -> Result<ComplexScalar> {
    ctx.zero_ivp_solution(z)
}
