//! Elliptic solution of `(w′)² = f(w)`, `w(0) = w₀`, for a quartic
//!
//! ```text
//! f(w) = a0·w⁴ + 4a1·w³ + 6a2·w² + 4a3·w + a4
//! ```
//!
//! with a simple zero `w₀`. Expanding `f` about `w₀` and substituting
//! `r = 1/(w − w₀)`, `q = A3·r`, `p = q + A2/2` leads to
//! `(p′)² = 4p³ − g2·p − g3` with the quadrinvariant and cubinvariant of `f`,
//! so that
//!
//! ```text
//! w(z) = w₀ + (f′(w₀)/4) / (℘(z; g2, g3) − f″(w₀)/24).
//! ```

use crate::error::{Error, Result};
use crate::numeric::ComplexScalar;
use crate::weierstrass::{Invariants, Midpoint, Weierstrass};

/// Relative threshold for "is a root" and "is simple".
const ROOT_TOL: f64 = 1e-10;

/// Coefficients in the binomial normalization `a0, 4a1, 6a2, 4a3, a4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoefficients {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
}

impl QuarticCoefficients {
    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        if [a0, a1, a2, a3, a4].iter().any(|a| !a.is_finite()) {
            return Err(Error::Domain("non-finite coefficient".into()));
        }
        if a0 == 0.0 && a1 == 0.0 && a2 == 0.0 && a3 == 0.0 {
            return Err(Error::Domain("polynomial is constant".into()));
        }
        Ok(Self { a0, a1, a2, a3, a4 })
    }

    /// From plain coefficients of `c4·w⁴ + c3·w³ + c2·w² + c1·w + c0`.
    pub fn from_monomial(c4: f64, c3: f64, c2: f64, c1: f64, c0: f64) -> Result<Self> {
        Self::new(c4, c3 / 4.0, c2 / 6.0, c1 / 4.0, c0)
    }

    /// `[c4, c3, c2, c1, c0]`.
    pub fn monomial(&self) -> [f64; 5] {
        [self.a0, 4.0 * self.a1, 6.0 * self.a2, 4.0 * self.a3, self.a4]
    }

    pub fn eval(&self, w: f64) -> f64 {
        let [c4, c3, c2, c1, c0] = self.monomial();
        (((c4 * w + c3) * w + c2) * w + c1) * w + c0
    }

    pub fn eval_complex(&self, w: ComplexScalar) -> ComplexScalar {
        let [c4, c3, c2, c1, c0] = self.monomial();
        (((c4 * w + c3) * w + c2) * w + c1) * w + c0
    }

    pub fn derivative(&self, w: f64) -> f64 {
        let [c4, c3, c2, c1, _] = self.monomial();
        ((4.0 * c4 * w + 3.0 * c3) * w + 2.0 * c2) * w + c1
    }

    pub fn second_derivative(&self, w: f64) -> f64 {
        let [c4, c3, c2, _, _] = self.monomial();
        (12.0 * c4 * w + 6.0 * c3) * w + 2.0 * c2
    }

    /// Coefficients of `w ↦ f(w + c)`.
    pub fn translate(&self, c: f64) -> Self {
        let s = taylor_coefficients(self, c);
        Self { a0: s[0], a1: s[1], a2: s[2], a3: s[3], a4: self.eval(c) }
    }

    /// `Σ |c_k|·|w|^k`, the magnitude against which `f(w)` is judged zero.
    fn scale_at(&self, w: f64) -> f64 {
        let [c4, c3, c2, c1, c0] = self.monomial();
        let w = w.abs();
        let s = c0.abs() + w * (c1.abs() + w * (c2.abs() + w * (c3.abs() + w * c4.abs())));
        s.max(1.0)
    }
}

/// `A0..A3` of `f(w) = A0·(w−w₀)⁴ + 4A1·(w−w₀)³ + 6A2·(w−w₀)² + 4A3·(w−w₀)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorShift {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

fn taylor_coefficients(q: &QuarticCoefficients, w0: f64) -> [f64; 4] {
    let QuarticCoefficients { a0, a1, a2, a3, .. } = *q;
    [
        a0,
        a0 * w0 + a1,
        (a0 * w0 + 2.0 * a1) * w0 + a2,
        ((a0 * w0 + 3.0 * a1) * w0 + 3.0 * a2) * w0 + a3,
    ]
}

/// `g2 = a0·a4 − 4a1·a3 + 3a2²`.
pub fn quadrinvariant(q: &QuarticCoefficients) -> f64 {
    q.a0 * q.a4 - 4.0 * q.a1 * q.a3 + 3.0 * q.a2 * q.a2
}

/// `g3 = a0·a2·a4 + 2a1·a2·a3 − a2³ − a0·a3² − a1²·a4`.
pub fn cubinvariant(q: &QuarticCoefficients) -> f64 {
    q.a0 * q.a2 * q.a4 + 2.0 * q.a1 * q.a2 * q.a3
        - q.a2 * q.a2 * q.a2
        - q.a0 * q.a3 * q.a3
        - q.a1 * q.a1 * q.a4
}

/// Taylor coefficients of `f` about its simple zero `w0`.
pub fn taylor_shift(q: &QuarticCoefficients, w0: f64) -> Result<TaylorShift> {
    let scale = q.scale_at(w0);
    let residual = q.eval(w0);
    if !(residual.abs() <= ROOT_TOL * scale) {
        return Err(Error::NotARoot { residual });
    }
    let derivative = q.derivative(w0);
    if derivative.abs() < ROOT_TOL * scale {
        return Err(Error::RootNotSimple { derivative });
    }
    let [a0, a1, a2, a3] = taylor_coefficients(q, w0);
    Ok(TaylorShift { a0, a1, a2, a3 })
}

impl TaylorShift {
    /// `3A2² − 4A1·A3`, equal to the quadrinvariant of `f`.
    pub fn reduced_g2(&self) -> f64 {
        3.0 * self.a2 * self.a2 - 4.0 * self.a1 * self.a3
    }

    /// `2A1·A2·A3 − A2³ − A0·A3²`, equal to the cubinvariant of `f`.
    pub fn reduced_g3(&self) -> f64 {
        2.0 * self.a1 * self.a2 * self.a3 - self.a2 * self.a2 * self.a2 - self.a0 * self.a3 * self.a3
    }
}

/// The solution `w` of one quartic initial value problem.
#[derive(Debug, Clone)]
pub struct QuarticSolution {
    w0: f64,
    /// `f′(w₀)/4 = A3`.
    numerator: f64,
    /// `f″(w₀)/24 = A2/2`.
    offset: f64,
    /// The half-period value equal to `offset`, if any (always the case for
    /// a cubic, whose solutions have double poles).
    anchor: Option<Midpoint>,
    wp: Weierstrass,
}

impl QuarticSolution {
    pub fn invariants(&self) -> Invariants {
        self.wp.invariants()
    }

    pub fn weierstrass(&self) -> &Weierstrass {
        &self.wp
    }

    pub fn initial_value(&self) -> f64 {
        self.w0
    }

    /// `w(z)`; `w(0) = w₀` because ℘ has its pole there.
    pub fn eval(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        let denom = match self.anchor {
            Some(m) => self.wp.offset_from(z, m),
            None => self.wp.value(z).map(|p| p - self.offset),
        };
        let denom = match denom {
            Ok(d) => d,
            Err(Error::Pole) => return Ok(ComplexScalar::new(self.w0, 0.0)),
            Err(e) => return Err(e),
        };
        if denom.norm() < 1e-12 {
            return Err(Error::Pole);
        }
        Ok(self.w0 + self.numerator / denom)
    }

    /// A pole of `w`, where `℘ = f″(w₀)/24`; every pole is congruent to `±` it.
    pub fn pole(&self) -> Result<ComplexScalar> {
        self.wp.real_preimage(self.offset)
    }
}

pub fn solve_quartic_ivp(q: &QuarticCoefficients, w0: f64) -> Result<QuarticSolution> {
    let shift = taylor_shift(q, w0)?;
    let inv = Invariants::new(quadrinvariant(q), cubinvariant(q))?;
    let wp = Weierstrass::new(inv)?;
    let offset = 0.5 * shift.a2;
    let e = wp.midpoints();
    let tol = 1e-10 * (e.e1 - e.e3);
    let anchor = [(Midpoint::E1, e.e1), (Midpoint::E2, e.e2), (Midpoint::E3, e.e3)]
        .into_iter()
        .find(|(_, ei)| (ei - offset).abs() <= tol)
        .map(|(m, _)| m);
    Ok(QuarticSolution { w0, numerator: shift.a3, offset, anchor, wp })
}
