//! The elliptic function `dd`.
//!
//! On the real line `dd` is `d = cos ψ` with `ψ = arcsin(κ sin φ)`, where `φ`
//! inverts `T ↦ ∫₀^T F(1/4, 3/4; 1/2; κ² sin² t) dt`. In the plane it is
//! evaluated through its coperiodic Weierstrass function `p = ℘(·; g2, g3)`:
//!
//! ```text
//! (1 − dd)(1/3 + p) = κ²/2,   g2 = (3λ² + 1)/3,   g3 = (9λ² − 1)/27.
//! ```
//!
//! The real-axis route through `φ` is kept as an independent check on the
//! Weierstrass route.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use crate::error::{Error, Result};
use crate::hypergeom::complete_f;
use crate::numeric::{integrate, integrate_with_complement, newton_bisect, ComplexScalar, Interval};
use crate::quartic::QuarticCoefficients;
use crate::weierstrass::{Invariants, Midpoint, PeriodPair, Weierstrass};

/// Quadrature tolerance for the incomplete integral and the period integrals.
const QUAD_TOL: f64 = 1e-15;

/// Modulus `κ ∈ (0, 1)` with its complement and modular angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    kappa: f64,
    lambda: f64,
    alpha: f64,
    beta: f64,
}

impl Modulus {
    pub fn new(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa < 1.0) {
            return Err(Error::Domain(format!("modulus must lie in (0, 1), got {kappa}")));
        }
        let lambda = ((1.0 - kappa) * (1.0 + kappa)).sqrt();
        Ok(Self {
            kappa,
            lambda,
            alpha: kappa.atan2(lambda),
            beta: lambda.atan2(kappa),
        })
    }

    /// The modulus whose complement is `lambda`.
    pub fn from_complement(lambda: f64) -> Result<Self> {
        let m = Self::new(lambda)?;
        Ok(Self { kappa: m.lambda, lambda: m.kappa, alpha: m.beta, beta: m.alpha })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Acute modular angle, `sin α = κ`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Complementary angle `π/2 − α`, `sin β = λ`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Right-hand side `2(1 − d)(d² − λ²)` of the equation satisfied by `d`.
    pub fn equation(&self) -> QuarticCoefficients {
        let l2 = self.lambda * self.lambda;
        QuarticCoefficients::from_monomial(0.0, -2.0, 2.0, 2.0 * l2, -2.0 * l2)
            .expect("cubic is non-constant")
    }

    /// `(g2, g3)` of the Weierstrass function coperiodic with `dd`.
    pub fn dd_invariants(&self) -> Result<Invariants> {
        let l2 = self.lambda * self.lambda;
        Invariants::new((3.0 * l2 + 1.0) / 3.0, (9.0 * l2 - 1.0) / 27.0)
    }
}

/// Everything needed to evaluate `dd` for one modulus.
#[derive(Debug, Clone)]
pub struct DDContext {
    modulus: Modulus,
    wp: Weierstrass,
}

/// Builds the context and checks `g2³ − 27g3² = κ⁴λ²`.
pub fn make_context(kappa: f64) -> Result<DDContext> {
    let modulus = Modulus::new(kappa)?;
    let inv = modulus.dd_invariants()?;
    let expected = kappa.powi(4) * modulus.lambda.powi(2);
    if (inv.discriminant() - expected).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "discriminant {} differs from κ⁴λ² = {expected}",
            inv.discriminant()
        )));
    }
    Ok(DDContext { modulus, wp: Weierstrass::new(inv)? })
}

impl DDContext {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn invariants(&self) -> Invariants {
        self.wp.invariants()
    }

    /// `(ω, |ω′|)` from the Weierstrass lattice.
    pub fn periods(&self) -> PeriodPair {
        self.wp.periods()
    }

    /// The coperiodic Weierstrass function `p`.
    pub fn weierstrass(&self) -> &Weierstrass {
        &self.wp
    }

    pub fn dd(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        dd(z, self)
    }
}

/// `1 − (κ²/2)/(1/3 + p(z))`; equals 1 at the lattice points, where `p`
/// has its pole, and has its own pole where `p = −1/3` (at `ω′`).
pub fn dd(z: ComplexScalar, ctx: &DDContext) -> Result<ComplexScalar> {
    // e3 = −1/3 exactly, so 1/3 + p is p − e3.
    let denom = match ctx.wp.offset_from(z, Midpoint::E3) {
        Ok(d) => d,
        Err(Error::Pole) => return Ok(ComplexScalar::new(1.0, 0.0)),
        Err(e) => return Err(e),
    };
    if denom.norm() < 1e-12 {
        return Err(Error::Pole);
    }
    let k = ctx.modulus.kappa;
    Ok(1.0 - 0.5 * k * k / denom)
}

/// `F(1/4, 3/4; 1/2; κ² sin² t)` through `cos(ψ/2)/cos ψ`, `sin ψ = κ sin t`.
fn integrand(t: f64, kappa: f64) -> f64 {
    let s = kappa * t.sin();
    let cos_psi = ((1.0 - s) * (1.0 + s)).sqrt();
    (0.5 * (1.0 + cos_psi)).sqrt() / cos_psi
}

fn panel(lo: f64, hi: f64, kappa: f64) -> Result<f64> {
    if hi == lo {
        return Ok(0.0);
    }
    integrate(|t| integrand(t, kappa), Interval::new(lo, hi)?, QUAD_TOL)
}

/// `∫₀^T F(1/4, 3/4; 1/2; κ² sin² t) dt`.
///
/// Whole quarter-periods `[jπ/2, (j+1)π/2]` all integrate to the same value
/// (the integrand is even and π-periodic), so only the first one and the
/// trailing partial panel are computed.
pub fn forward_integral(t: f64, m: &Modulus) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {t}")));
    }
    if t < 0.0 {
        return forward_integral(-t, m).map(|v| -v);
    }
    let whole = (t / FRAC_PI_2).floor();
    let start = whole * FRAC_PI_2;
    let partial = panel(start.min(t), t, m.kappa)?;
    if whole == 0.0 {
        return Ok(partial);
    }
    Ok(whole * panel(0.0, FRAC_PI_2, m.kappa)? + partial)
}

/// The inverse `φ` of [`forward_integral`].
///
/// Uses `φ(u + 2ω) = φ(u) + π` to move `u` into `[0, 2ω)` and then solves on
/// `[0, π]` by Newton's method, the derivative being the integrand itself.
pub fn phi(u: f64, m: &Modulus) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {u}")));
    }
    let omega = panel(0.0, FRAC_PI_2, m.kappa)?;
    let turns = (u / (2.0 * omega)).floor();
    let r = u - turns * 2.0 * omega;
    if r == 0.0 {
        return Ok(turns * PI);
    }
    let target = |t: f64| -> (f64, f64) {
        let v = if t <= FRAC_PI_2 {
            panel(0.0, t, m.kappa)
        } else {
            panel(FRAC_PI_2, t, m.kappa).map(|p| p + omega)
        };
        match v {
            Ok(v) => (v - r, integrand(t, m.kappa)),
            Err(_) => (f64::NAN, f64::NAN),
        }
    };
    let t = newton_bisect(target, Interval::new(0.0, PI)?, 1e-15)?;
    Ok(t + turns * PI)
}

/// `d(u) = cos(arcsin(κ sin φ(u)))`, with values in `[λ, 1]`.
pub fn d_real(u: f64, m: &Modulus) -> Result<f64> {
    let s = m.kappa * phi(u, m)?.sin();
    Ok(((1.0 - s) * (1.0 + s)).sqrt())
}

/// Three independent evaluations of the real half-period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaThreeWays {
    /// `(π/2) F(1/4, 3/4; 1; κ²)`.
    pub closed: f64,
    /// The incomplete integral at `π/2`.
    pub via_integral: f64,
    /// `√2 ∫₀^α cos(θ/2)/√(cos 2θ − cos 2α) dθ`.
    pub via_trig: f64,
}

/// `∫₀^a cos(θ/2)/√(cos 2θ − cos 2a) dθ`, with the difference of cosines
/// written as `2 sin(a + θ) sin(a − θ)` so the endpoint factor is exact.
pub fn angle_integral(a: f64) -> Result<f64> {
    integrate_with_complement(
        |t, _, gap| (0.5 * t).cos() / (2.0 * (a + t).sin() * gap.sin()).sqrt(),
        Interval::new(0.0, a)?,
        QUAD_TOL,
    )
}

pub fn omega_three_ways(m: &Modulus) -> Result<OmegaThreeWays> {
    Ok(OmegaThreeWays {
        closed: FRAC_PI_2 * complete_f(m.kappa * m.kappa)?,
        via_integral: forward_integral(FRAC_PI_2, m)?,
        via_trig: SQRT_2 * angle_integral(m.alpha)?,
    })
}

/// `|ω′| = 2 ∫₀^β cos(θ/2)/√(cos 2θ − cos 2β) dθ`; `ω′` itself is `i` times this.
pub fn omega_prime(m: &Modulus) -> Result<f64> {
    Ok(2.0 * angle_integral(m.beta)?)
}

/// `ω′/ω = i √2 F(1/4, 3/4; 1; λ²) / F(1/4, 3/4; 1; κ²)`.
pub fn period_ratio(m: &Modulus) -> Result<ComplexScalar> {
    let ratio = SQRT_2 * complete_f(m.lambda * m.lambda)? / complete_f(m.kappa * m.kappa)?;
    Ok(ComplexScalar::new(0.0, ratio))
}
