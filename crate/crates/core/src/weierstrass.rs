//! Weierstrass ℘ on real rectangular lattices.
//!
//! Real invariants with `g2³ − 27g3² > 0` give a lattice spanned by a real
//! period `2ω` and an imaginary period `2ω′`. Evaluation reduces the argument
//! into the centred period cell, halves it until it is well inside the disc
//! of convergence of the Laurent expansion at the origin, sums the series
//! for ℘ and ℘′ together, and then applies the duplication formula once per
//! halving.
//! Arguments nearer a half-period `ωᵢ` than the origin are written as
//! `u + ωᵢ` and finished with the half-period addition formula, which keeps
//! `℘ − eᵢ` accurate near its double zero.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::numeric::{find_root, solve_depressed_cubic, ComplexScalar, Interval};

/// Number of Laurent coefficients `c_2 ..` summed after halving.
const LAURENT_TERMS: usize = 16;

/// Post-reduction distance to the nearest lattice point treated as a pole.
pub const POLE_THRESHOLD: f64 = 1e-12;

/// The pair `(g2, g3)` of a rectangular lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invariants {
    g2: f64,
    g3: f64,
}

impl Invariants {
    /// Rejects invariants whose discriminant is not positive, since those
    /// lattices are not rectangular.
    pub fn new(g2: f64, g3: f64) -> Result<Self> {
        let discriminant = g2 * g2 * g2 - 27.0 * g3 * g3;
        if !(discriminant > 0.0) || !g2.is_finite() || !g3.is_finite() {
            return Err(Error::UnsupportedLattice { discriminant });
        }
        Ok(Self { g2, g3 })
    }

    pub fn g2(&self) -> f64 {
        self.g2
    }

    pub fn g3(&self) -> f64 {
        self.g3
    }

    /// `g2³ − 27g3²`.
    pub fn discriminant(&self) -> f64 {
        self.g2 * self.g2 * self.g2 - 27.0 * self.g3 * self.g3
    }
}

/// The values `e1 > e2 > e3` of ℘ at `ω`, `ω + ω′`, `ω′`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidpointTriple {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

/// Which of the half-periods `ω`, `ω + ω′`, `ω′` (values `e1`, `e2`, `e3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Midpoint {
    E1,
    E2,
    E3,
}

/// Half-periods `ω = half_real` and `ω′ = i·half_imag_mag`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodPair {
    pub half_real: f64,
    pub half_imag_mag: f64,
}

impl PeriodPair {
    pub fn omega(&self) -> ComplexScalar {
        ComplexScalar::new(self.half_real, 0.0)
    }

    pub fn omega_prime(&self) -> ComplexScalar {
        ComplexScalar::new(0.0, self.half_imag_mag)
    }

    pub fn min_half_period(&self) -> f64 {
        self.half_real.min(self.half_imag_mag)
    }

    /// `ω′/ω`, purely imaginary.
    pub fn ratio(&self) -> ComplexScalar {
        ComplexScalar::new(0.0, self.half_imag_mag / self.half_real)
    }
}

pub fn midpoints(inv: Invariants) -> Result<MidpointTriple> {
    let r = solve_depressed_cubic(inv.g2, inv.g3)?;
    Ok(MidpointTriple { e1: r.e1, e2: r.e2, e3: r.e3 })
}

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 2.0 * f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind `K(m)`, `0 <= m < 1`.
pub fn complete_k(m: f64) -> f64 {
    FRAC_PI_2 / agm(1.0, (1.0 - m).sqrt())
}

pub fn half_periods(inv: Invariants) -> Result<PeriodPair> {
    let e = midpoints(inv)?;
    Ok(periods_from_midpoints(&e))
}

fn periods_from_midpoints(e: &MidpointTriple) -> PeriodPair {
    let spread = e.e1 - e.e3;
    let scale = spread.sqrt();
    // K(m) = π / (2·agm(1, √(1 − m))) with m = (e2 − e3)/(e1 − e3); both m and
    // 1 − m are formed from differences of roots to avoid cancellation.
    let m = (e.e2 - e.e3) / spread;
    let m_comp = (e.e1 - e.e2) / spread;
    PeriodPair {
        half_real: FRAC_PI_2 / agm(1.0, m_comp.sqrt()) / scale,
        half_imag_mag: FRAC_PI_2 / agm(1.0, m.sqrt()) / scale,
    }
}

/// `z` shifted by whole periods into the cell `(−ω, ω] × i(−|ω′|, |ω′|]`.
pub fn lattice_reduce(z: ComplexScalar, pp: PeriodPair) -> ComplexScalar {
    ComplexScalar::new(
        reduce_centered(z.re, pp.half_real),
        reduce_centered(z.im, pp.half_imag_mag),
    )
}

fn reduce_centered(x: f64, half: f64) -> f64 {
    let period = 2.0 * half;
    let n = (x / period - 0.5).ceil();
    let r = x - n * period;
    // Snap the cell boundary −half onto +half so that ω + 2nω reduces to ω.
    if r <= -half * (1.0 - 8.0 * f64::EPSILON) {
        r + period
    } else {
        r
    }
}

/// ℘ and ℘′ for one lattice, with periods and Laurent coefficients cached.
#[derive(Debug, Clone)]
pub struct Weierstrass {
    inv: Invariants,
    midpoints: MidpointTriple,
    periods: PeriodPair,
    coeffs: [f64; LAURENT_TERMS],
}

impl Weierstrass {
    pub fn new(inv: Invariants) -> Result<Self> {
        let midpoints = midpoints(inv)?;
        let periods = periods_from_midpoints(&midpoints);
        Ok(Self { inv, midpoints, periods, coeffs: laurent_coefficients(inv) })
    }

    pub fn invariants(&self) -> Invariants {
        self.inv
    }

    pub fn midpoints(&self) -> MidpointTriple {
        self.midpoints
    }

    pub fn periods(&self) -> PeriodPair {
        self.periods
    }

    /// `℘(z)`.
    pub fn value(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        self.value_and_derivative(z).map(|(p, _)| p)
    }

    /// `℘′(z)`.
    pub fn derivative(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        self.value_and_derivative(z).map(|(_, dp)| dp)
    }

    /// `(℘(z), ℘′(z))`.
    pub fn value_and_derivative(&self, z: ComplexScalar) -> Result<(ComplexScalar, ComplexScalar)> {
        let (near, u) = self.split(z)?;
        let Some(m) = near else {
            return self.near_origin(u);
        };
        let (e, c) = self.addition_constants(m);
        match self.near_origin(u) {
            Ok((p, dp)) => {
                let d = p - e;
                Ok((e + c / d, -c * dp / (d * d)))
            }
            Err(Error::Pole) => Ok((ComplexScalar::new(e, 0.0), ComplexScalar::new(0.0, 0.0))),
            Err(err) => Err(err),
        }
    }

    /// `℘(z) − e`, for `e` the value at the given half-period, without the
    /// cancellation of forming `℘(z)` first when `z` lies near that
    /// half-period.
    pub fn offset_from(&self, z: ComplexScalar, m: Midpoint) -> Result<ComplexScalar> {
        let (near, u) = self.split(z)?;
        let (e, c) = self.addition_constants(m);
        if near != Some(m) {
            return self.value(z).map(|p| p - e);
        }
        match self.near_origin(u) {
            Ok((p, _)) => Ok(c / (p - e)),
            Err(Error::Pole) => Ok(ComplexScalar::new(0.0, 0.0)),
            Err(err) => Err(err),
        }
    }

    /// The half-period nearest to `z` (`None` for a lattice point) and the
    /// offset `u` of `z` from it, with `|Re u| ≤ ω/2`, `|Im u| ≤ |ω′|/2`.
    fn split(&self, z: ComplexScalar) -> Result<(Option<Midpoint>, ComplexScalar)> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite argument {z}")));
        }
        let (w, wi) = (self.periods.half_real, self.periods.half_imag_mag);
        let r = lattice_reduce(z, self.periods);
        let a = (r.re / w).round();
        let b = (r.im / wi).round();
        let u = ComplexScalar::new(r.re - a * w, r.im - b * wi);
        let near = match (a != 0.0, b != 0.0) {
            (false, false) => None,
            (true, false) => Some(Midpoint::E1),
            (true, true) => Some(Midpoint::E2),
            (false, true) => Some(Midpoint::E3),
        };
        Ok((near, u))
    }

    /// `(eᵢ, (eᵢ − eⱼ)(eᵢ − eₖ))` for the addition formula
    /// `℘(u + ωᵢ) = eᵢ + (eᵢ − eⱼ)(eᵢ − eₖ)/(℘(u) − eᵢ)`.
    fn addition_constants(&self, m: Midpoint) -> (f64, f64) {
        let MidpointTriple { e1, e2, e3 } = self.midpoints;
        match m {
            Midpoint::E1 => (e1, (e1 - e2) * (e1 - e3)),
            Midpoint::E2 => (e2, (e2 - e1) * (e2 - e3)),
            Midpoint::E3 => (e3, (e3 - e1) * (e3 - e2)),
        }
    }

    /// ℘ and ℘′ for `w` within a half-period of the origin: halve into the
    /// Laurent disc, then double back.
    fn near_origin(&self, mut w: ComplexScalar) -> Result<(ComplexScalar, ComplexScalar)> {
        if w.norm() < POLE_THRESHOLD {
            return Err(Error::Pole);
        }
        let radius = 0.5 * self.periods.min_half_period();
        let mut halvings = 0;
        while w.norm() >= radius {
            w *= 0.5;
            halvings += 1;
        }
        let (mut x, mut y) = self.laurent(w);
        let (g2, g3) = (self.inv.g2, self.inv.g3);
        for _ in 0..halvings {
            if y == ComplexScalar::new(0.0, 0.0) {
                return Err(Error::Pole);
            }
            // ℘(2z) = N(℘)/℘′² and ℘′(2z) = (N′℘′² − 2N℘″)/(2℘′³) with
            // N(x) = (x² + g2/4)² + 2g3·x; unlike the tangent form
            // m²/4 − 2x this has no subtraction of comparable terms.
            let y2 = y * y;
            let s = x * x + 0.25 * g2;
            let n = s * s + 2.0 * g3 * x;
            let dn = 4.0 * x * s + 2.0 * g3;
            let ypp = 6.0 * x * x - 0.5 * g2;
            y = (dn * y2 - 2.0 * n * ypp) / (2.0 * y2 * y);
            x = n / y2;
        }
        if !(x.re.is_finite() && x.im.is_finite()) {
            return Err(Error::Pole);
        }
        Ok((x, y))
    }

    fn laurent(&self, z: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
        let z2 = z * z;
        // Horner in z² for Σ c_k z^{2k−2} and Σ (2k−2) c_k z^{2k−3}.
        let mut p = ComplexScalar::new(0.0, 0.0);
        let mut dp = ComplexScalar::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let k = (i + 2) as f64;
            p = p * z2 + c;
            dp = dp * z2 + (2.0 * k - 2.0) * c;
        }
        let inv_z2 = 1.0 / z2;
        (inv_z2 + p * z2, -2.0 * inv_z2 / z + dp * z)
    }

    /// The point `z` on the perimeter `0 → ω → ω + ω′ → ω′ → 0` of the
    /// half-period rectangle with `℘(z) = c`. ℘ decreases monotonically
    /// along that path through every real value, so `z` is unique there;
    /// the full preimage is `±z` modulo the lattice.
    pub fn real_preimage(&self, c: f64) -> Result<ComplexScalar> {
        let e = self.midpoints;
        let (w, wi) = (self.periods.half_real, self.periods.half_imag_mag);
        let tol = 1e-13 * c.abs().max(1.0);
        let real_part = |z: ComplexScalar| self.value(z).map(|p| p.re - c).unwrap_or(f64::NAN);
        let tiny = 1e-6;
        let corners = [
            (e.e1, ComplexScalar::new(w, 0.0)),
            (e.e2, ComplexScalar::new(w, wi)),
            (e.e3, ComplexScalar::new(0.0, wi)),
        ];
        if let Some(&(_, z)) = corners.iter().find(|(ei, _)| (ei - c).abs() <= 1e-10 * c.abs().max(1.0)) {
            return Ok(z);
        }
        let z = if c >= e.e1 {
            let t = find_root(|t| real_part(ComplexScalar::new(t, 0.0)), Interval::new(tiny * w, w)?, tol)?;
            ComplexScalar::new(t, 0.0)
        } else if c >= e.e2 {
            let s = find_root(|s| real_part(ComplexScalar::new(w, s)), Interval::new(0.0, wi)?, tol)?;
            ComplexScalar::new(w, s)
        } else if c >= e.e3 {
            let t = find_root(|t| real_part(ComplexScalar::new(t, wi)), Interval::new(0.0, w)?, tol)?;
            ComplexScalar::new(t, wi)
        } else {
            let s = find_root(|s| real_part(ComplexScalar::new(0.0, s)), Interval::new(tiny * wi, wi)?, tol)?;
            ComplexScalar::new(0.0, s)
        };
        Ok(z)
    }

    /// `(℘(ω/2), ℘(ω/2 + ω′))` from the closed forms `e1 ± √((e1−e2)(e1−e3))`.
    pub fn quarter_values(&self) -> (f64, f64) {
        let e = self.midpoints;
        let root = ((e.e1 - e.e2) * (e.e1 - e.e3)).sqrt();
        (e.e1 + root, e.e1 - root)
    }
}

/// `c_2 = g2/20`, `c_3 = g3/28`, and for k >= 4
/// `c_k = 3/((2k+1)(k−3)) Σ_{m=2}^{k−2} c_m c_{k−m}`.
fn laurent_coefficients(inv: Invariants) -> [f64; LAURENT_TERMS] {
    let mut c = [0.0; LAURENT_TERMS];
    // c[i] holds c_{i+2}.
    c[0] = inv.g2 / 20.0;
    c[1] = inv.g3 / 28.0;
    for i in 2..LAURENT_TERMS {
        let k = i + 2;
        let s: f64 = (2..=k - 2).map(|m| c[m - 2] * c[k - m - 2]).sum();
        c[i] = 3.0 / (((2 * k + 1) * (k - 3)) as f64) * s;
    }
    c
}

pub fn wp(z: ComplexScalar, inv: Invariants) -> Result<ComplexScalar> {
    Weierstrass::new(inv)?.value(z)
}

pub fn wp_prime(z: ComplexScalar, inv: Invariants) -> Result<ComplexScalar> {
    Weierstrass::new(inv)?.derivative(z)
}

/// `(℘(ω/2), ℘(ω/2 + ω′))`.
pub fn wp_quarter_values(inv: Invariants) -> Result<(f64, f64)> {
    Ok(Weierstrass::new(inv)?.quarter_values())
}
