//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::{PI, SQRT_2};
use std::process::Command;
use std::time::Instant;

use sig4::dd::{self, make_context, omega_three_ways, Modulus};
use sig4::hypergeom::complete_f;
use sig4::quartic::{cubinvariant, quadrinvariant, solve_quartic_ivp, taylor_shift};
use sig4::verify::{planted_root_quartic, Lcg64, Relations, SampleCell};
use sig4::y4::make_y4_context;
use sig4::{ComplexScalar, Result};

const H: f64 = 1e-6;

type Criterion = fn() -> Result<(bool, String)>;

/// Largest value seen against its bound.
#[derive(Default)]
struct Worst {
    ratio: f64,
    value: f64,
}

impl Worst {
    /// Records `value ≤ bound`; NaN counts as a violation.
    fn see(&mut self, value: f64, bound: f64) {
        let r = if value.is_nan() { f64::INFINITY } else { value / bound };
        if r >= self.ratio {
            self.ratio = r;
            self.value = value;
        }
    }

    fn ok(&self) -> bool {
        self.ratio <= 1.0
    }
}

fn cd<F: Fn(ComplexScalar) -> Result<ComplexScalar>>(f: F, z: ComplexScalar) -> Result<ComplexScalar> {
    Ok((f(z + H)? - f(z - H)?) / (2.0 * H))
}

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn criterion_1() -> Result<(bool, String)> {
    let mut w = Worst::default();
    for kappa in [0.1, 0.3, 0.6, 0.9] {
        let t = omega_three_ways(&Modulus::new(kappa)?)?;
        w.see((t.closed - t.via_integral).abs(), 1e-8);
        w.see((t.closed - t.via_trig).abs(), 1e-8);
        w.see((t.via_integral - t.via_trig).abs(), 1e-8);
    }
    let omega = omega_three_ways(&Modulus::new(0.6)?)?.closed;
    let ok = w.ok() && (omega - 1.70487).abs() < 1e-5;
    Ok((ok, format!("max pairwise gap {:.2e}; ω(0.6) = {omega:.12}", w.value)))
}

fn criterion_2() -> Result<(bool, String)> {
    let mut w = Worst::default();
    for kappa in [0.1, 0.3, 0.6, 0.9] {
        let m = Modulus::new(kappa)?;
        let closed = PI / SQRT_2 * complete_f(m.lambda().powi(2))?;
        w.see((dd::omega_prime(&m)? - closed).abs(), 1e-8);
    }
    let wp = dd::omega_prime(&Modulus::new(0.6)?)?;
    Ok((w.ok() && (wp - 2.66540).abs() < 1e-5, format!("max gap {:.2e}; |ω′|(0.6) = {wp:.12}", w.value)))
}

fn criterion_3() -> Result<(bool, String)> {
    let mut rng = Lcg64::new(3);
    let mut w = Worst::default();
    for _ in 0..20 {
        let kappa = rng.uniform(0.01, 0.99);
        let ctx = make_context(kappa)?;
        let l = ctx.modulus().lambda();
        w.see((ctx.invariants().discriminant() - kappa.powi(4) * l * l).abs(), 1e-12);
    }
    Ok((w.ok(), format!("20 moduli, max |Δ − κ⁴λ²| = {:.2e}", w.value)))
}

fn criterion_4() -> Result<(bool, String)> {
    let mut w = Worst::default();
    let mut rng = Lcg64::new(4);
    for kappa in [0.3, 0.6, 0.9] {
        let m = Modulus::new(kappa)?;
        let omega = omega_three_ways(&m)?.closed;
        let l2 = m.lambda().powi(2);
        for _ in 0..200 {
            let u = rng.uniform(-2.0 * omega, 2.0 * omega);
            let d = dd::d_real(u, &m)?;
            let dp = (dd::d_real(u + H, &m)? - dd::d_real(u - H, &m)?) / (2.0 * H);
            w.see((dp * dp - 2.0 * (1.0 - d) * (d * d - l2)).abs(), 1e-7);
        }
    }
    Ok((w.ok(), format!("3 × 200 points, max residual {:.2e}", w.value)))
}

fn criterion_5() -> Result<(bool, String)> {
    let mut w = Worst::default();
    for kappa in [0.3, 0.6, 0.9] {
        let ctx = make_context(kappa)?;
        let cell = SampleCell::new(ctx.periods());
        let mut rng = Lcg64::new(5);
        for _ in 0..200 {
            let z = cell.sample(&mut rng);
            let p = ctx.weierstrass().value(z)?;
            let r = ((1.0 - ctx.dd(z)?) * (1.0 / 3.0 + p) - 0.5 * kappa * kappa).norm();
            w.see(r, 1e-9);
        }
    }
    Ok((w.ok(), format!("3 × 200 samples, max residual {:.2e}", w.value)))
}

fn y4_equation_residual(f: impl Fn(ComplexScalar) -> Result<ComplexScalar> + Copy, seed: u64) -> Result<Worst> {
    let ctx = make_y4_context(0.8)?;
    let cell = SampleCell::new(ctx.periods());
    let mut rng = Lcg64::new(seed);
    let mut w = Worst::default();
    for _ in 0..200 {
        let z = cell.sample(&mut rng);
        let y = f(z)?;
        let dy = cd(f, z)?;
        w.see((dy * dy - ctx.rhs(y)).norm(), 1e-7 * (1.0 + y.norm().powi(4)));
    }
    Ok(w)
}

fn criterion_6() -> Result<(bool, String)> {
    let ctx = make_y4_context(0.8)?;
    let w = y4_equation_residual(|z| ctx.y4_plus(z), 6)?;
    let exact = ctx.y4_plus(c(0.0, 0.0))? == c(ctx.mu_plus(), 0.0);
    let e = ctx.weierstrass().midpoints();
    let lam = ctx.lambda();
    let gap = (e.e1 - 4.0 / 3.0)
        .abs()
        .max((e.e2 - (-2.0 / 3.0 + 2.0 * lam)).abs())
        .max((e.e3 - (-2.0 / 3.0 - 2.0 * lam)).abs());
    Ok((
        w.ok() && exact && gap <= 1e-9,
        format!("scaled ODE residual ≤ {:.2e} of bound; y(0) = μ⁺ exactly: {exact}; midpoint gap {gap:.2e}", w.ratio),
    ))
}

fn criterion_7() -> Result<(bool, String)> {
    let ctx = make_y4_context(0.8)?;
    let pp = ctx.periods();
    let (om, omp) = (pp.omega(), pp.omega_prime());
    let cell = SampleCell::new(pp);
    let mut rng = Lcg64::new(7);
    let mut w = Worst::default();
    for _ in 0..100 {
        let z = cell.sample(&mut rng);
        let (y, ym) = (ctx.y4_plus(z)?, ctx.y4_minus(z)?);
        w.see((ctx.y4_plus(z + om)? + y).norm(), 1e-9);
        w.see((ctx.y4_plus(z + omp)? - ym).norm(), 1e-9);
        w.see((ctx.y4_plus(z + om + omp)? + ym).norm(), 1e-9);
    }
    Ok((w.ok(), format!("100 samples, max residual {:.2e}", w.value)))
}

fn criterion_8() -> Result<(bool, String)> {
    let ctx = make_y4_context(0.8)?;
    let (zero, pole) = ctx.zeros_poles();
    let at_zero = ctx.y4_plus(zero)?.norm();
    let h = 1e-4;
    let r = |z| ctx.y4_plus_reciprocal(z);
    // 1/y₄⁺ = (P − c)/(μ⁺(P − c + 4κ)), c = 4/3 + 2κ, so its slope at the pole is P′/(4κμ⁺).
    let slope = ctx.weierstrass().derivative(pole)? / (4.0 * ctx.kappa() * ctx.mu_plus());
    let near = r(pole + h)?;
    let symmetric = (near - r(pole - h)?) / 2.0;
    let linear_gap = (symmetric - slope * h).norm() / (slope * h).norm();
    let ratio = r(pole + 2.0 * h)?.norm() / near.norm();
    let ok = at_zero <= 1e-9 && r(pole)?.norm() <= 1e-9 && linear_gap <= 1e-6 && (ratio - 2.0).abs() <= 0.1;
    Ok((
        ok,
        format!(
            "|y(½Ω+Ω′)| = {at_zero:.2e}; |1/y| at 1e-4 from ½Ω = {:.2e} (slope {:.3}), deviation from linear {linear_gap:.2e}, doubling ratio {ratio:.4}",
            near.norm(),
            slope.norm()
        ),
    ))
}

fn criterion_9() -> Result<(bool, String)> {
    let ctx = make_y4_context(0.8)?;
    let at0 = ctx.zero_ivp_solution(c(0.0, 0.0))?.norm();
    let w = y4_equation_residual(|z| ctx.zero_ivp_solution(z), 9)?;
    Ok((at0 <= 1e-9 && w.ok(), format!("|y(0)| = {at0:.2e}; scaled ODE residual ≤ {:.2e} of bound", w.ratio)))
}

fn criterion_10() -> Result<(bool, String)> {
    let rel = Relations::new(0.6)?;
    let cell = SampleCell::new(rel.y4_context().periods());
    let mut rng = Lcg64::new(10);
    let mut w = Worst::default();
    for _ in 0..200 {
        w.see(rel.pp_residual(cell.sample(&mut rng))?, 1e-9);
    }
    let (s, b) = (rel.dd_context().invariants(), rel.y4_context().invariants());
    let inv = (16.0 * s.g2() - b.g2()).abs().max((-64.0 * s.g3() - b.g3()).abs());
    Ok((w.ok() && inv <= 1e-13, format!("max residual {:.2e}; invariant arithmetic gap {inv:.2e}", w.value)))
}

fn criterion_11() -> Result<(bool, String)> {
    let rel = Relations::new(0.6)?;
    let y4 = rel.y4_context();
    let cell = SampleCell::new(y4.periods());
    let mut rng = Lcg64::new(11);
    let mut w = Worst::default();
    let mut closest = f64::INFINITY;
    for _ in 0..200 {
        let z = cell.sample(&mut rng);
        closest = closest.min((y4.y4_plus(z)? + y4.mu_plus()).norm());
        w.see(rel.ddy4_residual(z)?, 1e-9);
    }
    Ok((w.ok(), format!("max residual {:.2e}; min |y + μ⁺| = {closest:.2e}", w.value)))
}

fn criterion_12() -> Result<(bool, String)> {
    let mut w = Worst::default();
    for kappa in [0.3, 0.6, 0.9] {
        let (a, b) = Relations::new(kappa)?.oooo_residuals();
        w.see(a, 1e-8);
        w.see(b, 1e-8);
    }
    Ok((w.ok(), format!("max residual {:.2e}", w.value)))
}

fn criterion_13() -> Result<(bool, String)> {
    let mut w = Worst::default();
    for kappa in [0.3, 0.6, 0.9] {
        let rel = Relations::new(kappa)?;
        let m = rel.modulus();
        let (fk, fl) = (complete_f(m.kappa().powi(2))?, complete_f(m.lambda().powi(2))?);
        let small = rel.dd_context().periods();
        let big = rel.y4_context().periods();
        w.see((small.ratio() - c(0.0, SQRT_2 * fl / fk)).norm(), 1e-8);
        w.see((big.ratio() - c(0.0, fk / (SQRT_2 * fl))).norm(), 1e-8);
        // Ω = |ω′|/2 and |Ω′| = ω/2, so Ω′/Ω = −(ω′/ω)⁻¹.
        w.see((big.ratio() + 1.0 / small.ratio()).norm(), 1e-8);
        w.see((big.half_real - 0.5 * small.half_imag_mag).abs(), 1e-8);
        w.see((big.half_imag_mag - 0.5 * small.half_real).abs(), 1e-8);
    }
    Ok((w.ok(), format!("max gap {:.2e}", w.value)))
}

fn criterion_14() -> Result<(bool, String)> {
    let rel = Relations::new(0.6)?;
    let mut values = Worst::default();
    let mut invariants = Worst::default();

    let ctx = rel.dd_context();
    let sol = solve_quartic_ivp(&ctx.modulus().equation(), 1.0)?;
    invariants.see((sol.invariants().g2() - ctx.invariants().g2()).abs(), 1e-13);
    invariants.see((sol.invariants().g3() - ctx.invariants().g3()).abs(), 1e-13);
    let cell = SampleCell::new(ctx.periods());
    let mut rng = Lcg64::new(14);
    for _ in 0..50 {
        let z = cell.sample(&mut rng);
        values.see((sol.eval(z)? - ctx.dd(z)?).norm(), 1e-9);
    }

    let y4 = rel.y4_context();
    let sol = solve_quartic_ivp(&y4.equation(), y4.mu_plus())?;
    invariants.see((sol.invariants().g2() - y4.invariants().g2()).abs(), 1e-13);
    invariants.see((sol.invariants().g3() - y4.invariants().g3()).abs(), 1e-13);
    let cell = SampleCell::new(y4.periods());
    for _ in 0..50 {
        let z = cell.sample(&mut rng);
        values.see((sol.eval(z)? - y4.y4_plus(z)?).norm(), 1e-9);
    }

    let mut chain = Worst::default();
    let mut ode = Worst::default();
    for _ in 0..100 {
        let (q, w0) = planted_root_quartic(&mut rng);
        let s = taylor_shift(&q, w0)?;
        let (g2, g3) = (quadrinvariant(&q), cubinvariant(&q));
        chain.see((s.reduced_g2() - g2).abs() / g2.abs().max(1.0), 1e-12);
        chain.see((s.reduced_g3() - g3).abs() / g3.abs().max(1.0), 1e-12);
        let sol = solve_quartic_ivp(&q, w0)?;
        let cell = SampleCell::new(sol.weierstrass().periods()).avoiding(sol.pole()?);
        let z = cell.sample(&mut rng);
        let w = sol.eval(z)?;
        let dw = cd(|u| sol.eval(u), z)?;
        ode.see((dw * dw - q.eval_complex(w)).norm(), 1e-7 * (1.0 + w.norm().powi(4)));
    }
    Ok((
        values.ok() && invariants.ok() && chain.ok() && ode.ok(),
        format!(
            "solution gap {:.2e}; invariant gap {:.2e}; chain identities {:.2e} rel; planted ODE ≤ {:.2e} of bound",
            values.value, invariants.value, chain.value, ode.ratio
        ),
    ))
}

fn criterion_15() -> Result<(bool, String)> {
    let rel = Relations::new(0.6)?;
    let cell = SampleCell::new(rel.dd_context().periods());
    let mut rng = Lcg64::new(15);
    let mut w = Worst::default();
    for _ in 0..100 {
        w.see(rel.final_remark_residual(cell.sample(&mut rng))?, 1e-8);
    }
    Ok((w.ok(), format!("100 samples, max residual {:.2e}", w.value)))
}

fn criterion_16() -> Result<(bool, String)> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sig4"))
        .args(["verify", "--kappa", "0.6", "--n", "200", "--seed", "42", "--tol", "1e-8"])
        .env_remove("SIG4_TOL")
        .output()
        .expect("binary runs");
    let secs = start.elapsed().as_secs_f64();
    let code = out.status.code();
    Ok((code == Some(0) && secs < 10.0, format!("exit {code:?} in {secs:.2} s")))
}

fn main() {
    let criteria: [(&str, Criterion); 16] = [
        ("half-period three ways", criterion_1),
        ("imaginary half-period two ways", criterion_2),
        ("discriminant identity", criterion_3),
        ("real-axis equation for d", criterion_4),
        ("dd in Weierstrass form", criterion_5),
        ("equation for y4+", criterion_6),
        ("shift laws", criterion_7),
        ("zeros and poles of y4+", criterion_8),
        ("solution with y(0) = 0", criterion_9),
        ("P(z) = −4p(2iz)", criterion_10),
        ("dd(2iz) through y4+", criterion_11),
        ("half-periods of the two lattices", criterion_12),
        ("period ratios", criterion_13),
        ("quartic initial value problems", criterion_14),
        ("dd through the κ-parameter y4+", criterion_15),
        ("verify end to end", criterion_16),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        if !ok {
            failed += 1;
        }
        println!("{} criterion {:>2}: {name}: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
