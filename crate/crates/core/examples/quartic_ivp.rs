//! Solves (w′)² = f(w), w(0) = w₀ for a quartic with a simple zero at w₀, and
//! checks the equation by a central difference. The solution oscillates
//! between 1 and 2 on the real axis.
//!
//! cargo run --example quartic_ivp

use sig4::quartic::{cubinvariant, quadrinvariant, solve_quartic_ivp, QuarticCoefficients};
use sig4::ComplexScalar;

fn main() -> sig4::Result<()> {
    // f(w) = (w² − 1)(4 − w²), four real zeros, so the lattice is rectangular.
    let q = QuarticCoefficients::from_monomial(-1.0, 0.0, 5.0, 0.0, -4.0)?;
    let sol = solve_quartic_ivp(&q, 1.0)?;
    println!("g2 = {}, g3 = {}", quadrinvariant(&q), cubinvariant(&q));
    println!("periods: {:?}", sol.weierstrass().periods());
    println!("pole nearest the real period: {}", sol.pole()?);

    for k in 0..=4 {
        let x = sol.weierstrass().periods().omega().re * k as f64 / 2.0;
        println!("w({x:.6}) = {:.15}", sol.eval(ComplexScalar::new(x, 0.0))?.re);
    }

    let h = 1e-6;
    for z in [ComplexScalar::new(0.2, 0.1), ComplexScalar::new(-0.4, 0.3), ComplexScalar::new(0.7, -0.2)] {
        let w = sol.eval(z)?;
        let dw = (sol.eval(z + h)? - sol.eval(z - h)?) / (2.0 * h);
        println!("w({z}) = {w}, |w′² − f(w)| = {:.2e}", (dw * dw - q.eval_complex(w)).norm());
    }
    Ok(())
}
