//! Evaluates dd on the real axis and in the complex plane, and the real
//! inversion of the incomplete integral.
//!
//! cargo run --example dd_values -- [kappa]

use sig4::dd::{self, make_context};
use sig4::ComplexScalar;

fn main() -> sig4::Result<()> {
    let kappa: f64 = std::env::args().nth(1).map_or(0.6, |s| s.parse().expect("kappa"));
    let ctx = make_context(kappa)?;
    let m = ctx.modulus();
    let omega = ctx.periods().omega().re;
    println!("kappa = {kappa}, lambda = {}, omega = {omega}", m.lambda());

    println!("{:>10} {:>20} {:>20} {:>20}", "u", "d(u)", "dd(u)", "phi(u)");
    for k in 0..=8 {
        let u = omega * k as f64 / 4.0;
        let via_phi = dd::d_real(u, &m)?;
        let via_wp = ctx.dd(ComplexScalar::new(u, 0.0))?.re;
        println!("{u:>10.6} {via_phi:>20.15} {via_wp:>20.15} {:>20.15}", dd::phi(u, &m)?);
    }

    for z in [ComplexScalar::new(0.3, 0.2), ComplexScalar::new(0.5, -1.1)] {
        println!("dd({z}) = {}", ctx.dd(z)?);
    }
    // dd has a double pole at ω′.
    println!("dd(ω′) -> {:?}", ctx.dd(ctx.periods().omega_prime()));
    Ok(())
}
