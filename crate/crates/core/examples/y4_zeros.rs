//! y₄± on its lattice: the value at the origin, the zero and pole, and the
//! shift laws.
//!
//! cargo run --example y4_zeros -- [lambda]

use sig4::y4::make_y4_context;
use sig4::ComplexScalar;

fn main() -> sig4::Result<()> {
    let lambda: f64 = std::env::args().nth(1).map_or(0.8, |s| s.parse().expect("lambda"));
    let ctx = make_y4_context(lambda)?;
    let origin = ComplexScalar::new(0.0, 0.0);
    println!("lambda = {lambda}, mu+ = {}, mu- = {}", ctx.mu_plus(), ctx.mu_minus());
    println!("y4+(0) = {}, y4-(0) = {}", ctx.y4_plus(origin)?, ctx.y4_minus(origin)?);

    let (zero, pole) = ctx.zeros_poles();
    println!("zero at {zero}: y4+ = {:.3e}", ctx.y4_plus(zero)?.norm());
    println!("pole at {pole}: 1/y4+ = {:.3e}", ctx.y4_plus_reciprocal(pole)?.norm());

    let pp = ctx.periods();
    let z = ComplexScalar::new(0.37, 0.21);
    println!("y4+(z)        = {}", ctx.y4_plus(z)?);
    println!("y4+(z + Ω)    = {}", ctx.y4_plus(z + pp.omega())?);
    println!("y4+(z + Ω′)   = {}  (y4-(z) = {})", ctx.y4_plus(z + pp.omega_prime())?, ctx.y4_minus(z)?);
    println!("solution with y(0) = 0, at z: {}", ctx.zero_ivp_solution(z)?);
    Ok(())
}
