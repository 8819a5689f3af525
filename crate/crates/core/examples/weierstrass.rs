//! ℘ and ℘′ on a rectangular lattice given by its invariants.
//!
//! cargo run --example weierstrass -- [g2 g3]

use sig4::weierstrass::{Invariants, Weierstrass};
use sig4::ComplexScalar;

fn main() -> sig4::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).map(|s| s.parse().expect("number")).collect();
    let (g2, g3) = match args[..] {
        [g2, g3] => (g2, g3),
        _ => (4.0, 0.0),
    };
    let wp = Weierstrass::new(Invariants::new(g2, g3)?)?;
    let e = wp.midpoints();
    let pp = wp.periods();
    println!("g2 = {g2}, g3 = {g3}, discriminant = {}", wp.invariants().discriminant());
    println!("e1 = {}, e2 = {}, e3 = {}", e.e1, e.e2, e.e3);
    println!("omega = {}, omega' = {}", pp.omega(), pp.omega_prime());
    println!("quarter-period values: {:?}", wp.quarter_values());

    for z in [ComplexScalar::new(0.3, 0.2), pp.omega() * 0.5 + pp.omega_prime() * 0.25] {
        let (p, dp) = wp.value_and_derivative(z)?;
        let res = dp * dp - (4.0 * p * p * p - g2 * p - g3);
        println!("z = {z}: p = {p}, p' = {dp}, |p'² − (4p³ − g2 p − g3)| = {:.2e}", res.norm());
    }
    Ok(())
}
