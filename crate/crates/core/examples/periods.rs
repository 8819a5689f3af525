//! Half-periods of the dd lattice and the y₄ lattice across the modulus range.
//!
//! cargo run --example periods

use sig4::dd::{omega_three_ways, Modulus};
use sig4::verify::Relations;

fn main() -> sig4::Result<()> {
    println!(
        "{:>5} {:>18} {:>18} {:>18} {:>18} {:>12}",
        "kappa", "omega", "|omega'|", "Omega", "|Omega'|", "spread"
    );
    for kappa in [0.1, 0.3, 0.5, 0.6, 0.7, 0.9] {
        let rel = Relations::new(kappa)?;
        let small = rel.dd_context().periods();
        let big = rel.y4_context().periods();
        let three = omega_three_ways(&Modulus::new(kappa)?)?;
        let spread = (three.closed - three.via_integral).abs().max((three.closed - three.via_trig).abs());
        println!(
            "{kappa:>5} {:>18.15} {:>18.15} {:>18.15} {:>18.15} {spread:>12.2e}",
            small.half_real, small.half_imag_mag, big.half_real, big.half_imag_mag
        );
    }
    Ok(())
}
