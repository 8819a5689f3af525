use sig4::verify::{Lcg64, SampleCell};
use sig4::y4::{chebyshev_t4, make_y4_context};
use sig4::ComplexScalar;

fn cd<F: Fn(ComplexScalar) -> sig4::Result<ComplexScalar>>(f: F, z: ComplexScalar) -> ComplexScalar {
    let h = 1e-6;
    (f(z + h).unwrap() - f(z - h).unwrap()) / (2.0 * h)
}

#[test]
fn equation_by_central_difference() {
    for lambda in [0.44, 0.8, 0.95] {
        let ctx = make_y4_context(lambda).unwrap();
        let cell = SampleCell::new(ctx.periods());
        let mut rng = Lcg64::new(11);
        for _ in 0..200 {
            let z = cell.sample(&mut rng);
            let y = ctx.y4_plus(z).unwrap();
            let dy = cd(|w| ctx.y4_plus(w), z);
            let r = (dy * dy - ctx.rhs(y)).norm();
            assert!(r <= 1e-7 * (1.0 + y.norm().powi(4)), "λ = {lambda}, z = {z}: {r:e}");
        }
    }
}

#[test]
fn shift_laws() {
    let ctx = make_y4_context(0.8).unwrap();
    let pp = ctx.periods();
    let (w, wp) = (pp.omega(), pp.omega_prime());
    let cell = SampleCell::new(pp);
    let mut rng = Lcg64::new(12);
    for _ in 0..100 {
        let z = cell.sample(&mut rng);
        let y = ctx.y4_plus(z).unwrap();
        let ym = ctx.y4_minus(z).unwrap();
        assert!((ctx.y4_plus(z + w).unwrap() + y).norm() <= 1e-9);
        assert!((ctx.y4_plus(z + wp).unwrap() - ym).norm() <= 1e-9);
        assert!((ctx.y4_plus(z + w + wp).unwrap() + ym).norm() <= 1e-9);
    }
}

#[test]
fn flat_at_the_extreme_values() {
    let ctx = make_y4_context(0.8).unwrap();
    let pp = ctx.periods();
    let (w, wp) = (pp.omega(), pp.omega_prime());
    for z in [ComplexScalar::new(0.0, 0.0), w, wp, w + wp] {
        let dy = sig4::numeric::cauchy_derivative(|u| ctx.y4_plus(u), z, 0.05, 64).unwrap();
        assert!(dy.norm() <= 1e-8, "{z}: {dy}");
    }
}

#[test]
fn four_real_zeros() {
    for lambda in [0.2, 0.6, 0.8, 0.99] {
        let ctx = make_y4_context(lambda).unwrap();
        for r in [ctx.mu_plus(), -ctx.mu_plus(), ctx.mu_minus(), -ctx.mu_minus()] {
            assert!((chebyshev_t4(r) - (1.0 - 2.0 * lambda * lambda)).abs() <= 1e-13);
        }
    }
}
