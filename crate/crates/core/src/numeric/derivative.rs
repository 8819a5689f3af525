use std::f64::consts::TAU;

use super::ComplexScalar;
use crate::error::Result;

/// `f′(z)` from the Cauchy integral over the circle `|ζ − z| = radius`,
/// discretised by the `n`-point trapezoidal rule.
///
/// For `f` analytic on a disc of radius `R > radius` the error decays like
/// `(radius/R)^n`; only values of `f` are used.
pub fn cauchy_derivative<F>(f: F, z: ComplexScalar, radius: f64, n: usize) -> Result<ComplexScalar>
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for k in 0..n {
        let dir = ComplexScalar::from_polar(1.0, TAU * k as f64 / n as f64);
        acc += f(z + radius * dir)? / dir;
    }
    Ok(acc / (n as f64 * radius))
}

/// Second-order central difference `(f(z + h) − f(z − h)) / 2h`.
pub fn central_difference<F>(f: F, z: ComplexScalar, h: f64) -> Result<ComplexScalar>
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    Ok((f(z + h)? - f(z - h)?) / (2.0 * h))
}

/// Fourth-order five-point central difference.
pub fn five_point_difference<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    Ok((8.0 * (f(x + h)? - f(x - h)?) - (f(x + 2.0 * h)? - f(x - 2.0 * h)?)) / (12.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_exp() {
        let z = ComplexScalar::new(0.3, -0.7);
        let d = cauchy_derivative(|w| Ok(w.exp()), z, 0.1, 32).unwrap();
        assert!((d - z.exp()).norm() < 1e-15);
        let d = central_difference(|w| Ok(w.exp()), z, 1e-6).unwrap();
        assert!((d - z.exp()).norm() < 1e-9);
        let d = five_point_difference(|x| Ok(x.sin()), 0.4, 1e-3).unwrap();
        assert!((d - 0.4f64.cos()).abs() < 1e-12);
    }

    #[test]
    fn derivative_near_pole() {
        // f = 1/(w − 1), evaluated 0.05 from the pole.
        let z = ComplexScalar::new(0.95, 0.0);
        let d = cauchy_derivative(|w| Ok(1.0 / (w - 1.0)), z, 0.025, 64).unwrap();
        let exact = -1.0 / ((z - 1.0) * (z - 1.0));
        assert!((d - exact).norm() <= 1e-13 * exact.norm(), "{d} vs {exact}");
    }
}
