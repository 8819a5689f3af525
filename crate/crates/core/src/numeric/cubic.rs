use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Three real roots sorted `e1 > e2 > e3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Roots3 {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

/// Roots of `4t³ − g2·t − g3 = 0` when the discriminant `g2³ − 27g3²` is
/// positive, by the trigonometric (Viète) method.
pub fn solve_depressed_cubic(g2: f64, g3: f64) -> Result<Roots3> {
    let disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    if !(disc > 0.0) {
        return Err(Error::Domain(format!(
            "cubic 4t^3 - g2 t - g3 needs g2^3 - 27 g3^2 > 0, got {disc:e}"
        )));
    }
    // t = r cos θ with r = √(g2/3) turns the cubic into cos 3θ = c.
    let r = (g2 / 3.0).sqrt();
    let c = (3.0 * g3 / (2.0 * g2) * (12.0 / g2).sqrt()).clamp(-1.0, 1.0);
    let theta = c.acos() / 3.0;
    let mut roots = [
        r * theta.cos(),
        r * (theta - 2.0 * PI / 3.0).cos(),
        r * (theta - 4.0 * PI / 3.0).cos(),
    ];
    for t in roots.iter_mut() {
        let f = 4.0 * *t * *t * *t - g2 * *t - g3;
        let df = 12.0 * *t * *t - g2;
        if df != 0.0 {
            *t -= f / df;
        }
    }
    Ok(Roots3 {
        e1: roots[0],
        e2: roots[1],
        e3: roots[2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn odd_cubic() {
        let r = solve_depressed_cubic(1.0, 0.0).unwrap();
        assert!(close(r.e1, 0.5, 1e-15) && close(r.e2, 0.0, 1e-15) && close(r.e3, -0.5, 1e-15));
    }

    #[test]
    fn dd_invariants_at_lambda_0_8() {
        let l2 = 0.64;
        let r = solve_depressed_cubic((3.0 * l2 + 1.0) / 3.0, (9.0 * l2 - 1.0) / 27.0).unwrap();
        assert!(close(r.e1, 1.0 / 6.0 + 0.4, 1e-14));
        assert!(close(r.e2, 1.0 / 6.0 - 0.4, 1e-14));
        assert!(close(r.e3, -1.0 / 3.0, 1e-14));
        assert!((r.e1 + r.e2 + r.e3).abs() <= 1e-14);
    }

    #[test]
    fn y4_invariants_at_lambda_0_8() {
        let l2 = 0.64;
        let r = solve_depressed_cubic(16.0 / 3.0 * (1.0 + 3.0 * l2), 64.0 / 27.0 * (1.0 - 9.0 * l2))
            .unwrap();
        assert!(close(r.e1, 4.0 / 3.0, 1e-13));
        assert!(close(r.e2, -2.0 / 3.0 + 1.6, 1e-13));
        assert!(close(r.e3, -2.0 / 3.0 - 1.6, 1e-13));
    }

    #[test]
    fn non_positive_discriminant_rejected() {
        assert!(solve_depressed_cubic(3.0, 1.0).is_err()); // 27 - 27 = 0
        assert!(solve_depressed_cubic(-1.0, 0.0).is_err());
    }
}
