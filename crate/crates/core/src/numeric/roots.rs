use super::Interval;
use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Root of `f` inside `bracket`, to `|f(x)| <= tol`.
///
/// Secant steps safeguarded by bisection: the bracket always shrinks and a
/// secant proposal outside it (or one that fails to halve the bracket over
/// two steps) is replaced by the midpoint.
pub fn find_root<F>(f: F, bracket: Interval, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    newton_bisect(
        |x| (f(x), f64::NAN),
        bracket,
        tol,
    )
}

/// Safeguarded Newton iteration. `fdf` returns `(f(x), f'(x))`; a NaN
/// derivative falls back to the secant slope through the bracket ends.
pub fn newton_bisect<F>(fdf: F, bracket: Interval, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    let (mut a, mut b) = (bracket.lo(), bracket.hi());
    let (mut fa, _) = fdf(a);
    let (mut fb, _) = fdf(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::Domain(format!(
            "no sign change on [{a}, {b}]: f = ({fa:e}, {fb:e})"
        )));
    }

    let mut x = if fa.abs() < fb.abs() { a } else { b };
    let mut step_before = b - a;
    let mut step = step_before;
    for _ in 0..MAX_ITER {
        let (fx, dfx) = fdf(x);
        if fx.abs() <= tol {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if b - a <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return Ok(if fa.abs() < fb.abs() { a } else { b });
        }

        let slope = if dfx.is_finite() && dfx != 0.0 {
            dfx
        } else {
            (fb - fa) / (b - a)
        };
        let proposal = x - fx / slope;
        // Bisect when the step leaves the bracket or is not shrinking fast.
        let (next, taken) = if proposal > a && proposal < b && (2.0 * (proposal - x)).abs() <= step_before.abs() {
            (proposal, proposal - x)
        } else {
            let mid = 0.5 * (a + b);
            (mid, mid - x)
        };
        step_before = step;
        step = taken;
        x = next;
    }
    Err(Error::RootNotConverged { iterations: MAX_ITER })
}
