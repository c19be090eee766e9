//! Bracketed root finding for strictly monotone conditional CDFs.

use crate::error::{CopulaError, Result};

pub const ROOT_TOL: f64 = 1e-12;
pub const ROOT_MAX_ITER: usize = 200;

/// Solves `f(x) = target` for a nondecreasing `f` on (0, 1).
///
/// Newton steps (using `df`) are accepted only while they stay inside the
/// current bracket; otherwise the step falls back to bisection, so the
/// monotone bracket [1e-15, 1 - 1e-15] guarantees convergence.
pub fn invert_monotone_cdf<F, D>(f: F, df: D, target: f64, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut lo = 1e-15;
    let mut hi = 1.0 - 1e-15;
    let flo = f(lo);
    let fhi = f(hi);
    if flo >= target {
        return Ok(lo);
    }
    if fhi <= target {
        return Ok(hi);
    }
    let mut x = target.clamp(lo, hi); // a copula conditional is near the identity
    let mut residual = f64::INFINITY;
    for _ in 0..max_iter {
        let fx = f(x);
        residual = fx - target;
        if residual.abs() <= tol {
            // polish to x-space convergence: where the conditional is flat a
            // small residual can still hide an x error of residual/f'
            for _ in 0..8 {
                let d = df(x);
                if d.is_nan() || d <= 0.0 {
                    break;
                }
                let step = (f(x) - target) / d;
                let polished = x - step;
                if !(polished > lo && polished < hi) {
                    break;
                }
                x = polished;
                if step.abs() <= 1e-12 {
                    break;
                }
            }
            return Ok(x);
        }
        if residual > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let d = df(x);
        let newton = if d > 0.0 { x - residual / d } else { f64::NAN };
        x = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(CopulaError::ConvergenceFailure {
        max_iter,
        residual: residual.abs(),
    })
}
