//! Bounded one-dimensional maximization: golden-section bracketing refined by
//! guarded Newton steps. Every family here has a scalar parameter, so this is
//! the whole optimization layer.

const GOLDEN_RATIO: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy)]
pub struct MaxOutcome {
    pub x: f64,
    pub fx: f64,
    /// The maximum sits on (or within 1e-6 of) a search bound.
    pub boundary: bool,
    pub evaluations: usize,
}

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Non-finite values are treated as minus infinity.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, xtol: f64) -> MaxOutcome {
    let mut evals = 0usize;
    let mut eval = |x: f64| {
        evals += 1;
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::NEG_INFINITY
        }
    };
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - GOLDEN_RATIO * (b - a);
    let mut x2 = a + GOLDEN_RATIO * (b - a);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    for _ in 0..500 {
        if b - a <= xtol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN_RATIO * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN_RATIO * (b - a);
            f2 = eval(x2);
        }
    }
    // compare interior candidates with the interval ends
    let mut best_x = if f1 >= f2 { x1 } else { x2 };
    let mut best_f = f1.max(f2);
    for cand in [lo, hi] {
        let fc = eval(cand);
        if fc > best_f {
            best_f = fc;
            best_x = cand;
        }
    }
    let btol = 1e-6 * (hi - lo).max(1.0);
    MaxOutcome {
        x: best_x,
        fx: best_f,
        boundary: best_x - lo <= btol || hi - best_x <= btol,
        evaluations: evals,
    }
}

/// Newton ascent on [lo, hi] from `start`, using caller-supplied first and
/// second derivatives. Steps outside the interval are clamped; a clamped step
/// whose derivative still points outward means a boundary maximum. Returns
/// `None` when the curvature is unusable (caller falls back to golden
/// section).
pub fn newton_max<D: FnMut(f64) -> (f64, f64)>(
    mut derivs: D,
    start: f64,
    lo: f64,
    hi: f64,
    xtol: f64,
    max_iter: usize,
) -> Option<MaxOutcome> {
    let mut x = start.clamp(lo, hi);
    for iter in 0..max_iter {
        let evals = iter + 1;
        let (g, h) = derivs(x);
        if !g.is_finite() || !h.is_finite() {
            return None;
        }
        if x == lo && g < 0.0 {
            return Some(MaxOutcome {
                x: lo,
                fx: f64::NAN,
                boundary: true,
                evaluations: evals,
            });
        }
        if x == hi && g > 0.0 {
            return Some(MaxOutcome {
                x: hi,
                fx: f64::NAN,
                boundary: true,
                evaluations: evals,
            });
        }
        if h >= -1e-300 {
            // not locally concave here; Newton would climb the wrong way
            return None;
        }
        let step = -g / h;
        let next = (x + step).clamp(lo, hi);
        let moved = (next - x).abs();
        x = next;
        if moved <= xtol {
            let btol = 1e-6 * (hi - lo).max(1.0);
            return Some(MaxOutcome {
                x,
                fx: f64::NAN,
                boundary: x - lo <= btol || hi - x <= btol,
                evaluations: evals,
            });
        }
    }
    None
}

/// Central-difference first and second derivatives of `f`.
pub fn numeric_derivatives<F: FnMut(f64) -> f64>(
    f: &mut F,
    x: f64,
    h: f64,
    lo: f64,
    hi: f64,
) -> (f64, f64) {
    // shift the stencil inward near the bounds so f is never evaluated
    // outside its domain
    let c = x.clamp(lo + h, hi - h);
    let fp = f(c + h);
    let fm = f(c - h);
    let f0 = f(c);
    ((fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h))
}
