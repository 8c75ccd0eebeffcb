//! Bracketed scalar root finding.

use crate::error::Error;
use crate::math;

/// Finds the root of `f` inside `[lo, hi]`, which must straddle a sign
/// change. Each round tries a secant step through the current bracket and
/// falls back to bisection whenever the step leaves the interval, stalls, or
/// fails to halve it; the bracket therefore shrinks geometrically no matter
/// how the function behaves. Runs down to `tol` interval width (pass 0.0 to
/// grind to float resolution) or `max_iter` rounds, whichever comes first,
/// and returns the endpoint with the smaller defect.
///
/// Derivative-free on purpose: the phase conditions this crate solves have
/// an infinite slope at the bracket lip, where a Newton step is unsafe.
pub(crate) fn find_root<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: u32,
) -> Result<f64, Error> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || (flo > 0.0) == (fhi > 0.0) {
        return Err(Error::BracketFailure);
    }
    let mut force_bisect = false;
    for _ in 0..max_iter {
        let width = hi - lo;
        if width <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || hi <= mid {
            // interval is below float resolution
            break;
        }
        let mut x = if force_bisect {
            mid
        } else {
            lo - flo * width / (fhi - flo)
        };
        if !x.is_finite() || x <= lo || hi <= x {
            x = mid;
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == (flo > 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        // secant stalls when one endpoint pins; insist on a bisection round
        // whenever the last step failed to halve the bracket
        force_bisect = (hi - lo) > 0.5 * width;
    }
    Ok(if math::abs(flo) <= math::abs(fhi) {
        lo
    } else {
        hi
    })
}
