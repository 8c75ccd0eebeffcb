//! Penetration-depth approximations to the bound spectrum.
//!
//! The wave function leaks a distance `y L / 2` past each wall, so level `n`
//! behaves like an infinite well widened by `1 + y`:
//!
//! ```text
//! K = n pi / (1 + y)
//! ```
//!
//! The penetration fraction obeys the self-consistency relation
//!
//! ```text
//! y = p (1 + y) / sqrt((1 + y)^2 - a^2),    a = n pi / (2P),  p = 1/P
//! ```
//!
//! solved here three ways: by iterating from `y = 0` (two steps give a
//! closed form), by solving the relation exactly, and by the deep-well
//! lowest order that drops `a` entirely. For `a >= 1` the iteration's seed
//! sits inside the forbidden band and the first step already fails; those
//! levels are reported as [`Penetration::Unphysical`] rather than an error.
//! The self-consistent root survives past the lip and stays available.

use crate::dimensionless::WellStrength;
use crate::error::Error;
use crate::math;
use crate::reference::{Source, WaveVectorEstimate};
use crate::solve;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Which approximation produced a penetration value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Closed form after two iterations from zero.
    TwoIteration,
    /// Exact solution of the self-consistency relation.
    Consistent,
    /// Level-independent deep-well value.
    LowestOrder,
}

/// A penetration fraction, or the marker for levels past the lip.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Penetration {
    Physical(f64),
    Unphysical,
}

impl Penetration {
    pub fn value(self) -> Option<f64> {
        match self {
            Penetration::Physical(y) => Some(y),
            Penetration::Unphysical => None,
        }
    }

    pub fn is_unphysical(self) -> bool {
        matches!(self, Penetration::Unphysical)
    }
}

/// A penetration estimate tagged with its variant; `iterations_used` is the
/// iteration count when one applies (`None` for closed forms).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PenetrationResult {
    pub variant: Variant,
    pub y: Penetration,
    pub iterations_used: Option<u32>,
}

/// `a = n pi / (2P)`: the level's position as a fraction of the lip.
fn infinite_well_ratio(p: WellStrength, n: u32) -> f64 {
    n as f64 * PI / (2.0 * p.value())
}

/// One iteration step `y -> p (1 + y) / sqrt((1 + y)^2 - a^2)`.
/// `None` when the radicand is not positive (iterate fell inside the lip).
fn step(p_inv: f64, a: f64, y: f64) -> Option<f64> {
    let w = 1.0 + y;
    let rad = w * w - a * a;
    if rad <= 0.0 {
        return None;
    }
    Some(p_inv * w / math::sqrt(rad))
}

/// First iterate from `y = 0`: `y = p / sqrt(1 - a^2)`.
pub fn y_first_iteration(p: WellStrength, n: u32) -> PenetrationResult {
    let a = infinite_well_ratio(p, n);
    let y = if a >= 1.0 {
        Penetration::Unphysical
    } else {
        Penetration::Physical(p.shallowness() / math::sqrt(1.0 - a * a))
    };
    PenetrationResult {
        variant: Variant::TwoIteration,
        y,
        iterations_used: Some(1),
    }
}

/// Second iterate in closed form:
///
/// ```text
/// y = p / sqrt(1 - a^2 / (1 + y1)^2),   y1 = p / sqrt(1 - a^2)
/// ```
pub fn y_two_iteration(p: WellStrength, n: u32) -> PenetrationResult {
    let a = infinite_well_ratio(p, n);
    let y = if a >= 1.0 {
        Penetration::Unphysical
    } else {
        let y1 = p.shallowness() / math::sqrt(1.0 - a * a);
        let w = 1.0 + y1;
        let rad = 1.0 - a * a / (w * w);
        if rad <= 0.0 {
            // cannot occur for a < 1 since y1 > 0, kept as a guard
            Penetration::Unphysical
        } else {
            Penetration::Physical(p.shallowness() / math::sqrt(rad))
        }
    };
    PenetrationResult {
        variant: Variant::TwoIteration,
        y,
        iterations_used: None,
    }
}

/// Iteration cap; the map contracts quickly on physical levels, so hitting
/// this means the inputs were hostile rather than slow.
const ITERATION_CAP: u32 = 10_000;

/// Relative step tolerance declaring the iteration converged.
const ITERATION_TOL: f64 = 1e-12;

/// Trace of the iteration `y^(l+1) = p (1 + y^(l)) / sqrt((1 + y^(l))^2 - a^2)`
/// from seed `y^(0) = 0`.
#[derive(Clone, Debug)]
pub struct IterationRun {
    /// Successive iterates `y^(1), y^(2), ...` in order.
    pub terms: Vec<PenetrationResult>,
    /// 1-based index of the first step whose radicand collapsed, if any.
    /// The last element of `terms` is then the last valid iterate.
    pub diverged_at: Option<u32>,
    /// Whether the relative step tolerance was reached within the limit.
    pub converged: bool,
}

impl IterationRun {
    /// Final iterate produced, unphysical when the very first step failed.
    pub fn last(&self) -> PenetrationResult {
        self.terms.last().copied().unwrap_or(PenetrationResult {
            variant: Variant::TwoIteration,
            y: Penetration::Unphysical,
            iterations_used: Some(0),
        })
    }
}

/// Runs up to `limit` iterations, recording every iterate. Divergence is
/// reported in-band through [`IterationRun::diverged_at`] so callers keep
/// the partial sequence.
pub fn y_iterate(p: WellStrength, n: u32, limit: u32) -> IterationRun {
    let a = infinite_well_ratio(p, n);
    let p_inv = p.shallowness();
    let limit = limit.min(ITERATION_CAP);
    let mut terms = Vec::new();
    let mut y = 0.0_f64;
    let mut converged = false;
    for l in 1..=limit {
        match step(p_inv, a, y) {
            None => {
                return IterationRun {
                    terms,
                    diverged_at: Some(l),
                    converged: false,
                }
            }
            Some(next) => {
                terms.push(PenetrationResult {
                    variant: Variant::TwoIteration,
                    y: Penetration::Physical(next),
                    iterations_used: Some(l),
                });
                let dy = math::abs(next - y);
                y = next;
                if dy <= ITERATION_TOL * (1.0 + y) {
                    converged = true;
                    break;
                }
            }
        }
    }
    IterationRun {
        terms,
        diverged_at: None,
        converged,
    }
}

/// The iteration run to its fixed point (or the cap), reduced to a single
/// result. Unphysical levels diverge on the first step and come back as the
/// marker.
pub fn y_iteration_limit(p: WellStrength, n: u32) -> PenetrationResult {
    let run = y_iterate(p, n, ITERATION_CAP);
    run.last()
}

/// Exact self-consistent penetration: the root of
///
/// ```text
/// g(y) = y sqrt((1 + y)^2 - a^2) - p (1 + y) = 0
/// ```
///
/// on `y > max(0, a - 1)`, polished on the equivalent quartic
/// `y^4 + 2 y^3 + (1 - a^2 - p^2) y^2 - 2 p^2 y - p^2 = 0`.
///
/// A root exists on that interval for every `a`, so near-lip levels that
/// defeat the iteration (`a >= 1`) still get a self-consistent value here.
/// Numerical failure to bracket is an error, never a silent wrong value.
pub fn y_consistent(p: WellStrength, n: u32) -> Result<PenetrationResult, Error> {
    let a = infinite_well_ratio(p, n);
    let pv = p.shallowness();
    let g = |y: f64| {
        let w = 1.0 + y;
        let rad = w * w - a * a;
        y * math::sqrt(rad) - pv * w
    };
    // g < 0 just above the edge (y ~ 0 there), grows like y^2 for large y
    let edge = if a > 1.0 { a - 1.0 } else { 0.0 };
    let mut lo = edge + 1e-12 * (1.0 + a);
    let cap = lo + 10.0 * (1.0 + pv + PI * n as f64 / 2.0);
    if g(lo) >= 0.0 {
        // root is pinned against the edge; shrink toward it
        lo = edge;
    }
    let mut hi = lo + pv.max(1e-3);
    while g(hi) <= 0.0 {
        hi = lo + 2.0 * (hi - lo);
        if hi > cap {
            return Err(Error::BracketFailure);
        }
    }
    let mut y = solve::find_root(g, lo, hi, 0.0, 200)?;
    // two Newton steps on the quartic sharpen the sqrt-form root
    let c2 = 1.0 - (a * a + pv * pv);
    let c1 = -2.0 * pv * pv;
    let c0 = -pv * pv;
    for _ in 0..2 {
        let poly = (((y + 2.0) * y + c2) * y + c1) * y + c0;
        let dpoly = ((4.0 * y + 6.0) * y + 2.0 * c2) * y + c1;
        if dpoly == 0.0 {
            break;
        }
        let yn = y - poly / dpoly;
        if !yn.is_finite() || yn <= edge {
            break;
        }
        y = yn;
    }
    Ok(PenetrationResult {
        variant: Variant::Consistent,
        y: Penetration::Physical(y),
        iterations_used: None,
    })
}

/// Deep-well lowest order, independent of `n`: the exact root
///
/// ```text
/// y0 = p sqrt(p^2 + 1) + p^2
/// ```
///
/// of `y^2 - 2 p^2 y - p^2 = 0`, which is the consistency relation with the
/// level ratio `a` dropped. Its small-`p` expansion starts `p + p^2`; the
/// benchmark tables in [`crate::analysis`] use that truncated series, this
/// op returns the untruncated root.
pub fn y_lowest_order(p: WellStrength) -> PenetrationResult {
    let pv = p.shallowness();
    PenetrationResult {
        variant: Variant::LowestOrder,
        y: Penetration::Physical(pv * math::sqrt(pv * pv + 1.0) + pv * pv),
        iterations_used: None,
    }
}

/// Spectrum estimate from a penetration fraction: `K = n pi / (1 + y)`.
/// Unphysical penetrations produce no estimate.
pub fn k_from_y(n: u32, y: &PenetrationResult) -> Option<WaveVectorEstimate> {
    let yv = y.y.value()?;
    let source = match y.variant {
        Variant::TwoIteration => Source::Garrett2,
        Variant::Consistent => Source::Garrett4,
        Variant::LowestOrder => Source::Garrett0,
    };
    Some(WaveVectorEstimate {
        k: n as f64 * PI / (1.0 + yv),
        n,
        source,
    })
}

/// Residual of the quartic form of the consistency relation at `y`, for
/// verification. Exact roots give values at round-off scale.
pub fn consistency_quartic(p: WellStrength, n: u32, y: f64) -> f64 {
    let a = infinite_well_ratio(p, n);
    let pv = p.shallowness();
    let c2 = 1.0 - (a * a + pv * pv);
    (((y + 2.0) * y + c2) * y - 2.0 * pv * pv) * y - pv * pv
}

/// Defect `y - p (1 + y) / sqrt((1 + y)^2 - a^2)` of the fixed-point form at
/// `y`; infinite when the radicand collapses.
pub fn consistency_defect(p: WellStrength, n: u32, y: f64) -> f64 {
    let a = infinite_well_ratio(p, n);
    match step(p.shallowness(), a, y) {
        None => f64::INFINITY,
        Some(s) => y - s,
    }
}
