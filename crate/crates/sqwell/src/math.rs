//! Float primitives bound to `std` or `libm` depending on the build.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!(
    "enable the `std` feature (default) or `libm` to build without the standard library"
);

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn asin(x: f64) -> f64 {
        x.asin()
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        x.floor()
    }
    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn asin(x: f64) -> f64 {
        libm::asin(x)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
}

pub(crate) use imp::{abs, asin, floor, sqrt};

/// arcsin that folds arguments within 1e-15 of the endpoints back onto
/// [-1, 1]. Marginal states evaluate the phase exactly at the lip, where
/// rounding can push the ratio a hair past one; without the fold that is a
/// spurious NaN, not a physics statement.
pub(crate) fn asin_clamped(x: f64) -> f64 {
    const SLACK: f64 = 1e-15;
    if (1.0..=1.0 + SLACK).contains(&x) {
        return asin(1.0);
    }
    if (-1.0 - SLACK..=-1.0).contains(&x) {
        return asin(-1.0);
    }
    asin(x)
}
