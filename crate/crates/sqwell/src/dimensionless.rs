//! Dimensionless parameterization of rectangular wells and the unit adapter.
//!
//! A well of depth `V`, width `L` and particle mass `m` enters the spectrum
//! problem only through the strength `P = sqrt(2 m V) L / (2 hbar)`. States
//! are labeled by a dimensionless wave vector `K = L k`, with energy
//! `E = (hbar K / L)^2 / (2 m)` and the exact identity `E / V = (K / 2P)^2`.

use crate::error::Error;
use crate::math;
use core::f64::consts::PI;

/// Reduced Planck constant, J s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron rest mass, kg (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// One electron volt, J (exact since the 2019 SI).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

const NANOMETER: f64 = 1e-9;

/// Validated dimensionless well strength, strictly positive and finite.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct WellStrength(f64);

impl WellStrength {
    pub fn new(value: f64) -> Result<Self, Error> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::NonPositive("strength"));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Reciprocal strength `p = 1/P`, the small parameter of the deep-well
    /// expansions.
    pub fn shallowness(self) -> f64 {
        1.0 / self.0
    }
}

/// Unit conventions accepted by the adapter. No inference: callers state
/// which one they mean.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSystem {
    /// kilograms, joules, meters.
    Si,
    /// electron masses, electron volts, nanometers.
    EvNm,
}

/// A physical well description, interpreted under a [`UnitSystem`].
#[derive(Clone, Copy, Debug)]
pub struct PhysicalWell {
    pub mass: f64,
    pub depth: f64,
    pub width: f64,
}

fn to_si(w: &PhysicalWell, units: UnitSystem) -> Result<(f64, f64, f64), Error> {
    if !w.mass.is_finite() || w.mass <= 0.0 {
        return Err(Error::NonPositive("mass"));
    }
    if !w.depth.is_finite() || w.depth <= 0.0 {
        return Err(Error::NonPositive("depth"));
    }
    if !w.width.is_finite() || w.width <= 0.0 {
        return Err(Error::NonPositive("width"));
    }
    Ok(match units {
        UnitSystem::Si => (w.mass, w.depth, w.width),
        UnitSystem::EvNm => (
            w.mass * ELECTRON_MASS,
            w.depth * ELECTRON_VOLT,
            w.width * NANOMETER,
        ),
    })
}

/// `P = sqrt(2 m V) L / (2 hbar)`.
pub fn well_strength_from_physical(
    w: &PhysicalWell,
    units: UnitSystem,
) -> Result<WellStrength, Error> {
    let (m, v, l) = to_si(w, units)?;
    WellStrength::new(l * math::sqrt(2.0 * m * v) / (2.0 * HBAR))
}

/// Level energy from a dimensionless wave vector, in joules under
/// [`UnitSystem::Si`] and electron volts under [`UnitSystem::EvNm`].
pub fn energy_from_k(w: &PhysicalWell, units: UnitSystem, k: f64) -> Result<f64, Error> {
    if k < 0.0 || !k.is_finite() {
        return Err(Error::NegativeWaveVector);
    }
    let (m, _, l) = to_si(w, units)?;
    let q = HBAR * k / l;
    let joules = q * q / (2.0 * m);
    Ok(match units {
        UnitSystem::Si => joules,
        UnitSystem::EvNm => joules / ELECTRON_VOLT,
    })
}

/// `E / V = (K / 2P)^2`, the fraction of the well depth a state sits at.
pub fn energy_fraction(p: WellStrength, k: f64) -> f64 {
    let r = k / (2.0 * p.value());
    r * r
}

/// Level label `n` carrying the capacity `n_max` of the well it was
/// validated against; `1 <= n <= n_max` by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelIndex {
    n: u32,
    n_max: u32,
}

impl LevelIndex {
    pub fn new(n: u32, n_max: u32) -> Result<Self, Error> {
        if n == 0 || n > n_max {
            return Err(Error::LevelOutOfRange { n, max: n_max });
        }
        Ok(Self { n, n_max })
    }

    /// Validates `n` against the capacity of a symmetric well.
    pub fn for_symmetric(p: WellStrength, n: u32) -> Result<Self, Error> {
        Self::new(n, n_max_symmetric(p))
    }

    /// Validates `n` against the capacity of an asymmetric well.
    pub fn for_asymmetric(w: &AsymmetricWell, n: u32) -> Result<Self, Error> {
        Self::new(n, n_max_asymmetric(w))
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn n_max(self) -> u32 {
        self.n_max
    }
}

/// A well whose two walls have different strengths. The symmetric case is
/// `left == right`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymmetricWell {
    pub left: WellStrength,
    pub right: WellStrength,
}

impl AsymmetricWell {
    pub fn new(left: WellStrength, right: WellStrength) -> Self {
        Self { left, right }
    }

    pub fn symmetric(p: WellStrength) -> Self {
        Self { left: p, right: p }
    }

    pub fn swapped(self) -> Self {
        Self {
            left: self.right,
            right: self.left,
        }
    }
}

/// Number of bound states of a symmetric well: `floor(2P/pi) + 1`.
///
/// When `2P/pi` lands on an integer the top state sits exactly on the
/// continuum lip (`K = 2P`); it satisfies the eigenvalue condition with
/// equality and is counted.
pub fn n_max_symmetric(p: WellStrength) -> u32 {
    let x = math::floor(2.0 * p.value() / PI);
    if x >= u32::MAX as f64 {
        u32::MAX
    } else {
        x as u32 + 1
    }
}

/// Number of bound states of an asymmetric well; zero is possible, a
/// sufficiently lopsided well binds nothing.
///
/// A state `n` exists while `n pi` does not exceed the total phase available
/// at the lip `K = 2 min(P)`: the well's own span plus the two wall phase
/// shifts. Reduces to the symmetric count when the walls match, marginal lip
/// states included.
pub fn n_max_asymmetric(w: &AsymmetricWell) -> u32 {
    let pl = w.left.value();
    let pr = w.right.value();
    let pm = if pl <= pr { pl } else { pr };
    let phase = 2.0 * pm + math::asin_clamped(pm / pl) + math::asin_clamped(pm / pr);
    let x = math::floor(phase / PI);
    if x >= u32::MAX as f64 {
        u32::MAX
    } else {
        x as u32
    }
}
