use core::fmt;

/// Domain and numerical failures surfaced by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// A quantity that must be strictly positive and finite was not.
    /// Carries the offending field name.
    NonPositive(&'static str),
    /// A wave vector argument was negative.
    NegativeWaveVector,
    /// Requested level index lies outside 1..=n_max for the well at hand.
    LevelOutOfRange { n: u32, max: u32 },
    /// Two estimates refer to different level indices.
    MismatchedLevels { expected: u32, found: u32 },
    /// A relative error was requested against a non-exact reference.
    NotExactReference,
    /// Sign-change bracketing failed. Unreachable for in-domain inputs;
    /// surfaced instead of panicking for safety.
    BracketFailure,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonPositive(field) => {
                write!(f, "{field} must be positive and finite")
            }
            Error::NegativeWaveVector => write!(f, "wave vector must be nonnegative"),
            Error::LevelOutOfRange { n: 0, .. } => write!(f, "n must be at least 1"),
            Error::LevelOutOfRange { n, max } => {
                write!(f, "n exceeds n_max={max} (got n={n})")
            }
            Error::MismatchedLevels { expected, found } => {
                write!(f, "level mismatch: expected n={expected}, found n={found}")
            }
            Error::NotExactReference => {
                write!(f, "reference wave vector must come from the exact solver")
            }
            Error::BracketFailure => write!(f, "failed to bracket a root"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
