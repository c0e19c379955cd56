//! Error type shared by all modules.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A base below the smallest one an operation is defined for.
    BaseTooSmall { base: u64, min: u64 },
    /// The scaled power-sum polynomial of exponent 0 does not exist
    /// (`gamma_0 = b - 1` breaks the Bernoulli closed form).
    ScaledPowerSumAtZero,
    /// The cubic deviation is only defined from order 4 on.
    DeviationOrderTooSmall { m: u32 },
    /// `zeta(s)` is evaluated for integer `s >= 2` only.
    ZetaArgumentTooSmall { s: u32 },
    /// `expansion` takes 0 to 3 correction terms.
    TermCountOutOfRange { nterms: u8 },
    /// Enumerating the requested range would exceed the term ceiling.
    EnumerationLimitExceeded { needed: u64, limit: u64 },
    /// The requested precision needs a working scale beyond the configured
    /// ceiling.
    PrecisionOverflow { scale: u64, limit: u64 },
    /// A computed moment left the interval `(0, b]`; the truncation bounds
    /// rely on it, so this aborts instead of producing a wrong sum.
    MomentBoundViolated { base: u64, m: u32 },
    /// The polynomial root finder did not converge for this order.
    RootFindingFailed { m: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BaseTooSmall { base, min } => {
                write!(f, "base {base} is not supported here (need base >= {min})")
            }
            Self::ScaledPowerSumAtZero => {
                write!(f, "scaled power sum polynomial requires exponent >= 1")
            }
            Self::DeviationOrderTooSmall { m } => {
                write!(f, "deviation requires order m >= 4, got {m}")
            }
            Self::ZetaArgumentTooSmall { s } => {
                write!(f, "zeta is only evaluated at integers s >= 2, got {s}")
            }
            Self::TermCountOutOfRange { nterms } => {
                write!(f, "expansion takes 0..=3 correction terms, got {nterms}")
            }
            Self::EnumerationLimitExceeded { needed, limit } => {
                write!(f, "enumeration needs {needed} terms, above the limit of {limit}")
            }
            Self::PrecisionOverflow { scale, limit } => {
                write!(f, "working scale {scale} exceeds the configured limit of {limit} digits")
            }
            Self::MomentBoundViolated { base, m } => {
                write!(f, "moment v_{m} at base {base} left (0, b]; refusing to continue")
            }
            Self::RootFindingFailed { m } => {
                write!(f, "root finder failed to converge for order m = {m}")
            }
        }
    }
}

impl core::error::Error for Error {}
