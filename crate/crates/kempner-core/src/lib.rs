//! Exact and high-precision computation of Kempner sums `K(b, b-1)`: the sum
//! of `1/n` over positive integers whose base-`b` digits avoid the digit
//! `b-1`.
//!
//! Three independent computation routes are provided and cross-checked:
//!
//! - [`kempner`]: the reference route, summing the double series
//!   `sum_{d=1}^{b-2} sum_{m>=1} v_m / (d+1)^{m+1}` with exact rational
//!   moments `v_m` and a certified truncation bound;
//! - [`fischer`]: for base 10, Fischer's series
//!   `10 log 10 - sum_m 10^{-m-1} beta_m zeta(m+1)` with its own linear
//!   recurrence for the rational coefficients `beta_m`;
//! - [`oracle`]: direct enumeration of admissible integers, giving rigorous
//!   two-sided brackets from exact partial sums.
//!
//! [`asymptotics`] evaluates the large-base expansion
//! `b log b - A/b - B/b^2 - C/b^3` whose coefficients are rational
//! combinations of `zeta(2)`, `zeta(3)`, `zeta(4)`, and measures the
//! `O(1/b^4)` remainder against the exact sum.
//!
//! The crate is `no_std` (it requires `alloc`); all IO lives in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asymptotics;
pub mod decimal;
pub mod error;
pub mod fischer;
pub mod kempner;
pub mod moments;
pub mod oracle;
pub mod powersums;
pub mod ratfun;
pub mod rational;

mod util;

pub use decimal::Decimal;
pub use error::{Error, Result};
pub use rational::Rational;
