//! Brute-force route: enumerate the integers whose base-`b` digits avoid
//! `b - 1`, sum their reciprocals exactly, and wrap the result in a
//! rigorous two-sided bracket.
//!
//! Level `l` (integers with exactly `l` digits) holds `(b-2)(b-1)^{l-1}`
//! admissible integers: the leading digit ranges over `1..=b-2` and the
//! rest over `0..=b-2`, which is exactly the set of `l`-digit numerals in
//! base `b-1` read as base-`b` numerals. The enumerator runs a digit
//! odometer over that alphabet and keeps the integer value updated
//! incrementally. Every level-`l` term is below `b^{-(l-1)}`, so the tail
//! past level `L` is below `(b-2) b ((b-1)/b)^L`, which closes the
//! bracket.
//!
//! Partial sums are accumulated as unreduced fractions with balanced
//! (binary-counter) merging; reducing multi-million-digit fractions buys
//! nothing for comparisons (equality and order on `Rational` are
//! value-based), so a gcd pass only runs on small results.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Results with denominators at most this many bits come out in lowest
/// terms; larger ones are returned unreduced (value-equal either way).
const REDUCE_BIT_LIMIT: u64 = 1 << 14;

/// An unreduced fraction; `den > 0` always.
#[derive(Clone, Debug)]
struct RawFrac {
    num: BigInt,
    den: BigInt,
}

impl RawFrac {
    fn zero() -> Self {
        Self { num: BigInt::zero(), den: BigInt::one() }
    }

    fn merge(a: &Self, b: &Self) -> Self {
        Self {
            num: &a.num * &b.den + &b.num * &a.den,
            den: &a.den * &b.den,
        }
    }

    fn into_rational(self) -> Rational {
        if self.den.bits() <= REDUCE_BIT_LIMIT {
            Rational::new(self.num, self.den)
        } else {
            Rational::new_raw(self.num, self.den)
        }
    }
}

/// Balanced accumulator: slot `k` holds a partial sum of `2^k` leaves, so
/// merges always combine operands of comparable size.
struct TreeSum {
    slots: Vec<Option<RawFrac>>,
}

impl TreeSum {
    fn new() -> Self {
        Self { slots: Vec::new() }
    }

    fn push(&mut self, mut frac: RawFrac) {
        for slot in self.slots.iter_mut() {
            match slot.take() {
                None => {
                    *slot = Some(frac);
                    return;
                }
                Some(held) => frac = RawFrac::merge(&held, &frac),
            }
        }
        self.slots.push(Some(frac));
    }

    fn total(&self) -> RawFrac {
        let mut acc = RawFrac::zero();
        for slot in self.slots.iter().flatten() {
            acc = RawFrac::merge(&acc, slot);
        }
        acc
    }
}

/// Admissible integers in `[b^{l-1}, b^l)`: `(b-2)(b-1)^{l-1}`.
pub fn level_count(b: u64, level: u32) -> u64 {
    if b < 3 {
        return 0;
    }
    (b - 2) * (b - 1).pow(level - 1)
}

/// Admissible integers in `[1, b^L)`: `(b-1)^L - 1`.
pub fn total_terms(b: u64, levels: u32) -> u128 {
    (b as u128 - 1)
        .checked_pow(levels)
        .map(|t| t - 1)
        .unwrap_or(u128::MAX)
}

/// Cumulative exact partial sums and per-level counts, one entry per
/// level `1..=levels`.
#[derive(Clone, Debug)]
pub struct LevelPartial {
    pub level: u32,
    /// Admissible integers with exactly `level` digits.
    pub count: u64,
    /// Exact `sum 1/n` over all admissible `n < b^level`.
    pub cumulative: Rational,
}

/// Exact `sum 1/n` over admissible `n` in `[1, b^levels)`. The term count
/// is guarded by `max_terms`.
pub fn enumerate_partial(b: u64, levels: u32, max_terms: u64) -> Result<Rational> {
    let (_, total) = enumerate(b, levels, max_terms)?;
    Ok(total.into_rational())
}

/// Like [`enumerate_partial`] but reporting each level as it completes.
pub fn enumerate_levels(b: u64, levels: u32, max_terms: u64) -> Result<Vec<LevelPartial>> {
    Ok(enumerate(b, levels, max_terms)?.0)
}

fn enumerate(b: u64, levels: u32, max_terms: u64) -> Result<(Vec<LevelPartial>, RawFrac)> {
    if b < 2 {
        return Err(Error::BaseTooSmall { base: b, min: 2 });
    }
    let needed = total_terms(b, levels);
    if needed > max_terms as u128 {
        return Err(Error::EnumerationLimitExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            limit: max_terms,
        });
    }

    let mut cumulative = RawFrac::zero();
    let mut report = Vec::with_capacity(levels as usize);
    for level in 1..=levels {
        let (count, level_sum) = sum_level(b, level);
        cumulative = RawFrac::merge(&cumulative, &level_sum);
        report.push(LevelPartial {
            level,
            count,
            cumulative: cumulative.clone().into_rational(),
        });
    }
    Ok((report, cumulative))
}

/// Odometer over digit vectors: leading digit `1..=b-2`, the others
/// `0..=b-2`. Returns the term count and the exact level sum.
fn sum_level(b: u64, level: u32) -> (u64, RawFrac) {
    if b < 3 {
        return (0, RawFrac::zero());
    }
    let len = level as usize;
    let top = b - 2; // largest admissible digit
    let places: Vec<u64> = (0..len).rev().map(|i| b.pow(i as u32)).collect();

    let mut digits = vec![0u64; len];
    digits[0] = 1;
    let mut n = places[0];
    let mut tree = TreeSum::new();
    let mut count = 0u64;
    'outer: loop {
        tree.push(RawFrac { num: BigInt::one(), den: BigInt::from(n) });
        count += 1;
        // increment, rightmost digit first
        let mut i = len - 1;
        loop {
            digits[i] += 1;
            n += places[i];
            if digits[i] <= top {
                break;
            }
            digits[i] = 0;
            n -= (top + 1) * places[i];
            if i == 0 {
                break 'outer;
            }
            i -= 1;
        }
    }
    debug_assert_eq!(count, level_count(b, level));
    (count, tree.total())
}

/// A rigorous enclosure of `K(b, b-1)` from a finite enumeration.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub base: u64,
    pub levels: u32,
    /// The exact partial sum; a strict lower bound of `K`.
    pub lower: Rational,
    /// `lower + (b-2) b ((b-1)/b)^levels`, an upper bound of `K`.
    pub upper: Rational,
}

impl Bracket {
    /// `upper - lower = (b-2) b ((b-1)/b)^levels`, in lowest terms.
    pub fn width(&self) -> Rational {
        bracket_width(self.base, self.levels)
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.lower <= *value && *value <= self.upper
    }
}

/// `(b-2) b ((b-1)/b)^levels`, the geometric tail majorant closing a
/// bracket, in lowest terms.
pub fn bracket_width(b: u64, levels: u32) -> Rational {
    Rational::new(
        BigInt::from(b - 2) * BigInt::from(b) * BigInt::from(b - 1).pow(levels),
        BigInt::from(b).pow(levels),
    )
}

/// Encloses `K(b, b-1)` between the exact partial sum to `levels` digit
/// positions and that sum plus the geometric tail majorant. Needs
/// `b >= 3`; at base 2 the sum is empty and the bracket degenerates.
pub fn bracket(b: u64, levels: u32, max_terms: u64) -> Result<Bracket> {
    if b < 3 {
        return Err(Error::BaseTooSmall { base: b, min: 3 });
    }
    let (_, lower) = enumerate(b, levels, max_terms)?;
    let width = bracket_width(b, levels);
    let upper = RawFrac {
        num: &lower.num * width.denom() + width.numer() * &lower.den,
        den: &lower.den * width.denom(),
    };
    Ok(Bracket {
        base: b,
        levels,
        lower: lower.into_rational(),
        upper: upper.into_rational(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    const LIMIT: u64 = 100_000_000;

    #[test]
    fn base_two_has_no_terms() {
        assert_eq!(enumerate_partial(2, 10, LIMIT).unwrap(), rat_int(0));
    }

    #[test]
    fn first_levels_of_small_bases() {
        // below 3 only n = 1 avoids the digit 2
        assert_eq!(enumerate_partial(3, 1, LIMIT).unwrap(), rat_int(1));
        // H_8
        assert_eq!(enumerate_partial(10, 1, LIMIT).unwrap(), rat(761, 280));
    }

    #[test]
    fn level_two_by_hand() {
        // base 3, two digits: 10, 11 in base 3 are 3 and 4
        assert_eq!(enumerate_partial(3, 2, LIMIT).unwrap(), rat_int(1) + rat(1, 3) + rat(1, 4));
    }

    #[test]
    fn counts_match_closed_form() {
        for b in [3u64, 4, 5, 10] {
            let report = enumerate_levels(b, 5, LIMIT).unwrap();
            for entry in report {
                assert_eq!(entry.count, level_count(b, entry.level), "b={b} l={}", entry.level);
            }
        }
    }

    #[test]
    fn lower_bounds_are_monotone() {
        let report = enumerate_levels(7, 6, LIMIT).unwrap();
        for pair in report.windows(2) {
            assert!(pair[0].cumulative <= pair[1].cumulative);
        }
    }

    #[test]
    fn bracket_small_case() {
        let br = bracket(3, 1, LIMIT).unwrap();
        assert_eq!(br.lower, rat_int(1));
        assert_eq!(br.upper, rat_int(3));
        assert_eq!(br.width(), rat_int(2));
    }

    #[test]
    fn widths_shrink_geometrically() {
        for b in [3u64, 10] {
            for l in 1..=5u32 {
                let ratio = bracket_width(b, l + 1) / bracket_width(b, l);
                assert_eq!(ratio, rat(b as i64 - 1, b as i64));
            }
        }
    }

    #[test]
    fn upper_matches_lower_plus_width() {
        let br = bracket(5, 3, LIMIT).unwrap();
        assert_eq!(br.upper.clone() - br.lower.clone(), br.width());
        assert!(br.contains(&rat(77757, 10000))); // K(5,4) is about 7.7757
    }

    #[test]
    fn guard_trips() {
        let err = enumerate_partial(10, 12, 1_000_000).unwrap_err();
        assert!(matches!(err, Error::EnumerationLimitExceeded { .. }));
    }

    #[test]
    fn bracket_needs_base_three() {
        assert_eq!(bracket(2, 3, LIMIT).unwrap_err(), Error::BaseTooSmall { base: 2, min: 3 });
    }
}
