//! The reference route: summing
//! `K(b, b-1) = sum_{d=1}^{b-2} sum_{m>=0} v_m / (d+1)^{m+1}`
//! in fixed point with a certified truncation bound. (The `m = 0` term is
//! `b/(d+1)`; dropping it is a classic off-by-one that loses the entire
//! harmonic leading part.)
//!
//! Truncation uses the asserted moment bound `0 < v_m <= b`: the tail past
//! order `M` is below `sum_d b (d+1)^{-M-1} / d`, which is certified by an
//! integer upper estimate before any term is summed. The working scale
//! carries guard digits for the target precision, half-even rounding, and
//! the `~b*M` additions of the kernel.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::moments::{compute_moments, MomentTable};
use crate::util::{ceil_log10, pow10};

/// Ceiling on the fixed-point working scale, in decimal digits.
pub const MAX_WORKING_SCALE: u32 = 10_000;

#[derive(Clone, Debug)]
pub struct KempnerResult {
    pub base: u64,
    /// Requested digits after the decimal point.
    pub precision: u32,
    /// The sum, rounded half-even to `precision` digits.
    pub value: Decimal,
    /// Truncation order `M` of the inner series.
    pub order: u32,
    /// Certified upper bound on the discarded tail; at most `10^-(P+2)`.
    pub tail_bound: Decimal,
}

/// Smallest `M` whose certified tail bound drops below `10^-(P+2)`.
pub fn truncation_order(b: u64, prec: u32) -> u32 {
    order_and_tail(b, prec).0
}

/// Scans `M` upward, checking
/// `sum_{d=1}^{b-2} b / (d (d+1)^{M+1}) <= 10^-(P+2)` with every term
/// rounded up, so a pass is a proof.
fn order_and_tail(b: u64, prec: u32) -> (u32, Decimal) {
    if b == 2 {
        return (0, Decimal::zero(prec + 2));
    }
    let scale = prec + 2 + ceil_log10(b).max(6);
    let budget = pow10(scale - (prec + 2));
    let big_b = BigInt::from(b);
    // powers[d-1] = (d+1)^(M+1), advanced by one factor per candidate M
    let mut powers: Vec<BigInt> = (1..=b - 2).map(|d| BigInt::from(d + 1)).collect();
    let mut m = 0u32;
    loop {
        m += 1;
        for (d, p) in powers.iter_mut().enumerate() {
            *p *= BigInt::from(d as u64 + 2);
        }
        let mut total = BigInt::from(0);
        for (d, p) in powers.iter().enumerate() {
            let den = BigInt::from(d as u64 + 1) * p;
            total += crate::decimal::div_ceil(&(&big_b * pow10(scale)), &den);
            if total > budget {
                break;
            }
        }
        if total <= budget {
            return (m, Decimal::from_raw(total, scale));
        }
    }
}

/// `sum_{m=0}^{M} v_m / (d+1)^{m+1}` in fixed point, smallest terms first,
/// accurate to one ulp of `scale` (the accumulation runs at a wider
/// internal scale and is rounded once).
pub fn inner_sum_fixed(table: &MomentTable, d: u64, scale: u32) -> Decimal {
    let order = table.max_order();
    let acc_scale = scale + ceil_log10(order as u64 + 2) + 1;
    let mut acc = Decimal::zero(acc_scale);
    let base = BigInt::from(d + 1);
    let mut power = base.pow(order + 1);
    for m in (0..=order).rev() {
        let (num, den) = table.raw(m);
        acc = acc.add(&Decimal::from_ratio(num, &(den * &power), acc_scale));
        power /= &base;
    }
    acc.with_scale(scale)
}

/// `K(b, b-1)` to `prec` fractional digits, with `|value - K| <= 10^-prec`
/// and the discarded tail certified below `10^-(prec+2)`.
pub fn kempner_sum(b: u64, prec: u32) -> Result<KempnerResult> {
    if b < 2 {
        return Err(Error::BaseTooSmall { base: b, min: 2 });
    }
    if b == 2 {
        // no admissible integers at all: the d-sum is empty
        return Ok(KempnerResult {
            base: 2,
            precision: prec,
            value: Decimal::zero(prec),
            order: 0,
            tail_bound: Decimal::zero(prec + 2),
        });
    }
    let (order, tail_bound) = order_and_tail(b, prec);
    let work = prec as u64 + 4 + ceil_log10(b * order as u64) as u64 + 2;
    if work > MAX_WORKING_SCALE as u64 {
        return Err(Error::PrecisionOverflow { scale: work, limit: MAX_WORKING_SCALE as u64 });
    }
    let work = work as u32;
    let table = compute_moments(b, order)?;
    let mut total = Decimal::zero(work);
    for d in 1..=b - 2 {
        total = total.add(&inner_sum_fixed(&table, d, work));
    }
    Ok(KempnerResult {
        base: b,
        precision: prec,
        value: total.with_scale(prec),
        order,
        tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use num_traits::One;

    use crate::decimal::within;
    use crate::rational::Rational;

    #[test]
    fn base_two_is_exactly_zero() {
        for prec in [1u32, 5, 20] {
            let r = kempner_sum(2, prec).unwrap();
            assert!(r.value.is_zero());
            assert_eq!(r.order, 0);
            assert_eq!(r.value.to_string(), format!("0.{}", "0".repeat(prec as usize)));
        }
    }

    #[test]
    fn base_ten_reference_digits() {
        let r = kempner_sum(10, 9).unwrap();
        assert_eq!(r.value.to_string(), "22.920676619");
        assert_eq!(r.base, 10);
        assert_eq!(r.precision, 9);
    }

    #[test]
    fn tail_bound_is_certified() {
        for (b, prec) in [(3u64, 8u32), (10, 9), (10, 30), (50, 12)] {
            let r = kempner_sum(b, prec).unwrap();
            let limit = Decimal::from_ratio(&BigInt::one(), &pow10(prec + 2), prec + 4);
            assert!(
                r.tail_bound.cmp_value(&limit) != core::cmp::Ordering::Greater,
                "b={b} prec={prec}"
            );
        }
    }

    #[test]
    fn truncation_order_is_minimal_and_monotone() {
        let mut last = 0;
        for prec in 1u32..=16 {
            let m = truncation_order(10, prec);
            assert!(m >= last, "prec={prec}");
            last = m;
        }
        // ballpark for the flagship case: about (P+2)/log10(2) + log2(b)
        let m = truncation_order(10, 9);
        assert!((35..=50).contains(&m), "M = {m}");
        assert_eq!(truncation_order(2, 9), 0);
    }

    #[test]
    fn precision_coherence() {
        for b in [3u64, 10, 50] {
            let lo = kempner_sum(b, 12).unwrap().value;
            let hi = kempner_sum(b, 22).unwrap().value;
            assert!(within(&lo, &hi, &Decimal::one_ulp(12)), "b={b}");
        }
    }

    #[test]
    fn inner_sum_matches_exact_rationals_to_one_ulp() {
        let scale = 40u32;
        let table = compute_moments(10, truncation_order(10, 30)).unwrap();
        for d in [1u64, 4, 8] {
            let fixed = inner_sum_fixed(&table, d, scale);
            let mut exact = Rational::from_integer(0.into());
            let base = Rational::from_integer(BigInt::from(d + 1));
            for m in 0..=table.max_order() {
                exact += table.value_raw(m) / base.pow(m as i32 + 1);
            }
            let rounded = Decimal::from_rational(&exact, scale);
            assert!(within(&fixed, &rounded, &Decimal::one_ulp(scale)), "d={d}");
        }
    }
}
