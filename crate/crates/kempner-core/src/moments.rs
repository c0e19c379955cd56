//! Exact rational moments `v_m` of a base, via the recurrence
//! `(b^{m+1} - b + 1) v_m = b^{m+1} + sum_{j=1}^{m} C(m,j) gamma_j v_{m-j}`
//! with `v_0 = b`.
//!
//! Internally the recurrence is cleared of fractions: `v_m = N_m / D_m`
//! with the structural denominator `D_m = prod_{k<=m} (b^{k+1} - b + 1)`,
//! so the whole table is built in big integers and no gcd runs until a
//! reduced value is actually requested. At base 2 every `v_m` equals 2.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::powersums::power_sums_upto;
use crate::rational::Rational;
use crate::util::next_pascal_row;

#[derive(Clone, Debug)]
pub struct MomentTable {
    base: u64,
    /// `N_m`, numerator of `v_m` over the structural denominator.
    numerators: Vec<BigInt>,
    /// `D_m = prod_{k=1}^{m} (b^{k+1} - b + 1)`; `D_0 = 1`.
    denominators: Vec<BigInt>,
}

impl MomentTable {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Highest order `M` held by the table.
    pub fn max_order(&self) -> u32 {
        self.numerators.len() as u32 - 1
    }

    /// `v_m` in lowest terms.
    pub fn value(&self, m: u32) -> Rational {
        Rational::new(
            self.numerators[m as usize].clone(),
            self.denominators[m as usize].clone(),
        )
    }

    /// `v_m` without reduction. Value-equal to [`Self::value`]; cheap, but
    /// the representation is the structural one.
    pub fn value_raw(&self, m: u32) -> Rational {
        Rational::new_raw(
            self.numerators[m as usize].clone(),
            self.denominators[m as usize].clone(),
        )
    }

    pub(crate) fn raw(&self, m: u32) -> (&BigInt, &BigInt) {
        (&self.numerators[m as usize], &self.denominators[m as usize])
    }

    /// All of `v_0 ..= v_M` in lowest terms.
    pub fn values(&self) -> Vec<Rational> {
        (0..=self.max_order()).map(|m| self.value(m)).collect()
    }
}

/// Builds `v_0 ..= v_M` for base `b`. Fails loudly if any moment leaves
/// `(0, b]`; the truncation bounds in the summation kernel depend on that
/// interval.
pub fn compute_moments(b: u64, max_order: u32) -> Result<MomentTable> {
    if b < 2 {
        return Err(Error::BaseTooSmall { base: b, min: 2 });
    }
    let gammas = power_sums_upto(b, max_order);
    let big_b = BigInt::from(b);

    let mut numerators = vec![big_b.clone()];
    let mut denominators = vec![BigInt::one()];
    // factors[k-1] = b^{k+1} - b + 1
    let mut factors: Vec<BigInt> = Vec::with_capacity(max_order as usize);

    let mut row = vec![BigInt::one()]; // Pascal row of order m
    let mut b_pow = big_b.clone(); // b^m at loop entry is b^1
    for m in 1..=max_order as usize {
        next_pascal_row(&mut row);
        b_pow *= &big_b;
        let factor = &b_pow - &big_b + 1u32;

        // N_m = b^{m+1} D_{m-1} + sum_j C(m,j) gamma_j N_{m-j} (D_{m-1}/D_{m-j})
        let mut acc = &b_pow * &denominators[m - 1];
        let mut ratio = BigInt::one(); // D_{m-1} / D_{m-j}
        for j in 1..=m {
            acc += &row[j] * &gammas[j] * &numerators[m - j] * &ratio;
            if j < m {
                ratio *= &factors[m - j - 1];
            }
        }
        let den = &denominators[m - 1] * &factor;
        if !acc.is_positive() || acc > &den * &big_b {
            return Err(Error::MomentBoundViolated { base: b, m: m as u32 });
        }
        factors.push(factor);
        numerators.push(acc);
        denominators.push(den);
    }

    Ok(MomentTable { base: b, numerators, denominators })
}

/// The gap `z` between `v_m` and its cubic model
/// `b/(m+1) + 1 + c + c^2/2 + (m-2) c^3 / 4` at `c = 1/b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub base: u64,
    pub m: u32,
    pub z: Rational,
}

/// Exact deviation for a single `(b, m)`, `m >= 4`.
pub fn deviation(b: u64, m: u32) -> Result<Deviation> {
    let table = compute_moments(b, m)?;
    deviation_from_table(&table, m)
}

/// Same, reusing an already-built table.
pub fn deviation_from_table(table: &MomentTable, m: u32) -> Result<Deviation> {
    if m < 4 {
        return Err(Error::DeviationOrderTooSmall { m });
    }
    let (num, den) = deviation_raw(table, m);
    Ok(Deviation { base: table.base(), m, z: Rational::new(num, den) })
}

/// `z` as an unreduced (numerator, positive denominator) pair.
fn deviation_raw(table: &MomentTable, m: u32) -> (BigInt, BigInt) {
    let b = BigInt::from(table.base());
    let m1 = BigInt::from(m + 1);
    let b2 = &b * &b;
    let b3 = &b2 * &b;
    // model = (4 b^4 + 4(m+1) b^3 + 4(m+1) b^2 + 2(m+1) b + (m+1)(m-2)) / (4(m+1) b^3)
    let q = BigInt::from(4u32) * &m1 * &b3;
    let r = BigInt::from(4u32) * &b2 * &b2
        + BigInt::from(4u32) * &m1 * &b3
        + BigInt::from(4u32) * &m1 * &b2
        + BigInt::from(2u32) * &m1 * &b
        + &m1 * BigInt::from(m - 2);
    let (n_m, d_m) = table.raw(m);
    (&q * n_m - &r * d_m, q * d_m)
}

/// Result of maximizing `|z| b^4 / m^2` over a grid.
#[derive(Clone, Debug)]
pub struct SweepResult {
    pub max_ratio: Rational,
    pub max_base: u64,
    pub max_order: u32,
}

/// Exhaustive exact sweep of `|z_m| b^4 / m^2` over
/// `base_lo..=base_hi x order_lo..=order_hi` (orders start at 4). The
/// maximum is the empirical bound for the cubic model's quartic remainder.
pub fn deviation_sweep(
    base_lo: u64,
    base_hi: u64,
    order_lo: u32,
    order_hi: u32,
) -> Result<SweepResult> {
    if order_lo < 4 {
        return Err(Error::DeviationOrderTooSmall { m: order_lo });
    }
    if base_lo < 2 {
        return Err(Error::BaseTooSmall { base: base_lo, min: 2 });
    }
    let mut best_num = BigInt::zero();
    let mut best_den = BigInt::one();
    let mut best_at = (base_lo, order_lo);
    for b in base_lo..=base_hi {
        let table = compute_moments(b, order_hi)?;
        let b4 = BigInt::from(b).pow(4);
        for m in order_lo..=order_hi {
            let (num, den) = deviation_raw(&table, m);
            let num = num.abs() * &b4;
            let den = den * BigInt::from(m) * BigInt::from(m);
            if &num * &best_den > &best_num * &den {
                best_num = num;
                best_den = den;
                best_at = (b, m);
            }
        }
    }
    Ok(SweepResult {
        max_ratio: Rational::new(best_num, best_den),
        max_base: best_at.0,
        max_order: best_at.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersums::power_sum;
    use crate::rational::{rat, rat_int};

    /// Literal transcription of the recurrence in plain rationals, used as
    /// an independent check on the integerized table construction.
    fn reference_moments(b: u64, max_order: u32) -> Vec<Rational> {
        let mut values = vec![Rational::from_integer(BigInt::from(b))];
        for m in 1..=max_order {
            let row = crate::util::pascal_row(m);
            let b_pow = Rational::from_integer(BigInt::from(b).pow(m + 1));
            let mut rhs = b_pow.clone();
            for j in 1..=m {
                rhs += Rational::from_integer(row[j as usize].clone())
                    * power_sum(b, j).unwrap()
                    * &values[(m - j) as usize];
            }
            let lhs_factor = b_pow - rat_int(b as i64) + rat_int(1);
            values.push(rhs / lhs_factor);
        }
        values
    }

    #[test]
    fn order_zero_is_the_base() {
        let t = compute_moments(10, 0).unwrap();
        assert_eq!(t.values(), vec![rat_int(10)]);
    }

    #[test]
    fn base_two_moments_are_all_two() {
        let t = compute_moments(2, 5).unwrap();
        assert_eq!(t.values(), vec![rat_int(2); 6]);
    }

    #[test]
    fn first_moment_base_ten() {
        let t = compute_moments(10, 1).unwrap();
        assert_eq!(t.value(1), rat(550, 91));
    }

    #[test]
    fn matches_reference_recurrence() {
        for b in [2u64, 3, 10, 97] {
            let t = compute_moments(b, 12).unwrap();
            let reference = reference_moments(b, 12);
            for m in 0..=12u32 {
                assert_eq!(t.value(m), reference[m as usize], "b={b} m={m}");
                assert_eq!(t.value_raw(m), reference[m as usize], "raw b={b} m={m}");
            }
        }
    }

    fn inv(b: u64) -> Rational {
        Rational::new(BigInt::one(), BigInt::from(b))
    }

    #[test]
    fn closed_form_v1() {
        // v_1 = b/2 + 1 + (c/2)(1-2c)/(1-c+c^2)
        for b in [3u64, 10, 100] {
            let c = inv(b);
            let expected = rat_int(b as i64) / rat_int(2)
                + rat_int(1)
                + (&c / rat_int(2)) * (rat_int(1) - rat_int(2) * &c)
                    / (rat_int(1) - &c + &c * &c);
            assert_eq!(compute_moments(b, 1).unwrap().value(1), expected, "b={b}");
        }
    }

    #[test]
    fn closed_form_v2() {
        // v_2 = b/3 + 1 + (c/6)(6-5c-7c^2+10c^3-6c^4)/((1-c+c^2)(1-c^2+c^3))
        for b in [3u64, 10, 100] {
            let c = inv(b);
            let c2 = &c * &c;
            let c3 = &c2 * &c;
            let c4 = &c3 * &c;
            let numer = rat_int(6) - rat_int(5) * &c - rat_int(7) * &c2 + rat_int(10) * &c3
                - rat_int(6) * &c4;
            let denom = (rat_int(1) - &c + &c2) * (rat_int(1) - &c2 + &c3);
            let expected =
                rat_int(b as i64) / rat_int(3) + rat_int(1) + (&c / rat_int(6)) * numer / denom;
            assert_eq!(compute_moments(b, 2).unwrap().value(2), expected, "b={b}");
        }
    }

    #[test]
    fn deviation_base_two_order_five() {
        // v_5(2) = 2, so z = 2 - 2/6 - 1 - 1/2 - 1/8 - 3/32 = -5/96.
        let d = deviation(2, 5).unwrap();
        assert_eq!(d.z, rat(-5, 96));
    }

    #[test]
    fn deviation_base_ten_order_four() {
        let v4 = reference_moments(10, 4)[4].clone();
        let expected = v4 - rat_int(2) - rat_int(1) - rat(1, 10) - rat(1, 200) - rat(1, 2000);
        let d = deviation(10, 4).unwrap();
        assert_eq!(d.z, expected);
        assert!(d.z.abs() < rat(1, 500), "z = {}", d.z);
    }

    #[test]
    fn deviation_rejects_low_orders() {
        assert_eq!(deviation(10, 3), Err(Error::DeviationOrderTooSmall { m: 3 }));
    }

    #[test]
    fn sweep_matches_direct_maximum() {
        let sweep = deviation_sweep(2, 8, 4, 10).unwrap();
        let mut best = rat_int(0);
        for b in 2u64..=8 {
            for m in 4u32..=10 {
                let z = deviation(b, m).unwrap().z;
                let ratio = z.abs() * rat_int(b as i64).pow(4) / rat_int((m * m) as i64);
                if ratio > best {
                    best = ratio;
                }
            }
        }
        assert_eq!(sweep.max_ratio, best);
    }
}
