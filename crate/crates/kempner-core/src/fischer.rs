//! Fischer's series for base 10:
//! `K(10, 9) = 10 log 10 - sum_{m>=1} 10^{-m-1} beta_m zeta(m+1)`,
//! where the rational coefficients satisfy, for every `m >= 1`,
//!
//! `sum_{k=1}^{m} C(m,k) (10^{m-k+1} - 10^k + 1) beta_{m-k}
//!     = 10 (11^m - 10^m)`.
//!
//! The instance of order `m` pins `beta_{m-1}` (its `k = 1` coefficient
//! `C(m,1)(10^m - 9)` never vanishes), so the table is built by solving
//! instance `m+1` for `beta_m`; the `m = 1` instance forces `beta_0 = 10`.
//! This is a computation route fully independent of the moment recurrence,
//! yet `beta_m` equals `v_m` at base 10 exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::asymptotics::{ln_int, zeta_int};
use crate::decimal::Decimal;
use crate::rational::Rational;
use crate::util::{next_pascal_row, pow10};

#[derive(Clone, Debug)]
pub struct FischerTable {
    /// `P_m`, numerator of `beta_m` over the structural denominator.
    numerators: Vec<BigInt>,
    /// `E_m = prod_{i=1}^{m} (i+1)(10^{i+1} - 9)`; `E_0 = 1`.
    denominators: Vec<BigInt>,
}

impl FischerTable {
    pub fn max_index(&self) -> u32 {
        self.numerators.len() as u32 - 1
    }

    /// `beta_m` in lowest terms.
    pub fn value(&self, m: u32) -> Rational {
        Rational::new(
            self.numerators[m as usize].clone(),
            self.denominators[m as usize].clone(),
        )
    }

    /// All of `beta_0 ..= beta_M` in lowest terms.
    pub fn values(&self) -> Vec<Rational> {
        (0..=self.max_index()).map(|m| self.value(m)).collect()
    }

    pub(crate) fn raw(&self, m: u32) -> (&BigInt, &BigInt) {
        (&self.numerators[m as usize], &self.denominators[m as usize])
    }

    /// Whether `beta_m` equals the given unreduced `num/den` pair, by
    /// cross multiplication.
    pub fn equals_ratio(&self, m: u32, num: &BigInt, den: &BigInt) -> bool {
        let (p, e) = self.raw(m);
        p * den == num * e
    }
}

/// Builds `beta_0 ..= beta_M`. The recurrence is cleared of fractions the
/// same way as the moment table, so construction is pure integer work.
pub fn fischer_betas(max_index: u32) -> FischerTable {
    let ten = BigInt::from(10u32);
    let eleven = BigInt::from(11u32);

    let mut numerators = vec![ten.clone()];
    let mut denominators = vec![BigInt::one()];
    // pivots[i-1] = (i+1)(10^{i+1} - 9), the coefficient cleared at step i
    let mut pivots: Vec<BigInt> = Vec::with_capacity(max_index as usize);

    let mut row = vec![BigInt::one(), BigInt::one()]; // Pascal row of order m+1
    let mut ten_pow = ten.clone(); // 10^{m+1} at loop entry is 10^1
    let mut eleven_pow = eleven.clone();
    for m in 1..=max_index as usize {
        next_pascal_row(&mut row);
        ten_pow *= &ten;
        eleven_pow *= &eleven;

        // solve instance m+1 for beta_m:
        //   C(m+1,1)(10^{m+1} - 9) beta_m
        //     = 10 (11^{m+1} - 10^{m+1})
        //       - sum_{k=2}^{m+1} C(m+1,k)(10^{m+2-k} - 10^k + 1) beta_{m+1-k}
        let mut acc = &ten * (&eleven_pow - &ten_pow) * &denominators[m - 1];
        let mut ratio = BigInt::one(); // E_{m-1} / E_{m+1-k}
        let mut low_pow = &ten_pow / &ten; // 10^{m+2-k} at k = 2
        let mut high_pow = BigInt::from(100u32); // 10^k at k = 2
        for k in 2..=m + 1 {
            let coeff = &low_pow - &high_pow + 1u32;
            acc -= &row[k] * coeff * &numerators[m + 1 - k] * &ratio;
            if k <= m {
                ratio *= &pivots[m - k];
                low_pow /= &ten;
                high_pow *= &ten;
            }
        }
        let pivot = BigInt::from(m as u32 + 1) * (&ten_pow - 9u32);
        let den = &denominators[m - 1] * &pivot;
        assert!(
            acc.is_positive() && acc <= &den * &ten,
            "beta_{m} left (0, 10]"
        );
        pivots.push(pivot);
        numerators.push(acc);
        denominators.push(den);
    }

    FischerTable { numerators, denominators }
}

/// Residual of the order-`m` recurrence instance with the computed betas
/// substituted; zero for every `m` up to the table size.
pub fn recurrence_residual(table: &FischerTable, m: u32) -> Rational {
    assert!(m >= 1 && m <= table.max_index() + 1);
    let ten = BigInt::from(10u32);
    let m = m as usize;
    let row = crate::util::pascal_row(m as u32);
    let (_, e_prev) = table.raw(m as u32 - 1);

    let mut acc = BigInt::zero();
    let mut ratio = BigInt::one(); // E_{m-1} / E_{m-k}
    let mut low_pow = ten.pow(m as u32); // 10^{m-k+1} at k = 1
    let mut high_pow = ten.clone(); // 10^k at k = 1
    for k in 1..=m {
        let coeff = &low_pow - &high_pow + 1u32;
        let (p, _) = table.raw((m - k) as u32);
        acc += &row[k] * coeff * p * &ratio;
        if k < m {
            // denominators[m-k] / denominators[m-k-1] is the pivot of step m-k
            let (_, e_cur) = table.raw((m - k) as u32);
            let (_, e_next) = table.raw((m - k - 1) as u32);
            ratio *= e_cur / e_next;
            low_pow /= &ten;
            high_pow *= &ten;
        }
    }
    let rhs = &ten * (BigInt::from(11u32).pow(m as u32) - ten.pow(m as u32)) * e_prev;
    Rational::new(acc - rhs, e_prev.clone())
}

/// `K(10, 9)` through Fischer's series, accurate to `10^-prec`. The tail
/// past `M` is below `sum_{m>M} 2 * 10^-m` (using `0 < beta_m <= 10` and
/// `zeta(m+1) <= 2`), so `M = prec + 2` suffices and is checked exactly.
pub fn fischer_sum(prec: u32) -> Decimal {
    let terms = fischer_terms(prec);
    let scale = prec + 8;
    let table = fischer_betas(terms);
    let mut correction = Decimal::zero(scale);
    for m in 1..=terms {
        let z = zeta_int(m + 1, scale).expect("s >= 2");
        let (p, e) = table.raw(m);
        // beta_m * zeta(m+1) / 10^{m+1}
        let num = p * z.mant();
        let den = e * pow10(m + 1 + scale);
        correction = correction.add(&Decimal::from_ratio(&num, &den, scale));
    }
    let lead = ln_int(10, scale).expect("positive").mul_int(&BigInt::from(10u32));
    lead.sub(&correction).with_scale(prec)
}

/// Number of series terms needed for `prec` digits.
pub fn fischer_terms(prec: u32) -> u32 {
    let m = prec + 2;
    // tail bound (20/9) 10^{-(M+1)} <= 10^{-(prec+2)}, checked exactly
    debug_assert!(
        Rational::new(BigInt::from(20), BigInt::from(9) * pow10(m + 1))
            <= Rational::new(BigInt::one(), pow10(prec + 2))
    );
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::moments::compute_moments;
    use crate::rational::{rat, rat_int};

    #[test]
    fn beta_zero_and_one() {
        let t = fischer_betas(1);
        assert_eq!(t.value(0), rat_int(10));
        // m = 2 instance by hand: 2 * 91 * beta_1 - 890 = 210
        assert_eq!(t.value(1), rat(550, 91));
    }

    #[test]
    fn residuals_vanish() {
        let t = fischer_betas(60);
        for m in 1..=60 {
            assert_eq!(recurrence_residual(&t, m), rat_int(0), "m={m}");
        }
    }

    #[test]
    fn betas_equal_base_ten_moments() {
        let betas = fischer_betas(60);
        let moments = compute_moments(10, 60).unwrap();
        for m in 0..=60 {
            let (num, den) = moments.raw(m);
            assert!(betas.equals_ratio(m, num, den), "m={m}");
        }
    }

    #[test]
    fn betas_stay_in_range() {
        let t = fischer_betas(40);
        for m in 0..=40 {
            let b = t.value(m);
            assert!(b > rat_int(0) && b <= rat_int(10), "m={m}");
        }
    }

    #[test]
    fn nine_digit_sum() {
        assert_eq!(fischer_sum(9).to_string(), "22.920676619");
    }

    #[test]
    fn term_count_grows_linearly() {
        assert_eq!(fischer_terms(9), 11);
        assert_eq!(fischer_terms(30), 32);
    }
}
