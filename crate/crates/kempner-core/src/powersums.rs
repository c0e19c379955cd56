//! Power sums `gamma_j = sum_{d=1}^{b-1} d^j` and their scaled polynomial
//! form.
//!
//! With `c = 1/b`, the quantity `c^{j+1} gamma_j` is a polynomial in `c`
//! whose coefficients come from the Bernoulli numbers
//! (`C(j,p) B_p / (j+1-p)` for `p = 0..=j`, with `B_1 = -1/2`). That form
//! holds for `j >= 1` only; `gamma_0 = b - 1` is special-cased by callers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, rat_int, Rational};
use crate::util::{next_pascal_row, pascal_row};

/// Bernoulli numbers `B_0 ..= B_max`, computed once by the convolution
/// `sum_{p=0}^{j} C(j+1, p) B_p = 0` and then shared read-only.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(max_index: u32) -> Self {
        let mut values = Vec::with_capacity(max_index as usize + 1);
        values.push(rat_int(1));
        // row holds C(j+1, 0) ..= C(j+1, j+1)
        let mut row = vec![BigInt::one(), BigInt::one()];
        for j in 1..=max_index as usize {
            next_pascal_row(&mut row);
            let mut acc = rat_int(0);
            for (p, coeff) in row.iter().take(j).enumerate() {
                acc += Rational::from_integer(coeff.clone()) * &values[p];
            }
            values.push(-acc / Rational::from_integer(row[j].clone()));
        }
        Self { values }
    }

    pub fn get(&self, p: u32) -> &Rational {
        &self.values[p as usize]
    }

    pub fn max_index(&self) -> u32 {
        self.values.len() as u32 - 1
    }
}

/// A power sum `gamma_j` at an explicit base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum {
    pub base: u64,
    pub exponent: u32,
    pub value: Rational,
}

/// `gamma_j = sum_{d=1}^{b-1} d^j`, exact. Picks direct summation or the
/// Bernoulli closed form depending on the work `b * j` would take; the two
/// paths agree exactly.
pub fn power_sum(b: u64, j: u32) -> Result<Rational> {
    check_base(b, 2)?;
    if j == 0 {
        return Ok(rat_u64_int(b - 1));
    }
    if (b as u128) * (j as u128) > 1_000_000 {
        power_sum_closed_form(b, j)
    } else {
        power_sum_direct(b, j)
    }
}

/// Direct summation of `d^j` over `d = 1..b`.
pub fn power_sum_direct(b: u64, j: u32) -> Result<Rational> {
    check_base(b, 2)?;
    let mut acc = BigInt::zero();
    for d in 1..b {
        acc += BigInt::from(d).pow(j);
    }
    Ok(Rational::from_integer(acc))
}

/// `gamma_j` through the Bernoulli closed form
/// `sum_p C(j,p) B_p b^{j+1-p} / (j+1-p)`; requires `j >= 1`.
pub fn power_sum_closed_form(b: u64, j: u32) -> Result<Rational> {
    check_base(b, 2)?;
    if j == 0 {
        return Err(Error::ScaledPowerSumAtZero);
    }
    let poly = scaled_power_sum_poly(j)?;
    let base = BigInt::from(b);
    // b^{j+1} * poly(1/b) expanded over the common power of b
    let mut acc = BigInt::zero();
    let mut lcm_den = BigInt::one();
    for coeff in &poly.coeffs {
        lcm_den = num_integer::lcm(lcm_den, coeff.denom().clone());
    }
    for (p, coeff) in poly.coeffs.iter().enumerate() {
        let scaled = coeff.numer() * (&lcm_den / coeff.denom());
        acc += scaled * base.pow(j + 1 - p as u32);
    }
    let value = Rational::new(acc, lcm_den);
    debug_assert!(value.is_integer());
    Ok(value)
}

/// All of `gamma_0 ..= gamma_jmax` as integers, by one pass of direct
/// summation (shared by the moment recurrence).
pub(crate) fn power_sums_upto(b: u64, jmax: u32) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); jmax as usize + 1];
    for d in 1..b {
        let d = BigInt::from(d);
        let mut p = BigInt::one();
        for slot in acc.iter_mut() {
            *slot += &p;
            p *= &d;
        }
    }
    acc
}

/// The polynomial `c^{j+1} gamma_j` in the variable `c = 1/b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPolynomial {
    pub j: u32,
    /// Coefficient of `c^p` at index `p`; length `j + 1`.
    pub coeffs: Vec<Rational>,
}

impl ScaledPolynomial {
    pub fn eval(&self, c: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for coeff in self.coeffs.iter().rev() {
            acc = acc * c + coeff;
        }
        acc
    }
}

/// Coefficients `C(j,p) B_p / (j+1-p)` for `p = 0..=j`. Only defined for
/// `j >= 1`.
pub fn scaled_power_sum_poly(j: u32) -> Result<ScaledPolynomial> {
    let table = BernoulliTable::new(j);
    scaled_power_sum_poly_with(&table, j)
}

/// Same as [`scaled_power_sum_poly`] but reusing a shared Bernoulli table.
pub fn scaled_power_sum_poly_with(table: &BernoulliTable, j: u32) -> Result<ScaledPolynomial> {
    if j == 0 {
        return Err(Error::ScaledPowerSumAtZero);
    }
    debug_assert!(table.max_index() >= j);
    let row = pascal_row(j);
    let coeffs = (0..=j)
        .map(|p| {
            Rational::from_integer(row[p as usize].clone()) * table.get(p)
                / rat_int((j + 1 - p) as i64)
        })
        .collect();
    Ok(ScaledPolynomial { j, coeffs })
}

/// Checks the telescoping identity
/// `c^{m+1} sum_{j=0}^{m} C(m,j) gamma_j / (m+1-j) = (1 - c^{m+1})/(m+1)`
/// at `c = 1/b`, exactly. Holds for every integer `b >= 2`.
pub fn check_identity_8(b: u64, m: u32) -> Result<bool> {
    check_base(b, 2)?;
    let row = pascal_row(m);
    let mut lhs = rat_int(0);
    for j in 0..=m {
        let gamma = power_sum(b, j)?;
        lhs += Rational::from_integer(row[j as usize].clone()) * gamma
            / rat_int((m + 1 - j) as i64);
    }
    let bpow = BigInt::from(b).pow(m + 1);
    lhs /= Rational::from_integer(bpow.clone());
    let rhs = (rat_int(1) - Rational::new(BigInt::one(), bpow)) / rat_int((m + 1) as i64);
    Ok(lhs == rhs)
}

/// Checks the two-sided envelope
/// `1/(j+1) - c/2 <= c^{j+1} gamma_j <= 1/(j+1) - c/2 + j c^2 / 12`
/// at `c = 1/b`. The bounds are only claimed at integer bases, never for
/// real `c`.
pub fn check_power_sum_envelope(b: u64, j: u32) -> Result<bool> {
    check_base(b, 2)?;
    if j == 0 {
        return Err(Error::ScaledPowerSumAtZero);
    }
    let c = Rational::new(BigInt::one(), BigInt::from(b));
    let value = power_sum(b, j)? * c.pow((j + 1) as i32);
    let low = rat(1, (j as i64) + 1) - &c / rat_int(2);
    let high = &low + rat_int(j as i64) * &c * &c / rat_int(12);
    Ok(low <= value && value <= high)
}

fn check_base(b: u64, min: u64) -> Result<()> {
    if b < min {
        return Err(Error::BaseTooSmall { base: b, min });
    }
    Ok(())
}

fn rat_u64_int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
