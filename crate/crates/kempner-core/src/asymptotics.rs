//! The large-base expansion `b log b - A/b - B/b^2 - C/b^3` with
//! `A = zeta(2)/2`, `B = (3 zeta(2) + zeta(3))/3`,
//! `C = (2 zeta(2) + 4 zeta(3) + zeta(4))/4`, plus the `zeta`, `log` and
//! `exp` evaluations it needs.
//!
//! `zeta(s)` uses Euler-Maclaurin: a direct sum to `N = max(50, P)` plus
//! the integral and Bernoulli corrections, stopping when the first omitted
//! correction (which bounds the remainder for this completely monotone
//! integrand) drops below `10^-(P+3)`. `log` reduces the argument to
//! `[1, 2)` by powers of two and runs the `atanh` series, so the ratio
//! `(x-1)/(x+1)` never exceeds `1/3`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::kempner::kempner_sum;
use crate::powersums::BernoulliTable;
use crate::rational::{rat_int, Rational};
use crate::util::pow10;

/// Natural log of a positive integer, accurate to `10^-prec`.
pub fn ln_int(n: u64, prec: u32) -> Result<Decimal> {
    if n < 1 {
        return Err(Error::BaseTooSmall { base: n, min: 1 });
    }
    let scale = prec + 10;
    if n == 1 {
        return Ok(Decimal::zero(prec));
    }
    // n = x * 2^k with x in [1, 2)
    let k = 63 - u64::from(n.leading_zeros());
    let pow2 = 1u64 << k;
    let x_num = BigInt::from(n);
    let x_den = BigInt::from(pow2);
    let mut acc = atanh_series(&(&x_num - &x_den), &(&x_num + &x_den), scale);
    if k > 0 {
        let ln2 = atanh_series(&BigInt::one(), &BigInt::from(3), scale);
        acc = acc.add(&ln2.mul_int(&BigInt::from(k)));
    }
    Ok(acc.with_scale(prec))
}

/// `2 * atanh(num/den) = 2 sum t^{2i+1}/(2i+1)` with `t = num/den`,
/// requiring `0 <= t < 1` (callers keep `t <= 1/3`).
fn atanh_series(num: &BigInt, den: &BigInt, scale: u32) -> Decimal {
    let t = Decimal::from_ratio(num, den, scale);
    let t2 = t.mul_round(&t, scale);
    let mut power = t.clone();
    let mut acc = t;
    let mut odd = 1u64;
    loop {
        power = power.mul_round(&t2, scale);
        odd += 2;
        let term = power.div_int_round(&BigInt::from(odd), scale);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc.mul_int(&BigInt::from(2))
}

/// `e^x`, accurate to `10^-prec`, by halving the argument until it is
/// small, running the Taylor series, and squaring back up.
pub fn exp(x: &Decimal, prec: u32) -> Decimal {
    // pick k with |x| / 2^k <= 1/4
    let quarter = Decimal::from_rational(&Rational::new(BigInt::one(), BigInt::from(4)), x.scale());
    let mut k = 0u32;
    let mut bound = quarter;
    while x.abs().cmp_value(&bound) == core::cmp::Ordering::Greater {
        bound = bound.add(&bound);
        k += 1;
    }
    let scale = prec + 12 + 2 * k;
    let r = x.with_scale(scale).div_int_round(&(BigInt::one() << k), scale);
    let mut term = Decimal::from_int(1, scale);
    let mut acc = term.clone();
    let mut i = 0u64;
    loop {
        i += 1;
        term = term.mul_round(&r, scale).div_int_round(&BigInt::from(i), scale);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    for _ in 0..k {
        acc = acc.mul_round(&acc, scale);
    }
    acc.with_scale(prec)
}

/// `zeta(s)` for integer `s >= 2`, accurate to `10^-prec`.
pub fn zeta_int(s: u32, prec: u32) -> Result<Decimal> {
    if s < 2 {
        return Err(Error::ZetaArgumentTooSmall { s });
    }
    let scale = prec + 8;
    let n = 50.max(prec as u64);
    let big_n = BigInt::from(n);

    let mut acc = Decimal::zero(scale);
    for i in 1..n {
        acc = acc.add(&Decimal::from_ratio(&BigInt::one(), &BigInt::from(i).pow(s), scale));
    }
    // N^-s / 2 + N^{1-s} / (s-1)
    let n_pow_s = big_n.pow(s);
    acc = acc.add(&Decimal::from_ratio(&BigInt::one(), &(&n_pow_s * 2u32), scale));
    acc = acc.add(&Decimal::from_ratio(
        &BigInt::one(),
        &(big_n.pow(s - 1) * BigInt::from(s - 1)),
        scale,
    ));

    // Bernoulli corrections B_{2k}/(2k)! * rising(s, 2k-1) * N^{-s-2k+1};
    // stop when the next term undercuts the target, which also bounds the
    // remainder.
    let threshold = Rational::new(BigInt::one(), pow10(prec + 3));
    let mut bern = BernoulliTable::new(32);
    let mut rising = Rational::from_integer(BigInt::from(s)); // (s)_{2k-1} for k = 1
    let mut factorial = rat_int(2); // (2k)!
    let mut n_power = Rational::new(BigInt::one(), big_n.pow(s + 1)); // N^{-s-2k+1}
    let inv_n2 = Rational::new(BigInt::one(), (&big_n * &big_n).clone());
    let mut k = 1u32;
    loop {
        if bern.max_index() < 2 * k {
            bern = BernoulliTable::new(2 * k + 16);
        }
        let term = bern.get(2 * k) * &rising / &factorial * &n_power;
        if term.abs() < threshold {
            break;
        }
        acc = acc.add(&Decimal::from_rational(&term, scale));
        // advance to k+1
        rising *= rat_int((s + 2 * k - 1) as i64) * rat_int((s + 2 * k) as i64);
        factorial *= rat_int((2 * k + 1) as i64) * rat_int((2 * k + 2) as i64);
        n_power *= &inv_n2;
        k += 1;
        assert!(k < 1000, "Euler-Maclaurin failed to converge for s = {s}");
    }
    Ok(acc.with_scale(prec))
}

/// The three expansion coefficients, each accurate to `10^-prec`.
#[derive(Clone, Debug)]
pub struct ExpansionCoefficients {
    /// `zeta(2)/2`
    pub a: Decimal,
    /// `(3 zeta(2) + zeta(3))/3`
    pub b: Decimal,
    /// `(2 zeta(2) + 4 zeta(3) + zeta(4))/4`
    pub c: Decimal,
}

impl ExpansionCoefficients {
    pub fn compute(prec: u32) -> Self {
        let scale = prec + 6;
        let z2 = zeta_int(2, scale).expect("s = 2");
        let z3 = zeta_int(3, scale).expect("s = 3");
        let z4 = zeta_int(4, scale).expect("s = 4");
        let three = BigInt::from(3);
        let a = z2.div_int_round(&BigInt::from(2), prec);
        let b = z2
            .mul_int(&three)
            .add(&z3)
            .div_int_round(&three, prec);
        let c = z2
            .mul_int(&BigInt::from(2))
            .add(&z3.mul_int(&BigInt::from(4)))
            .add(&z4)
            .div_int_round(&BigInt::from(4), prec);
        Self { a, b, c }
    }
}

/// `b log b` minus the first `nterms` correction terms, at scale
/// `prec + 4` with each term individually rounded there and subtracted
/// exactly; consecutive orders therefore differ by exactly the rounded
/// term.
pub fn expansion_working(b: u64, nterms: u8, prec: u32) -> Result<Decimal> {
    if b < 2 {
        return Err(Error::BaseTooSmall { base: b, min: 2 });
    }
    if nterms > 3 {
        return Err(Error::TermCountOutOfRange { nterms });
    }
    let scale = prec + 4;
    let coeffs = ExpansionCoefficients::compute(scale + 4);
    let big_b = BigInt::from(b);
    let mut acc = ln_int(b, scale + 4)?.mul_int(&big_b).with_scale(scale);
    let divisors = [
        big_b.clone(),
        (&big_b * &big_b).clone(),
        (&big_b * &big_b * &big_b).clone(),
    ];
    let terms = [&coeffs.a, &coeffs.b, &coeffs.c];
    for i in 0..nterms as usize {
        acc = acc.sub(&terms[i].div_int_round(&divisors[i], scale));
    }
    Ok(acc)
}

/// `b log b` minus the first `nterms` correction terms, to `prec` digits.
pub fn expansion(b: u64, nterms: u8, prec: u32) -> Result<Decimal> {
    Ok(expansion_working(b, nterms, prec)?.with_scale(prec))
}

/// `(expansion(b, 3) - K(b, b-1)) * b^4`: the scaled remainder of the
/// cubic expansion. Stays of order one as `b` grows.
pub fn error_ratio(b: u64, prec: u32) -> Result<Decimal> {
    let predicted = expansion(b, 3, prec)?;
    let exact = kempner_sum(b, prec)?.value;
    let b4 = BigInt::from(b).pow(4);
    Ok(predicted.sub(&exact).mul_int(&b4))
}
