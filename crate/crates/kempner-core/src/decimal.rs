//! Fixed-point decimals: a scaled big integer with an explicit number of
//! fractional digits.
//!
//! `Decimal { mant, scale }` represents `mant * 10^-scale`. Additions and
//! subtractions at a common scale are exact; every rounding operation
//! (`from_ratio`, `mul_round`, `div_int_round`, `with_scale`) rounds
//! half-even and is accurate to half an ulp of the result scale. Callers
//! pick a working scale with enough guard digits for their accumulation
//! length and round once at the end.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::util::pow10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    mant: BigInt,
    scale: u32,
}

/// `n / d` rounded half-even. `d` must be nonzero.
pub(crate) fn div_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(!d.is_zero());
    let (n, d) = if d.is_negative() {
        (-n, -d)
    } else {
        (n.clone(), d.clone())
    };
    let (q, r) = n.div_mod_floor(&d);
    let twice: BigInt = r << 1;
    match twice.cmp(&d) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

/// `n / d` rounded toward positive infinity. `d` must be positive.
pub(crate) fn div_ceil(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_mod_floor(d);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

impl Decimal {
    pub fn zero(scale: u32) -> Self {
        Self { mant: BigInt::zero(), scale }
    }

    /// The integer `n`, exactly, at the given scale.
    pub fn from_int<T: Into<BigInt>>(n: T, scale: u32) -> Self {
        Self { mant: n.into() * pow10(scale), scale }
    }

    /// One unit in the last place at the given scale, i.e. `10^-scale`.
    pub fn one_ulp(scale: u32) -> Self {
        Self { mant: BigInt::from(1), scale }
    }

    pub fn from_raw(mant: BigInt, scale: u32) -> Self {
        Self { mant, scale }
    }

    /// `num / den` rounded half-even to `scale` fractional digits.
    pub fn from_ratio(num: &BigInt, den: &BigInt, scale: u32) -> Self {
        let mant = div_half_even(&(num * pow10(scale)), den);
        Self { mant, scale }
    }

    /// `num / den` rounded up (toward +inf) to `scale` fractional digits.
    /// Used for certified upper bounds.
    pub fn from_ratio_ceil(num: &BigInt, den: &BigInt, scale: u32) -> Self {
        debug_assert!(den.is_positive());
        let mant = div_ceil(&(num * pow10(scale)), den);
        Self { mant, scale }
    }

    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), scale)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), pow10(self.scale))
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// Rescale: exact when widening, half-even when narrowing.
    pub fn with_scale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self {
                mant: &self.mant * pow10(scale - self.scale),
                scale,
            },
            Ordering::Less => Self {
                mant: div_half_even(&self.mant, &pow10(self.scale - scale)),
                scale,
            },
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = &self.mant * pow10(scale - self.scale);
        let b = &other.mant * pow10(scale - other.scale);
        (a, b, scale)
    }

    /// Exact addition at the wider of the two scales.
    pub fn add(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Self { mant: a + b, scale }
    }

    /// Exact subtraction at the wider of the two scales.
    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Self { mant: a - b, scale }
    }

    pub fn neg(&self) -> Self {
        Self { mant: -&self.mant, scale: self.scale }
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), scale: self.scale }
    }

    /// Product rounded half-even to `scale`.
    pub fn mul_round(&self, other: &Self, scale: u32) -> Self {
        let prod = &self.mant * &other.mant;
        let mant = div_half_even(&(prod * pow10(scale)), &pow10(self.scale + other.scale));
        Self { mant, scale }
    }

    /// Exact product with an integer, scale unchanged.
    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self { mant: &self.mant * n, scale: self.scale }
    }

    /// Quotient by a nonzero integer, rounded half-even to `scale`.
    pub fn div_int_round(&self, n: &BigInt, scale: u32) -> Self {
        let mant = div_half_even(&(&self.mant * pow10(scale)), &(n * pow10(self.scale)));
        Self { mant, scale }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

/// `|a - b| <= tol`.
pub fn within(a: &Decimal, b: &Decimal, tol: &Decimal) -> bool {
    a.sub(b).abs().cmp_value(tol) != Ordering::Greater
}

impl fmt::Display for Decimal {
    /// Renders with exactly `scale` fractional digits (no digit grouping).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ten = pow10(self.scale);
        let (int, frac) = self.mant.abs().div_rem(&ten);
        let sign = if self.mant.is_negative() { "-" } else { "" };
        if self.scale == 0 {
            return write!(f, "{sign}{int}");
        }
        let digits = frac.to_string();
        let pad = self.scale as usize - digits.len();
        write!(f, "{sign}{int}.")?;
        for _ in 0..pad {
            write!(f, "0")?;
        }
        write!(f, "{digits}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseDecimalError;

impl fmt::Display for ParseDecimalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid decimal literal")
    }
}

impl FromStr for Decimal {
    type Err = ParseDecimalError;

    /// Parses `[-]digits[.digits]`; the scale is the number of fractional
    /// digits present.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, fr)) => (i, fr),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseDecimalError);
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseDecimalError);
        }
        let mant: BigInt = digits.parse().map_err(|_| ParseDecimalError)?;
        Ok(Decimal { mant: mant * sign, scale: frac_part.len() as u32 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn rounds_spec_values() {
        assert_eq!(Decimal::from_rational(&rat(550, 91), 6).to_string(), "6.043956");
        assert_eq!(Decimal::from_rational(&rat(1, 3), 4).to_string(), "0.3333");
        assert_eq!(Decimal::from_rational(&rat(761, 280), 6).to_string(), "2.717857");
    }

    #[test]
    fn half_even_ties() {
        let d = |n: i64, den: i64, s: u32| Decimal::from_rational(&rat(n, den), s).to_string();
        assert_eq!(d(1, 2, 0), "0");
        assert_eq!(d(3, 2, 0), "2");
        assert_eq!(d(5, 2, 0), "2");
        assert_eq!(d(-1, 2, 0), "0");
        assert_eq!(d(-3, 2, 0), "-2");
        assert_eq!(d(25, 1000, 2), "0.02");
        assert_eq!(d(35, 1000, 2), "0.04");
        // carry across the decimal point
        assert_eq!(d(95, 100, 1), "1.0");
    }

    #[test]
    fn display_pads_fractional_zeros() {
        assert_eq!(Decimal::from_rational(&rat(1, 100), 4).to_string(), "0.0100");
        assert_eq!(Decimal::from_rational(&rat(-1, 100), 4).to_string(), "-0.0100");
        assert_eq!(Decimal::from_int(5, 0).to_string(), "5");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0.000", "-12.5", "22.920676619", "7", "-0.001"] {
            let d: Decimal = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("".parse::<Decimal>().is_err());
        assert!("1.2.3".parse::<Decimal>().is_err());
        assert!("12a".parse::<Decimal>().is_err());
    }

    #[test]
    fn ceil_rounds_up() {
        let up = Decimal::from_ratio_ceil(&BigInt::from(1), &BigInt::from(3), 4);
        assert_eq!(up.to_string(), "0.3334");
        let exact = Decimal::from_ratio_ceil(&BigInt::from(1), &BigInt::from(4), 2);
        assert_eq!(exact.to_string(), "0.25");
    }

    proptest! {
        #[test]
        fn narrow_and_wide_agree(n in -100000i64..100000, d in 1i64..100000, p in 1u32..12) {
            let x = rat(n, d);
            let narrow = Decimal::from_rational(&x, p);
            let wide = Decimal::from_rational(&x, p + 5);
            prop_assert!(within(&narrow, &wide, &Decimal::one_ulp(p)));
        }

        #[test]
        fn rounding_error_is_at_most_half_ulp(n in -100000i64..100000, d in 1i64..100000, p in 0u32..10) {
            let x = rat(n, d);
            let rounded = Decimal::from_rational(&x, p).to_rational();
            let err = (rounded - x).abs();
            prop_assert!(err <= rat(1, 2) * Rational::new(BigInt::from(1), pow10(p)));
        }

        #[test]
        fn mul_round_matches_exact(a in -10000i64..10000, b in -10000i64..10000, s in 0u32..8) {
            let x = Decimal::from_raw(BigInt::from(a), 3);
            let y = Decimal::from_raw(BigInt::from(b), 2);
            let exact = x.to_rational() * y.to_rational();
            prop_assert_eq!(x.mul_round(&y, s), Decimal::from_rational(&exact, s));
        }
    }
}
