//! Exact rational values.
//!
//! All exact quantities in this crate (`gamma_j`, `v_m`, `beta_m`, Taylor
//! coefficients, deviations) live in [`Rational`]. Values built with
//! [`rat`]/[`rat_int`] are in lowest terms; a few hot paths construct
//! unreduced ratios internally, which is sound because `Ratio`'s equality
//! and ordering compare by value, not by representation.

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The integer `n` as a rational.
pub fn rat_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn addition_associates(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
        }

        #[test]
        fn multiplication_distributes(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b + a * c);
        }

        #[test]
        fn inverses(a in arb_rational()) {
            prop_assert_eq!(a.clone() - a.clone(), rat_int(0));
            if a != rat_int(0) {
                prop_assert_eq!(a.clone() * (rat_int(1) / a), rat_int(1));
            }
        }
    }

    #[test]
    fn equality_ignores_representation() {
        let raw = Rational::new_raw(BigInt::from(4), BigInt::from(6));
        assert_eq!(raw, rat(2, 3));
    }
}
