//! Dense polynomials over exact rationals.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::{rat_int, Rational};

/// Coefficient of `c^k` at index `k`; the highest-index coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat_int(1))
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_coeffs(vec![r])
    }

    /// `r * c^k`.
    pub fn monomial(r: Rational, k: usize) -> Self {
        let mut coeffs = vec![rat_int(0); k + 1];
        coeffs[k] = r;
        Self::from_coeffs(coeffs)
    }

    /// Builds from raw coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `c^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn eval(&self, c: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for coeff in self.coeffs.iter().rev() {
            acc = acc * c + coeff;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplies by `c^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![rat_int(0); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// First `order + 1` coefficients of the power-series inverse.
    /// Panics if the constant term is zero.
    pub fn series_inverse(&self, order: usize) -> Vec<Rational> {
        let a0 = self.coeff(0);
        assert!(!a0.is_zero(), "series inverse needs a unit constant term");
        let mut inv = Vec::with_capacity(order + 1);
        inv.push(rat_int(1) / &a0);
        for n in 1..=order {
            let mut acc = rat_int(0);
            for k in 1..=n.min(self.coeffs.len() - 1) {
                acc += self.coeff(k) * &inv[n - k];
            }
            inv.push(-acc / &a0);
        }
        inv
    }

    /// Euclidean division by a nonzero divisor: `self = q * div + r` with
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![rat_int(0); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            for i in 0..dd {
                let delta = &q * &div.coeffs[i];
                rem[k - dd + i] -= delta;
            }
            rem[k] = rat_int(0);
            quot[k - dd] = q;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => {
                let lead = self.coeffs[d].clone();
                self.scale(&(rat_int(1) / lead))
            }
        }
    }

    /// `1 - c^k + c^{k+1}`, the recurring denominator factor.
    pub fn one_minus_ck_plus_ck1(k: usize) -> Self {
        let mut coeffs = vec![rat_int(0); k + 2];
        coeffs[0] = rat_int(1);
        coeffs[k] += rat_int(-1);
        coeffs[k + 1] += rat_int(1);
        Self::from_coeffs(coeffs)
    }

    /// Rounded `f64` coefficients, for hardware-precision root finding.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    // good to ~1e-15 relative accuracy for the moderate rationals used here
    let approx = |x: &BigInt| -> f64 {
        let s = x.to_string();
        s.parse::<f64>().unwrap_or(f64::NAN)
    };
    approx(r.numer()) / approx(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn horner_eval() {
        // 1 - c + c^2 at c = 1/10
        let q = Polynomial::one_minus_ck_plus_ck1(1);
        assert_eq!(q.eval(&rat(1, 10)), rat(91, 100));
    }

    #[test]
    fn division_round_trips() {
        let a = poly(&[2, 0, -3, 1, 4]);
        let b = poly(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn series_inverse_of_q1() {
        // 1/(1 - c + c^2) = 1 + c - c^3 - c^4 + ...
        let inv = Polynomial::one_minus_ck_plus_ck1(1).series_inverse(4);
        assert_eq!(inv, vec![rat_int(1), rat_int(1), rat_int(0), rat_int(-1), rat_int(-1)]);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let common = poly(&[1, 1]); // 1 + c
        let a = common.mul(&poly(&[1, 0, 1]));
        let b = common.mul(&poly(&[2, 1]));
        assert_eq!(a.gcd(&b), common.monic());
    }

    proptest! {
        #[test]
        fn mul_matches_eval(a in proptest::collection::vec(-9i64..=9, 0..6),
                            b in proptest::collection::vec(-9i64..=9, 0..6)) {
            let pa = poly(&a);
            let pb = poly(&b);
            let at = rat(3, 7);
            prop_assert_eq!(pa.mul(&pb).eval(&at), pa.eval(&at) * pb.eval(&at));
        }
    }
}
