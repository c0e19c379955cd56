//! The moments as rational functions of `c = 1/b`.
//!
//! Writing `w_m = v_m - b/(m+1)` removes the simple pole of `v_m` at
//! `c = 0` and turns the moment recurrence into
//!
//! `(1 - c^m + c^{m+1}) w_m = 1 - c^m/(m+1)
//!     + sum_{j=1}^{m-1} C(m,j) (c^{j+1} gamma_j) (c^{m-j} w_{m-j})`
//!
//! with `w_0 = 0`, where `c^{j+1} gamma_j` is the scaled power-sum
//! polynomial. [`WTable`] memoizes the `w_m` as explicit numerator /
//! denominator pairs over the structural denominator
//! `prod_{k<=m} (1 - c^k + c^{k+1})`; [`taylor`] instead propagates
//! truncated power series through the same recurrence, which is far
//! cheaper when only the first few coefficients are wanted.

mod poly;
mod roots;

pub use poly::Polynomial;
pub use roots::{min_pole_modulus, rho};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::powersums::{scaled_power_sum_poly_with, BernoulliTable};
use crate::rational::{rat_int, Rational};
use crate::util::next_pascal_row;

/// A ratio of polynomials in `c`, kept with the denominator normalized to
/// constant term 1 (every `w_m` is analytic at `c = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Panics if the denominator vanishes at 0 (no such function arises
    /// from the recurrence).
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        let d0 = den.coeff(0);
        assert!(!d0.is_zero(), "denominator must not vanish at c = 0");
        let inv = rat_int(1) / d0;
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn from_poly(num: Polynomial) -> Self {
        Self { num, den: Polynomial::one() }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` when `c` is a pole.
    pub fn eval(&self, c: &Rational) -> Option<Rational> {
        let den = self.den.eval(c);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(c) / den)
    }

    /// First `order + 1` Taylor coefficients at `c = 0`, by power-series
    /// division (numerator times series inverse of the denominator).
    pub fn taylor(&self, order: usize) -> Vec<Rational> {
        let inv = self.den.series_inverse(order);
        (0..=order)
            .map(|n| {
                let mut acc = rat_int(0);
                for k in 0..=n {
                    let a = self.num.coeff(k);
                    if !a.is_zero() {
                        acc += a * &inv[n - k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Structural sum; denominators multiply, no gcd.
    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::new(self.num.mul(p), self.den.clone())
    }

    /// Value equality by cross multiplication, independent of
    /// representation.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Gcd-reduced copy (denominator constant term renormalized to 1).
    pub fn reduce(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        if g.degree() == Some(0) {
            return self.clone();
        }
        let num = self.num.div_rem(&g).0;
        let den = self.den.div_rem(&g).0;
        Self::new(num, den)
    }
}

/// `w_0 ..= w_M` built once, sequentially, then shared read-only.
pub struct WTable {
    /// `Q_k = 1 - c^k + c^{k+1}` for `k = 1..=M` at index `k - 1`.
    factors: Vec<Polynomial>,
    /// `D_m = prod_{k<=m} Q_k`; `D_0 = 1`.
    dens: Vec<Polynomial>,
    /// Numerator of `w_m` over `D_m`.
    nums: Vec<Polynomial>,
}

impl WTable {
    pub fn build(max_order: u32) -> Self {
        let bern = BernoulliTable::new(max_order.max(1));
        let mut factors: Vec<Polynomial> = Vec::with_capacity(max_order as usize);
        let mut dens = vec![Polynomial::one()];
        let mut nums = vec![Polynomial::zero()];

        let mut row = vec![num_bigint::BigInt::from(1)];
        for m in 1..=max_order as usize {
            next_pascal_row(&mut row);
            let q_m = Polynomial::one_minus_ck_plus_ck1(m);

            // (1 - c^m/(m+1)) D_{m-1}
            let drop = dens[m - 1]
                .shifted(m)
                .scale(&rat_int(-(m as i64 + 1)).recip());
            let mut acc = dens[m - 1].add(&drop);

            // sum_j C(m,j) S_j c^{m-j} w_{m-j}, over the common D_{m-1}
            let mut ratio = Polynomial::one(); // D_{m-1} / D_{m-j}
            for j in 1..m {
                let s_j = scaled_power_sum_poly_with(&bern, j as u32).expect("j >= 1");
                let s_poly = Polynomial::from_coeffs(s_j.coeffs);
                let coeff = Rational::from_integer(row[j].clone());
                let term = s_poly
                    .mul(&nums[m - j].shifted(m - j))
                    .mul(&ratio)
                    .scale(&coeff);
                acc = acc.add(&term);
                ratio = ratio.mul(&factors[m - j - 1]);
            }

            dens.push(dens[m - 1].mul(&q_m));
            factors.push(q_m);
            nums.push(acc);
        }
        Self { factors, dens, nums }
    }

    pub fn max_order(&self) -> u32 {
        self.nums.len() as u32 - 1
    }

    pub fn w(&self, m: u32) -> RationalFunction {
        RationalFunction::new(self.nums[m as usize].clone(), self.dens[m as usize].clone())
    }

    /// The structural denominator `prod_{k<=m} (1 - c^k + c^{k+1})`.
    pub fn denominator(&self, m: u32) -> &Polynomial {
        &self.dens[m as usize]
    }

    /// `Q_k = 1 - c^k + c^{k+1}`.
    pub fn factor(&self, k: u32) -> &Polynomial {
        &self.factors[k as usize - 1]
    }
}

/// `w_m` as an explicit rational function. Builds the whole chain up to
/// `m`; for large `m` prefer [`taylor`] when only series coefficients are
/// needed.
pub fn w_rational(m: u32) -> RationalFunction {
    WTable::build(m).w(m)
}

/// First `order + 1` Taylor coefficients of `w_m` at `c = 0`, exact, by
/// running the recurrence on series truncated mod `c^{order+1}` (each step
/// divides by `1 - c^m + c^{m+1}` as a power series).
pub fn taylor(m: u32, order: u32) -> Vec<Rational> {
    let order = order as usize;
    let bern = BernoulliTable::new(m.max(1));
    let scaled: Vec<Vec<Rational>> = (1..m.max(1))
        .map(|j| scaled_power_sum_poly_with(&bern, j).expect("j >= 1").coeffs)
        .collect();

    let mut series: Vec<Vec<Rational>> = vec![vec![rat_int(0); order + 1]];
    let mut row = vec![num_bigint::BigInt::from(1)];
    for n in 1..=m as usize {
        next_pascal_row(&mut row);
        let mut rhs = vec![rat_int(0); order + 1];
        rhs[0] = rat_int(1);
        if n <= order {
            rhs[n] -= rat_int(1) / rat_int(n as i64 + 1);
        }
        for j in 1..n {
            let shift = n - j;
            if shift > order {
                continue;
            }
            let coeff = Rational::from_integer(row[j].clone());
            let s_j = &scaled[j - 1];
            let w_prev = &series[n - j];
            for (a, s) in s_j.iter().enumerate().take(order - shift + 1) {
                if s.is_zero() {
                    continue;
                }
                let scale = &coeff * s;
                let base = shift + a;
                for (t, w) in w_prev.iter().enumerate().take(order - base + 1) {
                    if !w.is_zero() {
                        rhs[base + t] += &scale * w;
                    }
                }
            }
        }
        // divide by 1 - c^n + c^{n+1}: w[i] = rhs[i] + w[i-n] - w[i-n-1]
        let mut w = rhs;
        for i in 0..=order {
            if i >= n {
                let prev = w[i - n].clone();
                w[i] += prev;
            }
            if i >= n + 1 {
                let prev = w[i - n - 1].clone();
                w[i] -= prev;
            }
        }
        series.push(w);
    }
    series.swap_remove(m as usize)
}

/// Residue at `c = 0` of `v_m(c) = 1/((m+1)c) + w_m(c)`, extracted from
/// the assembled rational function (simple pole: `P(0)/Q'(0)`). Always
/// `1/(m+1)`.
pub fn residue_at_zero(m: u32) -> Rational {
    residue_from_table(&WTable::build(m), m)
}

/// Same, reusing a built table.
pub fn residue_from_table(table: &WTable, m: u32) -> Rational {
    let w = table.w(m);
    let m1 = rat_int(m as i64 + 1);
    // v_m = (D_w + (m+1) c N_w) / ((m+1) c D_w)
    let num = w.den().add(&w.num().shifted(1).scale(&m1));
    let den = w.den().shifted(1).scale(&m1);
    assert!(den.coeff(0).is_zero(), "pole at zero expected");
    let slope = den.derivative().coeff(0);
    assert!(!slope.is_zero(), "pole at zero must be simple");
    num.coeff(0) / slope
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::compute_moments;
    use crate::rational::rat;
    use num_bigint::BigInt;

    #[test]
    fn w0_is_zero() {
        assert!(w_rational(0).is_zero());
    }

    #[test]
    fn w1_closed_form() {
        // w_1 = (1 - c/2) / (1 - c + c^2)
        let w1 = w_rational(1);
        let num = Polynomial::from_coeffs(vec![rat_int(1), rat(-1, 2)]);
        let den = Polynomial::one_minus_ck_plus_ck1(1);
        assert!(w1.equivalent(&RationalFunction::new(num, den)));
        assert_eq!(w1.eval(&rat(1, 10)).unwrap(), rat(95, 91));
    }

    #[test]
    fn taylor_spec_examples() {
        assert_eq!(taylor(4, 3), vec![rat_int(1), rat_int(1), rat(1, 2), rat(1, 2)]);
        assert_eq!(taylor(3, 3), vec![rat_int(1), rat_int(1), rat(1, 2), rat_int(0)]);
        assert_eq!(taylor(2, 2), vec![rat_int(1), rat_int(1), rat(1, 6)]);
        assert_eq!(taylor(6, 3), vec![rat_int(1), rat_int(1), rat(1, 2), rat_int(1)]);
        // low-order expansions of w_1 and w_2 to order 3
        assert_eq!(taylor(1, 3), vec![rat_int(1), rat(1, 2), rat(-1, 2), rat_int(-1)]);
        assert_eq!(taylor(2, 3), vec![rat_int(1), rat_int(1), rat(1, 6), rat_int(-1)]);
    }

    #[test]
    fn taylor_cubic_coefficient_pattern() {
        for m in 4u32..=40 {
            let t = taylor(m, 3);
            assert_eq!(
                t,
                vec![rat_int(1), rat_int(1), rat(1, 2), rat_int(m as i64 - 2) / rat_int(4)],
                "m={m}"
            );
        }
    }

    #[test]
    fn taylor_agrees_with_series_division_of_w() {
        let table = WTable::build(16);
        for m in 0u32..=16 {
            assert_eq!(table.w(m).taylor(6), taylor(m, 6), "m={m}");
        }
    }

    #[test]
    fn residues_are_reciprocal_orders() {
        let table = WTable::build(20);
        for m in 0u32..=20 {
            assert_eq!(residue_from_table(&table, m), rat(1, m as i64 + 1), "m={m}");
        }
        assert_eq!(residue_at_zero(0), rat_int(1));
        assert_eq!(residue_at_zero(4), rat(1, 5));
        assert_eq!(residue_at_zero(19), rat(1, 20));
    }

    #[test]
    fn recurrence_identity_multiplied_out() {
        // Reassemble the right side of the recurrence with independent
        // polynomial divisions and check both sides as rational functions.
        let max = 20u32;
        let table = WTable::build(max);
        let bern = BernoulliTable::new(max);
        for m in 1..=max as usize {
            let row = crate::util::pascal_row(m as u32);
            let d_prev = table.denominator(m as u32 - 1);
            let mut rhs_num = d_prev.add(
                &d_prev
                    .shifted(m)
                    .scale(&rat_int(-(m as i64 + 1)).recip()),
            );
            for j in 1..m {
                let s_j = Polynomial::from_coeffs(
                    scaled_power_sum_poly_with(&bern, j as u32).unwrap().coeffs,
                );
                let (ratio, rem) = d_prev.div_rem(table.denominator((m - j) as u32));
                assert!(rem.is_zero(), "structural denominators must nest");
                let term = s_j
                    .mul(&table.w((m - j) as u32).num().shifted(m - j))
                    .mul(&ratio)
                    .scale(&Rational::from_integer(row[j].clone()));
                rhs_num = rhs_num.add(&term);
            }
            let lhs = table.w(m as u32).mul_poly(table.factor(m as u32));
            let rhs = RationalFunction::new(rhs_num, d_prev.clone());
            assert!(lhs.equivalent(&rhs), "m={m}");
        }
    }

    #[test]
    fn matches_moments_at_integer_bases() {
        let table = WTable::build(20);
        for &b in &[2u64, 3, 10, 97] {
            let moments = compute_moments(b, 20).unwrap();
            let c = Rational::new(BigInt::from(1), BigInt::from(b));
            for m in 0u32..=20 {
                let w_at = table.w(m).eval(&c).unwrap();
                let expected =
                    moments.value(m) - Rational::new(BigInt::from(b), BigInt::from(m + 1));
                assert_eq!(w_at, expected, "b={b} m={m}");
            }
        }
    }

    #[test]
    fn reduced_denominator_divides_structural_product() {
        let table = WTable::build(8);
        for m in 1u32..=8 {
            let reduced = table.w(m).reduce();
            assert!(reduced.den().divides(table.denominator(m)), "m={m}");
        }
    }
}
