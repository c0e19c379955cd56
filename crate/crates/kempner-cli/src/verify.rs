//! The `verify` subcommand: every module's invariants, run deterministically
//! (fixed seeds, fixed grids) so two runs print identical reports.

use kempner_core::asymptotics::{error_ratio, exp, expansion, ln_int, zeta_int};
use kempner_core::decimal::within;
use kempner_core::fischer::{fischer_betas, fischer_sum, recurrence_residual};
use kempner_core::kempner::{kempner_sum, truncation_order};
use kempner_core::moments::{compute_moments, deviation_sweep};
use kempner_core::oracle::{bracket, enumerate_partial, level_count};
use kempner_core::powersums::{
    check_identity_8, check_power_sum_envelope, power_sum, power_sum_closed_form,
    power_sum_direct, scaled_power_sum_poly,
};
use kempner_core::ratfun::{min_pole_modulus, residue_from_table, rho, taylor, Polynomial,
    RationalFunction, WTable};
use kempner_core::rational::{rat, rat_int, Rational};
use kempner_core::Decimal;
use num_bigint::BigInt;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl ToString) -> Check {
    Check { name, passed, detail: detail.to_string() }
}

fn xorshift(state: &mut u64) -> u64 {
    *state ^= *state << 13;
    *state ^= *state >> 7;
    *state ^= *state << 17;
    *state
}

/// The frozen Thm-3 sweep bound: max |z_m| b^4 / m^2 over m in [4,80],
/// b in [2,64] equals 7/80 exactly, attained at (b=2, m=4).
pub fn frozen_sweep_bound() -> Rational {
    rat(7, 80)
}

pub fn run(quick: bool) -> Vec<Check> {
    let mut checks = Vec::new();

    // powersums
    {
        let pairs = if quick { 60 } else { 200 };
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut ok = true;
        for _ in 0..pairs {
            let b = 2 + xorshift(&mut state) % 99;
            let m = (xorshift(&mut state) % 61) as u32;
            ok &= check_identity_8(b, m).unwrap();
        }
        checks.push(check("powersums/identity-8-random-grid", ok, format!("{pairs} pairs")));

        let (bmax, jmax) = if quick { (20, 20) } else { (50, 40) };
        let mut envelope = true;
        let mut poly_eval = true;
        for b in 2..=bmax {
            let c = Rational::new(BigInt::from(1), BigInt::from(b));
            for j in 1..=jmax {
                envelope &= check_power_sum_envelope(b, j).unwrap();
                let poly = scaled_power_sum_poly(j).unwrap();
                poly_eval &=
                    poly.eval(&c) == power_sum(b, j).unwrap() * c.pow(j as i32 + 1);
            }
        }
        checks.push(check("powersums/envelope-7-grid", envelope, format!("b<={bmax} j<={jmax}")));
        checks.push(check("powersums/scaled-poly-eval-grid", poly_eval, format!("b<={bmax} j<={jmax}")));

        let mut overlap = true;
        for b in [2u64, 10, 997] {
            for j in 1..=10 {
                overlap &= power_sum_closed_form(b, j).unwrap() == power_sum_direct(b, j).unwrap();
            }
        }
        checks.push(check("powersums/bernoulli-vs-direct-overlap", overlap, "b in {2,10,997}, j<=10"));
    }

    // moments
    {
        let count = if quick { 20 } else { 60 };
        let table = compute_moments(2, count).unwrap();
        let base2 = (0..=count).all(|m| table.value(m) == rat_int(2));
        checks.push(check("moments/base-2-all-twos", base2, format!("m<={count}")));

        let mut closed = true;
        for b in [3u64, 10, 100] {
            let t = compute_moments(b, 2).unwrap();
            let c = Rational::new(BigInt::from(1), BigInt::from(b));
            let v1 = rat_int(b as i64) / rat_int(2)
                + rat_int(1)
                + (&c / rat_int(2)) * (rat_int(1) - rat_int(2) * &c) / (rat_int(1) - &c + &c * &c);
            let c2 = &c * &c;
            let c3 = &c2 * &c;
            let c4 = &c3 * &c;
            let v2 = rat_int(b as i64) / rat_int(3)
                + rat_int(1)
                + (&c / rat_int(6))
                    * (rat_int(6) - rat_int(5) * &c - rat_int(7) * &c2 + rat_int(10) * &c3
                        - rat_int(6) * &c4)
                    / ((rat_int(1) - &c + &c2) * (rat_int(1) - &c2 + &c3));
            closed &= t.value(1) == v1 && t.value(2) == v2;
        }
        checks.push(check("moments/closed-forms-v1-v2", closed, "b in {3,10,100}"));

        let mut consistent = true;
        for b in [3u64, 10, 97] {
            let t = compute_moments(b, 12).unwrap();
            let mut reference = vec![rat_int(b as i64)];
            for m in 1..=12u32 {
                let mut rhs = Rational::from_integer(BigInt::from(b).pow(m + 1));
                let mut binom = rat_int(1);
                for j in 1..=m {
                    binom = binom * rat_int((m + 1 - j) as i64) / rat_int(j as i64);
                    rhs += &binom * power_sum(b, j).unwrap() * &reference[(m - j) as usize];
                }
                let lhs = Rational::from_integer(BigInt::from(b).pow(m + 1))
                    - rat_int(b as i64)
                    + rat_int(1);
                reference.push(rhs / lhs);
                consistent &= t.value(m) == reference[m as usize];
            }
        }
        checks.push(check("moments/recurrence-consistency", consistent, "b in {3,10,97}, m<=12"));

        let (bmax, mmax) = if quick { (16, 40) } else { (64, 80) };
        let sweep = deviation_sweep(2, bmax, 4, mmax).unwrap();
        let bound = frozen_sweep_bound();
        checks.push(check(
            "moments/thm3-sweep-no-regression",
            sweep.max_ratio <= bound,
            format!(
                "max |z| b^4/m^2 = {} at (b={}, m={}), frozen bound {}",
                sweep.max_ratio, sweep.max_base, sweep.max_order, bound
            ),
        ));
    }

    // ratfun
    {
        let w1 = WTable::build(1).w(1);
        let expected = RationalFunction::new(
            Polynomial::from_coeffs(vec![rat_int(1), rat(-1, 2)]),
            Polynomial::one_minus_ck_plus_ck1(1),
        );
        let w1_ok = w1.equivalent(&expected) && w1.eval(&rat(1, 10)).unwrap() == rat(95, 91);
        checks.push(check("ratfun/w1-closed-form", w1_ok, "(1 - c/2)/(1 - c + c^2)"));

        let mmax = if quick { 16 } else { 40 };
        let pattern = (4..=mmax).all(|m| {
            taylor(m, 3) == vec![rat_int(1), rat_int(1), rat(1, 2), rat_int(m as i64 - 2) / rat_int(4)]
        });
        checks.push(check("ratfun/taylor-cubic-pattern", pattern, format!("m in [4,{mmax}]")));

        let low_orders = taylor(1, 3) == vec![rat_int(1), rat(1, 2), rat(-1, 2), rat_int(-1)]
            && taylor(2, 3) == vec![rat_int(1), rat_int(1), rat(1, 6), rat_int(-1)]
            && taylor(3, 3) == vec![rat_int(1), rat_int(1), rat(1, 2), rat_int(0)];
        checks.push(check("ratfun/taylor-low-orders", low_orders, "m in {1,2,3}"));

        let rmax = if quick { 10 } else { 20 };
        let table = WTable::build(rmax);
        let residues =
            (0..=rmax).all(|m| residue_from_table(&table, m) == rat(1, m as i64 + 1));
        checks.push(check("ratfun/residues", residues, format!("m<={rmax}")));

        let pmax = if quick { 25 } else { 50 };
        let threshold = rho() - 1e-6;
        let poles = (1..=pmax).all(|m| min_pole_modulus(m).unwrap() >= threshold);
        checks.push(check(
            "ratfun/pole-moduli-outside-rho-disc",
            poles,
            format!("m<={pmax}, rho={:.6}", rho()),
        ));

        let (wmax, bases): (u32, &[u64]) = if quick { (10, &[2, 10]) } else { (20, &[2, 3, 10, 97]) };
        let wt = WTable::build(wmax);
        let mut agree = true;
        for &b in bases {
            let mom = compute_moments(b, wmax).unwrap();
            let c = Rational::new(BigInt::from(1), BigInt::from(b));
            for m in 0..=wmax {
                agree &= wt.w(m).eval(&c).unwrap()
                    == mom.value(m) - Rational::new(BigInt::from(b), BigInt::from(m + 1));
            }
        }
        checks.push(check("ratfun/eval-matches-moments", agree, format!("m<={wmax}")));
    }

    // kempner
    {
        let zero = kempner_sum(2, 10).unwrap().value.is_zero();
        checks.push(check("kempner/base-2-is-zero", zero, "empty digit set"));

        let ten = kempner_sum(10, 9).unwrap();
        checks.push(check(
            "kempner/base-10-reference",
            ten.value.to_string() == "22.920676619",
            ten.value.to_string(),
        ));

        let monotone = (1..=12u32)
            .map(|p| truncation_order(10, p))
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] <= w[1]);
        checks.push(check("kempner/truncation-order-monotone", monotone, "prec 1..=12"));

        let bases: &[u64] = if quick { &[10] } else { &[3, 10, 50] };
        let coherent = bases.iter().all(|&b| {
            let lo = kempner_sum(b, 12).unwrap().value;
            let hi = kempner_sum(b, 22).unwrap().value;
            within(&lo, &hi, &Decimal::one_ulp(12))
        });
        checks.push(check("kempner/precision-coherence", coherent, format!("bases {bases:?}")));
    }

    // asymptotics
    {
        let pi: Decimal = "3.14159265358979323846264338327950288419716939937510".parse().unwrap();
        let z2 = zeta_int(2, 40).unwrap();
        let z4 = zeta_int(4, 40).unwrap();
        let p2 = pi.mul_round(&pi, 48);
        let z2_ref = p2.div_int_round(&BigInt::from(6), 40);
        let z4_ref = p2.mul_round(&p2, 48).div_int_round(&BigInt::from(90), 40);
        let zeta_ok = within(&z2, &z2_ref, &Decimal::one_ulp(40))
            && within(&z4, &z4_ref, &Decimal::one_ulp(40));
        checks.push(check("asymptotics/zeta-closed-forms", zeta_ok, "zeta(2), zeta(4) vs pi"));

        let round_trip = [2u64, 10, 1000].iter().all(|&b| {
            let ln = ln_int(b, 40).unwrap();
            within(&exp(&ln, 30), &Decimal::from_int(BigInt::from(b), 30), &Decimal::one_ulp(30))
        });
        checks.push(check("asymptotics/log-exp-round-trip", round_trip, "b in {2,10,1000}"));

        let rows_ok = expansion(10, 0, 9).unwrap().to_string() == "23.025850930"
            && expansion(10, 1, 9).unwrap().to_string() == "22.943604227"
            && expansion(10, 2, 9).unwrap().to_string() == "22.923148030"
            && expansion(10, 3, 9).unwrap().to_string() == "22.920852925";
        checks.push(check("asymptotics/expansion-base-10-rows", rows_ok, "nterms 0..=3"));

        let bases: &[u64] = if quick { &[10, 50] } else { &[10, 20, 50, 100, 200, 500, 1000] };
        let lo = Decimal::from_int(1, 20);
        let hi = Decimal::from_int(3, 20);
        let mut interval = true;
        let mut b10 = String::new();
        for &b in bases {
            let r = error_ratio(b, 20).unwrap();
            interval &= r.cmp_value(&lo) != std::cmp::Ordering::Less
                && r.cmp_value(&hi) != std::cmp::Ordering::Greater;
            if b == 10 {
                let low: Decimal = "1.762".parse().unwrap();
                let high: Decimal = "1.764".parse().unwrap();
                interval &= r.cmp_value(&low) == std::cmp::Ordering::Greater
                    && r.cmp_value(&high) == std::cmp::Ordering::Less;
                b10 = r.with_scale(4).to_string();
            }
        }
        checks.push(check(
            "asymptotics/error-ratio-interval",
            interval,
            format!("in [1,3] for {bases:?}; b=10 ratio {b10}"),
        ));
    }

    // fischer
    {
        let count = if quick { 20 } else { 60 };
        let betas = fischer_betas(count);
        let moments = compute_moments(10, count).unwrap();
        let identity = (0..=count).all(|m| {
            let (num, den) = moments_raw(&moments, m);
            betas.equals_ratio(m, &num, &den)
        });
        checks.push(check("fischer/beta-equals-v-base-10", identity, format!("m<={count}")));

        let residuals = (1..=count).all(|m| recurrence_residual(&betas, m) == rat_int(0));
        checks.push(check("fischer/recurrence-residuals-zero", residuals, format!("m<={count}")));

        let in_range = (0..=count)
            .all(|m| betas.value(m) > rat_int(0) && betas.value(m) <= rat_int(10));
        checks.push(check("fischer/betas-in-(0,10]", in_range, format!("m<={count}")));

        let prec = if quick { 12 } else { 30 };
        let fs = fischer_sum(prec);
        let ks = kempner_sum(10, prec).unwrap().value;
        let agree = within(&fs, &ks, &Decimal::one_ulp(prec - 1));
        checks.push(check(
            "fischer/agrees-with-kempner",
            agree,
            format!("{prec} digits: {fs} vs {ks}"),
        ));
    }

    // oracle
    {
        let limit = crate::max_terms_from_env();
        let lmax = if quick { 4 } else { 6 };
        let mut contained = true;
        let mut counts = true;
        for &b in &[3u64, 4, 5, 10] {
            let k = kempner_sum(b, 12).unwrap().value.to_rational();
            for l in 1..=lmax {
                let br = bracket(b, l, limit).unwrap();
                contained &= br.contains(&k);
            }
            let report = kempner_core::oracle::enumerate_levels(b, lmax, limit).unwrap();
            for entry in &report {
                counts &= entry.count == level_count(b, entry.level);
            }
        }
        checks.push(check("oracle/brackets-contain-kempner", contained, format!("b in {{3,4,5,10}}, L<={lmax}")));
        checks.push(check("oracle/level-counts", counts, "(b-2)(b-1)^(l-1)"));

        let empty = enumerate_partial(2, 10, limit).unwrap() == rat_int(0);
        checks.push(check("oracle/base-2-empty", empty, "K(2,1) = 0"));
    }

    checks
}

fn moments_raw(table: &kempner_core::moments::MomentTable, m: u32) -> (BigInt, BigInt) {
    let v = table.value(m);
    (v.numer().clone(), v.denom().clone())
}
