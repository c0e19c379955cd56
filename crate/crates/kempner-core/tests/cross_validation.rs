//! Agreement between the three computation routes: moment summation,
//! Fischer's series, and direct enumeration.

use kempner_core::decimal::within;
use kempner_core::fischer::fischer_sum;
use kempner_core::kempner::kempner_sum;
use kempner_core::oracle::{bracket, enumerate_partial};
use kempner_core::rational::rat_int;
use kempner_core::Decimal;

const LIMIT: u64 = 100_000_000;

#[test]
fn brackets_contain_the_summed_value() {
    for &b in &[3u64, 4, 5, 10] {
        let k = kempner_sum(b, 12).unwrap().value.to_rational();
        for levels in 1..=6u32 {
            let br = bracket(b, levels, LIMIT).unwrap();
            assert!(br.contains(&k), "b={b} levels={levels}");
            assert!(br.lower < k, "partial sums are strict lower bounds");
        }
    }
}

#[test]
fn fischer_and_moment_routes_agree() {
    for prec in [9u32, 12, 30] {
        let fischer = fischer_sum(prec);
        let moments = kempner_sum(10, prec).unwrap().value;
        assert!(
            within(&fischer, &moments, &Decimal::one_ulp(prec - 1)),
            "prec={prec}: {fischer} vs {moments}"
        );
    }
}

#[test]
fn reference_table_values() {
    assert_eq!(kempner_sum(100, 9).unwrap().value.to_string(), "460.508587055");
    assert_eq!(kempner_sum(1000, 12).unwrap().value.to_string(), "6907.754454467187");
}

#[test]
fn enumeration_and_summation_agree_at_base_two() {
    assert_eq!(enumerate_partial(2, 20, LIMIT).unwrap(), rat_int(0));
    assert!(kempner_sum(2, 15).unwrap().value.is_zero());
}

#[test]
fn deep_brackets_pin_leading_digits() {
    // at base 3 the enumeration converges fast enough for a tight bracket
    let k = kempner_sum(3, 12).unwrap().value.to_rational();
    let br = bracket(3, 15, LIMIT).unwrap();
    assert!(br.contains(&k));
    let width = br.width();
    assert!(width < kempner_core::rational::rat(1, 100));
}
