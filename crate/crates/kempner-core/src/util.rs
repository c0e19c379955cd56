//! Small shared helpers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

pub(crate) fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Row `m` of Pascal's triangle: `C(m, 0) ..= C(m, m)`.
pub(crate) fn pascal_row(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..m {
        next_pascal_row(&mut row);
    }
    row
}

/// Advances a Pascal row in place from order `m` to `m + 1`.
pub(crate) fn next_pascal_row(row: &mut Vec<BigInt>) {
    row.push(BigInt::from(1));
    for i in (1..row.len() - 1).rev() {
        let left = row[i - 1].clone();
        row[i] += left;
    }
}

/// Smallest `k` with `n <= 10^k` (0 for `n <= 1`).
pub(crate) fn ceil_log10(n: u64) -> u32 {
    let mut k = 0;
    let mut p = 1u64;
    while p < n {
        p = p.saturating_mul(10);
        k += 1;
    }
    k
}
