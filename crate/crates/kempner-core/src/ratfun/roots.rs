//! Hardware-precision pole-location certificates.
//!
//! Every pole of `w_m` is a root of `1 - c^m + c^{m+1}`; the smallest
//! modulus over those roots stays at or above `rho`, the real root of
//! `rho^2 (1 + rho) = 1` (about 0.7549). Float accuracy is enough here:
//! the certificate only needs a slack of 1e-6.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// Float supplies cos/sin/abs on f64 in no_std builds (via libm); with std
// the inherent methods shadow it.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 500;
const RESIDUAL_TOL: f64 = 1e-8;

/// The real root of `x^2 (1 + x) = 1`, by bisection on `[0, 1]`.
pub fn rho() -> f64 {
    let f = |x: f64| x * x * (1.0 + x) - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Minimum modulus over all complex roots of `1 - c^m + c^{m+1}`,
/// for `m >= 1`.
pub fn min_pole_modulus(m: u32) -> Result<f64> {
    assert!(m >= 1, "the m = 0 factor is constant and has no roots");
    let degree = m as usize + 1;
    let mut coeffs = vec![0.0f64; degree + 1];
    coeffs[0] = 1.0;
    coeffs[m as usize] = -1.0;
    coeffs[degree] = 1.0;
    let roots = aberth(&coeffs, m)?;
    Ok(roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min))
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Aberth-Ehrlich simultaneous iteration. `coeffs[k]` multiplies `z^k`;
/// the leading coefficient must be nonzero.
fn aberth(coeffs: &[f64], m: u32) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    let max_coeff = coeffs.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));

    // initial guesses on a circle, angles offset to avoid symmetry locks
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = core::f64::consts::TAU * (k as f64 + 0.25) / degree as f64 + 0.4;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..degree {
            let z = roots[k];
            let (p, dp) = horner(coeffs, z);
            worst = worst.max(p.norm());
            if p.norm() <= 1e-14 * max_coeff {
                continue;
            }
            let newton = p / dp;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &other) in roots.iter().enumerate() {
                if j != k {
                    repulsion += (z - other).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            roots[k] = z - newton / denom;
        }
        if worst <= 1e-13 * max_coeff {
            break;
        }
    }

    for &z in &roots {
        let (p, _) = horner(coeffs, z);
        if !(p.norm() <= RESIDUAL_TOL * max_coeff) {
            return Err(Error::RootFindingFailed { m });
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_solves_its_equation() {
        let r = rho();
        assert!((r * r * (1.0 + r) - 1.0).abs() < 1e-12);
        assert!((r - 0.7549).abs() < 1e-4);
    }

    #[test]
    fn unit_circle_roots_for_m_one() {
        // 1 - c + c^2 has both roots on the unit circle
        assert!((min_pole_modulus(1).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn m_two_attains_rho() {
        // -rho is a root of 1 - c^2 + c^3 and has the smallest modulus
        let min = min_pole_modulus(2).unwrap();
        assert!((min - rho()).abs() < 1e-9, "min = {min}");
    }

    #[test]
    fn all_orders_stay_outside_rho_disc() {
        let threshold = rho() - 1e-6;
        for m in 1u32..=50 {
            let min = min_pole_modulus(m).unwrap();
            assert!(min >= threshold, "m={m}: {min} < {threshold}");
        }
    }
}
