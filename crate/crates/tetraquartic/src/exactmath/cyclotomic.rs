//! Cyclotomic polynomials and the indices relevant to a given matrix rank.
//!
//! An integer matrix of finite multiplicative order has a characteristic
//! polynomial that is a product of cyclotomic polynomials `Φ_n`, and `Φ_n`
//! can divide the characteristic polynomial of a rank-`r` matrix only when
//! `φ(n) ≤ r`.  This module generates the `Φ_n` exactly and enumerates all
//! admissible indices for a rank bound, which is what the order-deciding
//! routine strips from a characteristic polynomial.

use super::{rat, UniPoly};

/// Euler's totient by trial-division factorisation (inputs here stay tiny).
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = 1u64;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut pk = 1u64;
            while m % d == 0 {
                m /= d;
                pk *= d;
            }
            phi *= pk - pk / d;
        }
        d += 1;
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by the
/// product of `Φ_d` over the proper divisors `d` of `n`.
pub fn cyclotomic(n: u64) -> UniPoly {
    assert!(n >= 1);
    // x^n - 1.
    let mut coeffs = vec![rat(0); n as usize + 1];
    coeffs[0] = rat(-1);
    coeffs[n as usize] = rat(1);
    let mut num = UniPoly::from_coeffs(coeffs);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = num.div_rem(&cyclotomic(d));
            assert!(r.is_zero(), "x^n - 1 must be divisible by each Φ_d");
            num = q;
        }
    }
    num
}

/// All indices `n` with `φ(n) ≤ bound`, ascending.
///
/// Since `φ(n) ≥ √(n/2)`, scanning `n ≤ 2·bound²` is exhaustive.
pub fn cyclotomic_indices_up_to_phi(bound: u64) -> Vec<u64> {
    (1..=2 * bound * bound)
        .filter(|&n| euler_phi(n) <= bound)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_small_values() {
        let expect = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), *e);
        }
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn first_cyclotomics() {
        assert_eq!(cyclotomic(1), UniPoly::from_coeffs(vec![rat(-1), rat(1)]));
        assert_eq!(cyclotomic(2), UniPoly::from_coeffs(vec![rat(1), rat(1)]));
        assert_eq!(
            cyclotomic(4),
            UniPoly::from_coeffs(vec![rat(1), rat(0), rat(1)])
        );
        assert_eq!(
            cyclotomic(6),
            UniPoly::from_coeffs(vec![rat(1), rat(-1), rat(1)])
        );
        // Φ_12 = x^4 - x^2 + 1.
        assert_eq!(
            cyclotomic(12),
            UniPoly::from_coeffs(vec![rat(1), rat(0), rat(-1), rat(0), rat(1)])
        );
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=30 {
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn product_over_divisors_reconstructs_xn_minus_one() {
        let n = 12u64;
        let mut prod = UniPoly::constant(rat(1));
        for d in 1..=n {
            if n % d == 0 {
                prod = prod.mul(&cyclotomic(d));
            }
        }
        let mut coeffs = vec![rat(0); n as usize + 1];
        coeffs[0] = rat(-1);
        coeffs[n as usize] = rat(1);
        assert_eq!(prod, UniPoly::from_coeffs(coeffs));
    }

    #[test]
    fn indices_for_rank_eleven() {
        // φ(n) ≤ 11 forces n into this list; note 30 qualifies (φ = 8).
        let got = cyclotomic_indices_up_to_phi(11);
        assert_eq!(
            got,
            vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 22, 24, 30]
        );
    }
}
