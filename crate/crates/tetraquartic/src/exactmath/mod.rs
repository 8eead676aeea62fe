//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream — lattices, discriminant forms, isometries, the
//! quartic geometry — reduces to computations in this module: arbitrary
//! precision rationals ([`Rat`]), sparse multivariate polynomials
//! ([`MultiPoly`]), dense univariate polynomials ([`UniPoly`]), homogeneous
//! binary forms ([`BinaryForm`]), Sylvester resultants, and exact rational
//! root extraction.
//!
//! Determinants over the various coefficient domains share one fraction-free
//! Bareiss elimination, generic over the [`Domain`] trait; the intermediate
//! exact divisions it performs are guaranteed by the Bareiss identity, so
//! the algorithm works over any integral domain with decidable division.

mod binform;
mod cyclotomic;
mod matrix;
mod multipoly;
mod rational;
mod roots;
mod sylvester;
mod unipoly;

pub use binform::BinaryForm;
pub use cyclotomic::{cyclotomic, cyclotomic_indices_up_to_phi};
pub use matrix::{signature, QMatrix, ZMatrix};
pub use multipoly::MultiPoly;
pub use rational::{parse_rat, rat, rat_frac, rat_mod_one, rat_mod_two, rat_sqrt};
pub use roots::rational_roots;
pub use sylvester::resultant_wrt;
pub use unipoly::UniPoly;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Rat = num_rational::BigRational;

/// An integral domain with exact division, as needed by fraction-free
/// Gaussian (Bareiss) elimination.
///
/// `exact_div` must return `Some(q)` with `q * d == self` whenever `d`
/// divides `self` in the domain, and `None` otherwise.
/// Method names carry a `ring_` prefix so they never collide with the
/// `num_traits` and `std::ops` methods of the implementing types.
pub trait Domain: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl Domain for Int {
    fn ring_zero() -> Self {
        num_traits::Zero::zero()
    }
    fn ring_one() -> Self {
        num_traits::One::one()
    }
    fn is_ring_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        use num_integer::Integer;
        if d.is_ring_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_ring_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl Domain for Rat {
    fn ring_zero() -> Self {
        num_traits::Zero::zero()
    }
    fn ring_one() -> Self {
        num_traits::One::one()
    }
    fn is_ring_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_ring_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
///
/// Works over any [`Domain`]; every division performed is exact by the
/// Bareiss identity.  The input is a square matrix given as rows.
pub fn det_bareiss<T: Domain>(mat: &[Vec<T>]) -> T {
    let n = mat.len();
    if n == 0 {
        return T::ring_one();
    }
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<T>> = mat.to_vec();
    let mut sign_flip = false;
    let mut prev = T::ring_one();
    for k in 0..n {
        // Pivot: first row at or below k with a nonzero entry in column k.
        if a[k][k].is_ring_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_ring_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return T::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .ring_mul(&a[i][j])
                    .ring_sub(&a[i][k].ring_mul(&a[k][j]));
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = T::ring_zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.ring_neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn bareiss_integer_determinants() {
        let m = vec![vec![int(2), int(1)], vec![int(7), int(4)]];
        assert_eq!(det_bareiss(&m), int(1));

        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(4), int(5), int(6)],
            vec![int(7), int(8), int(10)],
        ];
        assert_eq!(det_bareiss(&m), int(-3));

        // Singular matrix.
        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(7), int(8), int(10)],
        ];
        assert_eq!(det_bareiss(&m), int(0));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = vec![
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ];
        assert_eq!(det_bareiss(&m), int(-1));
    }
}
