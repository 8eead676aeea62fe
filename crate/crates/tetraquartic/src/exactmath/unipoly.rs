//! Dense univariate polynomials over the rationals.
//!
//! [`UniPoly`] stores ascending coefficients with a nonzero leading entry;
//! the zero polynomial is the empty list, so its degree is `None` rather
//! than a sentinel integer.  This is the carrier for one-variable
//! elimination: gcds, squarefree parts, resultants, and discriminants.

use super::{det_bareiss, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from univariate elimination primitives.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniPolyError {
    #[error("resultant requires nonzero polynomials")]
    ZeroPolynomial,
    #[error("discriminant requires degree at least 1")]
    DegreeZero,
}

/// Dense univariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    /// Ascending coefficients; invariant: empty, or last entry nonzero.
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rat::one())
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Ascending coefficients (empty for zero).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Multiplicity of the root 0 (number of trailing zero coefficients);
    /// `None` for the zero polynomial.
    pub fn ord_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(Rat::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dlc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![
            Rat::zero();
            self.coeffs.len().saturating_sub(d.coeffs.len()) + 1
        ];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let f = r.leading().unwrap() / &dlc;
            let k = rd - dd;
            q[k] = f.clone();
            r = r.sub(&d.mul(&Self::monomial(k, f)));
        }
        (Self::from_coeffs(q), r)
    }

    /// Monic form; panics on zero.
    pub fn monic(&self) -> Self {
        let lc = self.leading().expect("monic of zero polynomial").clone();
        self.scale(&(Rat::one() / lc))
    }

    /// Monic greatest common divisor (Euclid); `gcd(0, p) = monic p`,
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Monic squarefree part `p / gcd(p, p')`; its degree equals the
    /// number of distinct complex roots of `p`.  Panics on zero input.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Sylvester resultant of two nonzero polynomials.
    pub fn resultant(&self, other: &Self) -> Result<Rat, UniPolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(UniPolyError::ZeroPolynomial);
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        if m == 0 {
            // Res(c, g) = c^deg(g)
            return Ok(pow_rat(self.leading().unwrap(), n as u32));
        }
        if n == 0 {
            return Ok(pow_rat(other.leading().unwrap(), m as u32));
        }
        let size = m + n;
        let mut mat = vec![vec![Rat::zero(); size]; size];
        // n rows of self's coefficients (descending), then m rows of other's.
        for (row, item) in mat.iter_mut().enumerate().take(n) {
            for k in 0..=m {
                item[row + k] = self.coeff(m - k);
            }
        }
        for row in 0..m {
            for k in 0..=n {
                mat[n + row][row + k] = other.coeff(n - k);
            }
        }
        Ok(det_bareiss(&mat))
    }

    /// Discriminant `(-1)^(n(n-1)/2) * Res(p, p') / lc(p)`.
    pub fn discriminant(&self) -> Result<Rat, UniPolyError> {
        let n = self.degree().filter(|&n| n >= 1).ok_or(UniPolyError::DegreeZero)?;
        if n == 1 {
            return Ok(Rat::one());
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        Ok(sign * res / self.leading().unwrap())
    }

    /// Primitive integer form: returns `(coeffs, content)` with integer
    /// coefficients of content 1 and positive leading coefficient, such
    /// that `self = content * primitive`.  Panics on zero.
    pub fn primitive_integer(&self) -> (Vec<Int>, Rat) {
        assert!(!self.is_zero());
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        let mut prim: Vec<Int> = ints.iter().map(|v| v / &g).collect();
        let mut content = Rat::new(g, den_lcm);
        if prim.last().unwrap().is_negative() {
            for p in &mut prim {
                *p = -&*p;
            }
            content = -content;
        }
        (prim, content)
    }
}

fn pow_rat(base: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= base;
    }
    acc
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_frac};

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(poly(&[0]).degree(), None);
        assert_eq!(poly(&[5]).degree(), Some(0));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - a, x - b) = a - b for a=3, b=5.
        let p = poly(&[-3, 1]);
        let q = poly(&[-5, 1]);
        assert_eq!(p.resultant(&q).unwrap(), rat(3 - 5));
        // Res(x^2, x + 1) = 1 (evaluation at the root -1).
        assert_eq!(poly(&[0, 0, 1]).resultant(&poly(&[1, 1])).unwrap(), rat(1));
        assert_eq!(
            UniPoly::zero().resultant(&poly(&[1, 1])),
            Err(UniPolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn classic_discriminants() {
        // x^2 + bx + c -> b^2 - 4c, with b=3, c=1.
        assert_eq!(poly(&[1, 3, 1]).discriminant().unwrap(), rat(5));
        // x^3 + px + q -> -4p^3 - 27q^2, with p=2, q=3.
        assert_eq!(
            poly(&[3, 2, 0, 1]).discriminant().unwrap(),
            rat(-4 * 8 - 27 * 9)
        );
        assert_eq!(poly(&[7]).discriminant(), Err(UniPolyError::DegreeZero));
    }

    #[test]
    fn squarefree_part_collapses_multiplicity() {
        // (x-1)^2 (x+2) -> (x-1)(x+2), monic.
        let p = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]));
        let sf = p.squarefree_part();
        assert_eq!(sf, poly(&[-1, 1]).mul(&poly(&[2, 1])).monic());
        // Already squarefree input: unchanged up to monic scaling.
        let q = poly(&[6, -5, 1]).scale(&rat_frac(7, 3));
        assert_eq!(q.squarefree_part(), poly(&[6, -5, 1]).monic());
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        let p = poly(&[-2, 1]).mul(&poly(&[1, 1]));
        let q = poly(&[-2, 1]).mul(&poly(&[5, 1]));
        assert_eq!(p.resultant(&q).unwrap(), rat(0));
        let r = poly(&[1, 1, 1]);
        assert_ne!(p.resultant(&r).unwrap(), rat(0));
    }

    #[test]
    fn primitive_integer_normalization() {
        let p = UniPoly::from_coeffs(vec![rat_frac(-2, 3), rat_frac(4, 9)]);
        let (prim, content) = p.primitive_integer();
        assert_eq!(prim, vec![Int::from(-3), Int::from(2)]);
        assert_eq!(content, rat_frac(2, 9));
    }

    #[test]
    fn division_round_trip() {
        let a = poly(&[1, 0, -3, 1, 2]);
        let b = poly(&[3, 1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }
}
