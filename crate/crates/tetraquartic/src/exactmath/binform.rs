//! Homogeneous binary forms over the rationals.
//!
//! A [`BinaryForm`] of degree `d` stores the `d + 1` coefficients of
//! `s^(d-i) t^i` for `i = 0..=d`.  These carry restrictions of plane curves
//! to parametrized lines and conics; the central operation is the exact
//! perfect-square test used by the tritangency certificates.

use super::{rat_sqrt, MultiPoly, Rat, UniPoly};
use num_traits::{One, Zero};

/// Homogeneous polynomial in two variables `(s, t)` of a declared degree.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    /// `coeffs[i]` multiplies `s^(degree - i) * t^i`; length is `degree + 1`.
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    /// Build from coefficients of `s^(d-i) t^i`, `i` ascending; the degree
    /// is `coeffs.len() - 1`.  The all-zero list of a given length is the
    /// zero form of that degree.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a declared degree");
        BinaryForm { coeffs }
    }

    /// Extract from a polynomial that must be homogeneous in exactly the
    /// two named variables (all other universe variables absent).
    pub fn from_multipoly(p: &MultiPoly, s: &str, t: &str, degree: usize) -> Self {
        let si = p.var_index(s).expect("missing s variable");
        let ti = p.var_index(t).expect("missing t variable");
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (e, c) in p.terms() {
            let (es, et) = (e[si] as usize, e[ti] as usize);
            assert!(
                es + et == degree,
                "polynomial is not homogeneous of degree {degree}"
            );
            for (i, &x) in e.iter().enumerate() {
                assert!(
                    i == si || i == ti || x == 0,
                    "polynomial involves variables besides {s}, {t}"
                );
            }
            coeffs[et] = c.clone();
        }
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let d = self.degree();
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..(d - i) {
                term *= s;
            }
            for _ in 0..i {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree() + other.degree();
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Multiplicity of `t` (order of vanishing at the point `(1:0)`);
    /// `None` for the zero form.
    pub fn ord_t(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicity of `s` (order of vanishing at `(0:1)`).
    pub fn ord_s(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|i| self.degree() - i)
    }

    /// Convert to the polynomial ring in `(s, t)`.
    pub fn to_multipoly(&self) -> MultiPoly {
        let d = self.degree();
        MultiPoly::from_terms(
            &["s", "t"],
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![(d - i) as u16, i as u16], c.clone())),
        )
    }

    /// Exact division by another form; `None` if it does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.degree() < d.degree() {
            return if self.is_zero() {
                // 0 of smaller degree cannot hold the quotient's degree.
                None
            } else {
                None
            };
        }
        let q = self.to_multipoly().exact_div(&d.to_multipoly())?;
        let qd = self.degree() - d.degree();
        Some(BinaryForm::from_multipoly(&q, "s", "t", qd))
    }

    /// The linear form vanishing at the projective point `(s0 : t0)`.
    pub fn vanishing_line(s0: &Rat, t0: &Rat) -> Self {
        assert!(
            !(s0.is_zero() && t0.is_zero()),
            "(0, 0) is not a projective point"
        );
        BinaryForm {
            coeffs: vec![t0.clone(), -s0.clone()],
        }
    }

    /// Multiplicity of the projective root `(s0 : t0)`.
    pub fn root_multiplicity(&self, s0: &Rat, t0: &Rat) -> usize {
        if self.is_zero() {
            panic!("root multiplicity of the zero form");
        }
        let line = Self::vanishing_line(s0, t0);
        let mut m = 0;
        let mut f = self.clone();
        while f.degree() >= 1 {
            match f.exact_div(&line) {
                Some(g) => {
                    m += 1;
                    f = g;
                }
                None => break,
            }
        }
        m
    }

    /// Dehomogenization `f(1, x)` as a univariate polynomial.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// True iff all projective roots (over the complex numbers) are
    /// simple.  Both coordinate roots and the affine part are examined.
    pub fn has_distinct_roots(&self) -> bool {
        assert!(!self.is_zero(), "root structure of the zero form");
        let a = self.ord_s().unwrap();
        let b = self.ord_t().unwrap();
        if a > 1 || b > 1 {
            return false;
        }
        // Strip s^a t^b; the rest has nonzero ends, so its dehomogenization
        // keeps full degree and all its roots are affine and nonzero.
        let core: Vec<Rat> = self.coeffs[b..self.coeffs.len() - a].to_vec();
        let u = UniPoly::from_coeffs(core);
        match u.degree() {
            None | Some(0) => true,
            Some(_) => u.gcd(&u.derivative()).degree() == Some(0),
        }
    }

    /// Exact square root over the rationals: `Some(g)` with `g * g == self`.
    ///
    /// The returned root has positive first nonzero coefficient.  The zero
    /// form of even degree returns the zero form of half degree.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let d = self.degree();
        if d % 2 != 0 {
            return None;
        }
        if self.is_zero() {
            return Some(BinaryForm {
                coeffs: vec![Rat::zero(); d / 2 + 1],
            });
        }
        let (c0, g) = self.sqrt_up_to_scalar()?;
        let gamma = rat_sqrt(&c0)?;
        let root = g.scale(&gamma);
        debug_assert!(root.mul(&root) == *self);
        Some(root)
    }

    /// Decomposition `self = c * g^2` with `g` rational and the first
    /// nonzero coefficient of `g` equal to 1, if one exists.  This decides
    /// squareness over the rationals extended by one square root of the
    /// scalar `c`.
    pub fn sqrt_up_to_scalar(&self) -> Option<(Rat, Self)> {
        let d = self.degree();
        if d % 2 != 0 || self.is_zero() {
            return None;
        }
        let b = self.ord_t().unwrap();
        let a = self.ord_s().unwrap();
        if a % 2 != 0 || b % 2 != 0 {
            return None;
        }
        let e = d - a - b;
        debug_assert!(e % 2 == 0);
        // Normalized core u with u[0] = 1.
        let c0 = self.coeffs[b].clone();
        let u: Vec<Rat> = self.coeffs[b..=b + e].iter().map(|c| c / &c0).collect();
        // Formal square root h of u by coefficient recursion:
        // u_j = sum_{i} h_i h_{j-i}.
        let half = e / 2;
        let mut h = vec![Rat::zero(); half + 1];
        h[0] = Rat::one();
        for j in 1..=half {
            let mut s = Rat::zero();
            for i in 1..j {
                if i <= half && j - i <= half {
                    s += &h[i] * &h[j - i];
                }
            }
            h[j] = (&u[j] - s) / Rat::from_integer(2.into());
        }
        // Assemble candidate g = s^(a/2) t^(b/2) h and verify c0 * g^2 == self.
        let mut g_coeffs = vec![Rat::zero(); d / 2 + 1];
        for (j, hj) in h.iter().enumerate() {
            g_coeffs[b / 2 + j] = hj.clone();
        }
        let g = BinaryForm { coeffs: g_coeffs };
        if g.mul(&g).scale(&c0) == *self {
            Some((c0, g))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_frac};

    fn form(cs: &[i64]) -> BinaryForm {
        BinaryForm::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn square_of_difference_of_squares() {
        // (s^2 - t^2)^2 = s^4 - 2 s^2 t^2 + t^4.
        let f = form(&[1, 0, -2, 0, 1]);
        let g = f.sqrt_exact().unwrap();
        assert_eq!(g, form(&[1, 0, -1]));
    }

    #[test]
    fn non_square_is_rejected() {
        // s^4 + t^4 is not a square.
        assert!(form(&[1, 0, 0, 0, 1]).sqrt_exact().is_none());
        // Odd degree can never be a square.
        assert!(form(&[1, 0, 0, 1]).sqrt_exact().is_none());
        // 2*(s+t)^2 is a square only up to the scalar 2.
        let f = form(&[2, 4, 2]);
        assert!(f.sqrt_exact().is_none());
        let (c, g) = f.sqrt_up_to_scalar().unwrap();
        assert_eq!(c, rat(2));
        assert_eq!(g, form(&[1, 1]));
    }

    #[test]
    fn monomial_multiplicities() {
        // s^2 t^3 (s + t)
        let f = BinaryForm::vanishing_line(&rat(-1), &rat(1));
        let st = form(&[0, 1]); // t
        let s = form(&[1, 0]);
        let p = s.mul(&s).mul(&st).mul(&st).mul(&st).mul(&f);
        assert_eq!(p.ord_s(), Some(2));
        assert_eq!(p.ord_t(), Some(3));
        assert!(!p.has_distinct_roots());
        assert_eq!(p.root_multiplicity(&rat(0), &rat(1)), 2);
        assert_eq!(p.root_multiplicity(&rat(1), &rat(0)), 3);
        assert_eq!(p.root_multiplicity(&rat(-1), &rat(1)), 1);
        assert_eq!(p.root_multiplicity(&rat(1), &rat(1)), 0);
    }

    #[test]
    fn distinct_root_detection() {
        // s t (s + t): three simple roots.
        let p = form(&[1, 0]).mul(&form(&[0, 1])).mul(&form(&[1, 1]));
        assert!(p.has_distinct_roots());
        // s (s + t)^2 has a double root.
        let q = form(&[1, 0]).mul(&form(&[1, 1])).mul(&form(&[1, 1]));
        assert!(!q.has_distinct_roots());
    }

    #[test]
    fn division_and_multiplication_round_trip() {
        let a = form(&[1, 2, 3]);
        let b = form(&[-1, 1, 5, 7]);
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert!(p.exact_div(&form(&[1, 1])).is_none());
    }

    #[test]
    fn rational_coefficient_square() {
        // (s/2 + 3t)^2 = s^2/4 + 3 s t + 9 t^2.
        let f = BinaryForm::new(vec![rat_frac(1, 4), rat(3), rat(9)]);
        let g = f.sqrt_exact().unwrap();
        assert_eq!(g, BinaryForm::new(vec![rat_frac(1, 2), rat(3)]));
    }
}
