//! Sylvester resultants of multivariate polynomials with respect to one
//! variable.
//!
//! The resultant of `p` and `q` in the variable `v` is the determinant of
//! their Sylvester matrix whose entries are polynomials in the remaining
//! variables; it lies in the ideal `(p, q)`, so it vanishes at every common
//! zero — the backbone of the projection step in the system solver.  The
//! determinant is expanded by fraction-free Bareiss elimination over the
//! polynomial ring.

use super::{det_bareiss, MultiPoly};

/// Sylvester resultant of `p` and `q` with respect to the universe variable
/// at index `var`.  Both polynomials must be nonzero; the result lives in
/// the same universe with `var` absent.
///
/// Degenerate degrees follow the classical conventions:
/// `Res(c, q) = c^deg_v(q)` for `c` free of `v`, and `Res(c, c') = 1`.
pub fn resultant_wrt(p: &MultiPoly, q: &MultiPoly, var: usize) -> MultiPoly {
    assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
    let m = p.degree_in(var).unwrap() as usize;
    let n = q.degree_in(var).unwrap() as usize;
    if m == 0 && n == 0 {
        return MultiPoly::constant_over(
            &p.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            num_traits::One::one(),
        );
    }
    if m == 0 {
        return p.pow(n as u32);
    }
    if n == 0 {
        return q.pow(m as u32);
    }
    let pc = p.coeffs_wrt(var);
    let qc = q.coeffs_wrt(var);
    let size = m + n;
    let zero = MultiPoly::zero_over(
        &p.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    );
    let mut mat = vec![vec![zero; size]; size];
    // n shifted rows of p's coefficients (descending), then m rows of q's.
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = pc[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = qc[n - k].clone();
        }
    }
    det_bareiss(&mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn eliminates_shared_root_locus() {
        // p = x^2 + y^2 - 1, q = x - y: Res_x = 2y^2 - 1 (vanishes exactly
        // where the circle meets the diagonal).
        let u = ["x", "y"];
        let x = MultiPoly::var(&u, "x");
        let y = MultiPoly::var(&u, "y");
        let one = MultiPoly::constant_over(&u, rat(1));
        let p = x.pow(2).add(&y.pow(2)).sub(&one);
        let q = x.sub(&y);
        let r = resultant_wrt(&p, &q, 0);
        assert_eq!(r, y.pow(2).scale(&rat(2)).sub(&one));
    }

    #[test]
    fn resultant_of_coprime_forms_is_nonzero_constant() {
        let u = ["x"];
        let x = MultiPoly::var(&u, "x");
        let one = MultiPoly::constant_over(&u, rat(1));
        // x and x - 1 never vanish together: Res = (x - 1) at 0 = -1.
        let r = resultant_wrt(&x, &x.sub(&one), 0);
        assert_eq!(r.as_constant(), Some(rat(-1)));
    }

    #[test]
    fn constant_in_the_eliminated_variable() {
        let u = ["x", "y"];
        let x = MultiPoly::var(&u, "x");
        let y = MultiPoly::var(&u, "y");
        // Res_x(y, x^2 + 1) = y^2.
        let r = resultant_wrt(&y, &x.pow(2).add(&MultiPoly::constant_over(&u, rat(1))), 0);
        assert_eq!(r, y.pow(2));
    }

    #[test]
    fn matches_univariate_resultant() {
        // Same computation through the dense univariate path.
        let u = ["x"];
        let x = MultiPoly::var(&u, "x");
        let c = |v: i64| MultiPoly::constant_over(&u, rat(v));
        // (x-2)(x+1) and (x-2)(x-5) share the root 2.
        let p = x.sub(&c(2)).mul(&x.add(&c(1)));
        let q = x.sub(&c(2)).mul(&x.sub(&c(5)));
        let r = resultant_wrt(&p, &q, 0);
        assert_eq!(r.as_constant(), Some(rat(0)));
    }
}
