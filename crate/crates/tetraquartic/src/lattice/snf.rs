//! Smith normal form of square integer matrices with transformation
//! witnesses.
//!
//! The decomposition returns `U·A·V = D` with `U`, `V` unimodular and `D`
//! diagonal whose entries form a divisibility chain.  Witness matrices make
//! the result self-certifying: callers can re-multiply and compare instead
//! of trusting the elimination.  Pivots are chosen by smallest nonzero
//! absolute value, which keeps intermediate entries small at the ranks used
//! here.

use num_traits::{Signed, Zero};

use crate::exactmath::{Int, ZMatrix};

/// The decomposition `U·A·V = D` produced by [`smith_normal_form`].
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    /// Diagonal entries of `D`, nonnegative, each dividing the next.
    pub divisors: Vec<Int>,
    /// Unimodular row transformation.
    pub u: ZMatrix,
    /// Unimodular column transformation.
    pub v: ZMatrix,
}

impl SmithNormalForm {
    /// The diagonal matrix `D` itself.
    pub fn diagonal_matrix(&self) -> ZMatrix {
        let n = self.divisors.len();
        let mut rows = vec![vec![Int::zero(); n]; n];
        for (i, d) in self.divisors.iter().enumerate() {
            rows[i][i] = d.clone();
        }
        ZMatrix::new(rows)
    }
}

/// Computes the Smith normal form of a square integer matrix.
pub fn smith_normal_form(a: &ZMatrix) -> SmithNormalForm {
    let n = a.size();
    let mut m: Vec<Vec<Int>> = a.rows().to_vec();
    let mut u: Vec<Vec<Int>> = ZMatrix::identity(n).rows().to_vec();
    let mut v: Vec<Vec<Int>> = ZMatrix::identity(n).rows().to_vec();

    for t in 0..n {
        'pivot: loop {
            // Smallest-magnitude nonzero entry of the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !m[i][j].is_zero()
                        && best
                            .map(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match best {
                None => break 'pivot, // trailing block is zero
                Some(p) => p,
            };
            if pi != t {
                m.swap(t, pi);
                u.swap(t, pi);
            }
            if pj != t {
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
            }

            // Clear column t below the pivot, then row t to its right.
            let mut clean = true;
            for i in t + 1..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                if !q.is_zero() {
                    for j in 0..n {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                        let s = &q * &u[t][j];
                        u[i][j] -= s;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                if !q.is_zero() {
                    for i in 0..n {
                        let s = &q * &m[i][t];
                        m[i][j] -= s;
                        let s = &q * &v[i][t];
                        v[i][j] -= s;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot; // remainders became new, smaller entries
            }

            // Pivot must divide everything that remains; if not, pull the
            // offending row up and restart the reduction at this pivot.
            for i in t + 1..n {
                for j in t + 1..n {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        for k in 0..n {
                            let s = m[i][k].clone();
                            m[t][k] += s;
                            let s = u[i][k].clone();
                            u[t][k] += s;
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if m[t][t].is_negative() {
            for k in 0..n {
                m[t][k] = -m[t][k].clone();
                u[t][k] = -u[t][k].clone();
            }
        }
    }

    SmithNormalForm {
        divisors: (0..n).map(|i| m[i][i].clone()).collect(),
        u: ZMatrix::new(u),
        v: ZMatrix::new(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &ZMatrix) -> SmithNormalForm {
        let snf = smith_normal_form(a);
        // Reconstruction U·A·V = D.
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.diagonal_matrix());
        // Witnesses are unimodular.
        assert!(snf.u.det().abs().is_one());
        assert!(snf.v.det().abs().is_one());
        // Divisibility chain (zeros may only trail).
        for w in snf.divisors.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        snf
    }

    #[test]
    fn identity_and_diagonal_inputs() {
        let snf = check(&ZMatrix::identity(4));
        assert!(snf.divisors.iter().all(|d| d.is_one()));

        let snf = check(&ZMatrix::from_i64(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(snf.divisors, vec![Int::from(2), Int::from(4)]);

        // Out-of-order diagonal gets sorted into a chain.
        let snf = check(&ZMatrix::from_i64(&[vec![4, 0], vec![0, 2]]));
        assert_eq!(snf.divisors, vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn divisibility_forces_a_merge() {
        // diag(2, 3) has coprime entries: divisors are 1 and 6.
        let snf = check(&ZMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.divisors, vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn singular_matrix_gets_trailing_zero() {
        let snf = check(&ZMatrix::from_i64(&[vec![2, 4], vec![1, 2]]));
        assert_eq!(snf.divisors, vec![Int::from(1), Int::from(0)]);
    }

    #[test]
    fn dense_example_reconstructs_and_multiplies_out() {
        let a = ZMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = check(&a);
        let prod: Int = snf.divisors.iter().product();
        assert_eq!(prod, a.det().abs());
    }
}
