//! Dense square matrices over the integers and the rationals.
//!
//! These are small (rank ≤ 11 in every caller) and always exact, so the
//! implementations favour clarity: fraction-free Bareiss determinants,
//! Gauss–Jordan inversion over the rationals, binary powering, and the
//! Faddeev–LeVerrier recurrence for characteristic polynomials.

use num_traits::{One, Signed, Zero};

use super::{det_bareiss, Int, Rat, UniPoly};

/// A square matrix with integer entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZMatrix {
    rows: Vec<Vec<Int>>,
}

impl ZMatrix {
    /// Builds a matrix from its rows, which must form a square array.
    pub fn new(rows: Vec<Vec<Int>>) -> Self {
        let n = rows.len();
        assert!(n > 0, "empty matrix");
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ZMatrix { rows }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        ZMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![Int::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Int::one();
        }
        ZMatrix { rows }
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.rows[i][j]
    }

    /// Borrow of the underlying rows.
    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &ZMatrix) -> ZMatrix {
        let n = self.size();
        assert_eq!(n, other.size(), "size mismatch");
        let mut rows = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        ZMatrix { rows }
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        let n = self.size();
        assert_eq!(n, v.len(), "size mismatch");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> ZMatrix {
        let n = self.size();
        let mut rows = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[j][i] = self.rows[i][j].clone();
            }
        }
        ZMatrix { rows }
    }

    /// Binary powering; `pow(0)` is the identity.
    pub fn pow(&self, mut e: u64) -> ZMatrix {
        let mut result = ZMatrix::identity(self.size());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        *self == ZMatrix::identity(self.size())
    }

    /// Whether the matrix equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Trace.
    pub fn trace(&self) -> Int {
        (0..self.size()).map(|i| self.rows[i][i].clone()).sum()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Int {
        det_bareiss(&self.rows)
    }

    /// The same matrix over the rationals.
    pub fn to_q(&self) -> QMatrix {
        QMatrix::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|v| Rat::from(v.clone())).collect())
                .collect(),
        )
    }

    /// Characteristic polynomial `det(x·I - self)`, monic of degree `n`,
    /// by the Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> UniPoly {
        let n = self.size();
        let a = self.to_q();
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut mk = a.clone();
        let mut ck = -mk.trace();
        coeffs[n - 1] = ck.clone();
        for k in 2..=n {
            mk = a.mul(&mk.add_scaled_identity(&ck));
            ck = -mk.trace() / Rat::from(Int::from(k as i64));
            coeffs[n - k] = ck.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }
}

/// A square matrix with rational entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<Vec<Rat>>,
}

impl QMatrix {
    /// Builds a matrix from its rows, which must form a square array.
    pub fn new(rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        assert!(n > 0, "empty matrix");
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        QMatrix { rows }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Rat::one();
        }
        QMatrix { rows }
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    /// Borrow of the underlying rows.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        let n = self.size();
        assert_eq!(n, other.size(), "size mismatch");
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        QMatrix { rows }
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        let n = self.size();
        assert_eq!(n, v.len(), "size mismatch");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self + c·I`, used by the characteristic-polynomial recurrence.
    pub fn add_scaled_identity(&self, c: &Rat) -> QMatrix {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] += c;
        }
        QMatrix { rows }
    }

    /// Trace.
    pub fn trace(&self) -> Rat {
        (0..self.size()).map(|i| self.rows[i][i].clone()).sum()
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Rat {
        det_bareiss(&self.rows)
    }

    /// Inverse by Gauss–Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut b = QMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = Rat::one() / a[col][col].clone();
            for j in 0..n {
                a[col][j] *= &inv;
                b[col][j] *= &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &f;
                    a[r][j] -= av;
                    let bv = &b[col][j] * &f;
                    b[r][j] -= bv;
                }
            }
        }
        Some(QMatrix { rows: b })
    }

    /// Integer form of the matrix when every entry is integral.
    pub fn to_int(&self) -> Option<ZMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.is_integer().then(|| v.to_integer()))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ZMatrix::new(rows))
    }

    /// Whether every entry has absolute denominator one.
    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_integer())
    }

    /// Rank over the rationals, by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in (rank + 1)..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[rank][c];
                    a[r][c] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Positive/negative inertia of a symmetric integer matrix, computed by
/// exact symmetric Gaussian reduction (valid in characteristic zero).
pub fn signature(sym: &ZMatrix) -> (usize, usize) {
    assert!(sym.is_symmetric(), "signature needs a symmetric matrix");
    let n = sym.size();
    let mut a: Vec<Vec<Rat>> = sym.to_q().rows.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut start = 0usize;
    while start < n {
        // Find a nonzero diagonal entry; fabricate one by a row/column
        // addition if the diagonal vanishes but the block does not.
        let pivot = (start..n).find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let off = (start..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                match off {
                    None => break, // the rest of the form is zero
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] += v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] += v;
                        }
                        i
                    }
                }
            }
        };
        a.swap(start, pivot);
        for row in a.iter_mut() {
            row.swap(start, pivot);
        }
        let d = a[start][start].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in (start + 1)..n {
            if a[i][start].is_zero() {
                continue;
            }
            let f = &a[i][start] / &d;
            for j in start..n {
                let v = &a[start][j] * &f;
                a[i][j] -= v;
            }
        }
        for j in (start + 1)..n {
            a[start][j] = Rat::zero();
        }
        start += 1;
    }
    (pos, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn charpoly_two_by_two() {
        let a = ZMatrix::from_i64(&[vec![2, 1], vec![1, 2]]);
        // (x-1)(x-3) = x^2 - 4x + 3.
        assert_eq!(
            a.charpoly(),
            UniPoly::from_coeffs(vec![rat(3), rat(-4), rat(1)])
        );
    }

    #[test]
    fn charpoly_constant_term_is_signed_determinant() {
        let a = ZMatrix::from_i64(&[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
        let p = a.charpoly();
        // det(xI - A) at x = 0 is (-1)^n det(A).
        assert_eq!(p.coeff(0), -Rat::from(a.det()));
        assert_eq!(p.leading(), Some(&Rat::one()));
    }

    #[test]
    fn powering_matches_repeated_multiplication() {
        let a = ZMatrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.pow(0), ZMatrix::identity(2));
        assert_eq!(a.pow(5), a.mul(&a).mul(&a).mul(&a).mul(&a));
        // Shear has infinite order: no small power is the identity.
        assert!(!a.pow(7).is_identity());
    }

    #[test]
    fn inverse_round_trip() {
        let a = ZMatrix::from_i64(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 2]]).to_q();
        let inv = a.inverse().expect("nonsingular");
        assert_eq!(a.mul(&inv), QMatrix::identity(3));
        assert_eq!(inv.mul(&a), QMatrix::identity(3));
        assert!(QMatrix::new(vec![vec![Rat::zero()]]).inverse().is_none());
    }

    #[test]
    fn rank_distinguishes_degenerate_forms() {
        let full = ZMatrix::from_i64(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).to_q();
        assert_eq!(full.rank(), 3);
        // Rank-one symmetric matrix (x + y)^2.
        let one = ZMatrix::from_i64(&[vec![1, 1], vec![1, 1]]).to_q();
        assert_eq!(one.rank(), 1);
        assert_eq!(QMatrix::new(vec![vec![Rat::zero()]]).rank(), 0);
        let wide = ZMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]]).to_q();
        assert_eq!(wide.rank(), 2);
    }

    #[test]
    fn signature_of_diagonal_and_hyperbolic_forms() {
        let d = ZMatrix::from_i64(&[vec![2, 0, 0], vec![0, -3, 0], vec![0, 0, -5]]);
        assert_eq!(signature(&d), (1, 2));
        // The hyperbolic plane has a zero diagonal and signature (1, 1).
        let h = ZMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(signature(&h), (1, 1));
    }

    #[test]
    fn signature_counts_only_nonzero_eigenvalues() {
        let a = ZMatrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(signature(&a), (1, 0));
    }
}
