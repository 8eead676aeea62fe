//! Integer lattices presented by Gram matrices, and the rank-11 lattice of
//! a four-nodal tetrahedral quartic.
//!
//! A [`GramLattice`] is a free Z-module with a fixed basis and a symmetric
//! integer pairing.  On top of the generic operations (signature,
//! determinant, Smith normal form, Riemann–Roch arithmetic) the
//! [`registry`] submodule pins down the concrete lattice `M` spanned by the
//! six edge classes `L_ij`, the four exceptional classes `E_i`, and one
//! residual class `R_1`, together with every derived divisor class the
//! verification needs (`R_2..R_4`, `H`, `A`, `A_0`, `H'`, `H^v`, `C`).
//!
//! All queries are pure and exact; nothing here is numerical.

pub mod registry;
mod snf;

pub use registry::{del_pezzo_sextic, ClassName, ClassRegistry, IdentityCheck};
pub use snf::{smith_normal_form, SmithNormalForm};

use num_traits::Zero;
use thiserror::Error;

use crate::exactmath::{signature as sym_signature, Int, ZMatrix};

/// Coordinates of a lattice element in the fixed basis.
pub type LatticeVector = Vec<Int>;

/// Failure modes of lattice queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// A vector of the wrong length was paired with this lattice.
    #[error("vector of length {got} paired with a rank-{rank} lattice")]
    LatticeMismatch { rank: usize, got: usize },
    /// Riemann–Roch arithmetic on a class of odd self-intersection — the
    /// lattice in question is even, so this flags caller misuse.
    #[error("class has odd self-intersection {square}; the lattice is even")]
    OddSquare { square: Int },
    /// Adjunction needs a canonical class and none was attached.
    #[error("lattice carries no canonical class")]
    NoCanonicalClass,
    /// A class name outside the registry's vocabulary.
    #[error("unknown class name `{0}`")]
    UnknownName(String),
}

/// Genus and section counts computed from a class `d` with `d² = 2g - 2`
/// on a K3 surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannRoch {
    /// Arithmetic genus `1 + d²/2`.
    pub genus: Int,
    /// `χ(O) + d²/2 = 2 + d²/2` — the Riemann–Roch count of sections.
    pub h0: Int,
    /// Dimension of the target projective space, `h0 - 1`.
    pub ambient_dim: Int,
}

/// A free Z-module with a symmetric integer pairing, optionally carrying a
/// canonical class for adjunction arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: ZMatrix,
    canonical: Option<LatticeVector>,
}

impl GramLattice {
    /// Builds a lattice from a symmetric Gram matrix.
    pub fn new(gram: ZMatrix) -> Self {
        assert!(gram.is_symmetric(), "Gram matrix must be symmetric");
        GramLattice {
            gram,
            canonical: None,
        }
    }

    /// Builds a lattice carrying a canonical class (for surfaces where
    /// adjunction, not K3 Riemann–Roch, gives the genus).
    pub fn with_canonical(gram: ZMatrix, canonical: LatticeVector) -> Self {
        assert!(gram.is_symmetric(), "Gram matrix must be symmetric");
        assert_eq!(gram.size(), canonical.len(), "canonical class length");
        GramLattice {
            gram,
            canonical: Some(canonical),
        }
    }

    /// Rank of the lattice.
    pub fn rank(&self) -> usize {
        self.gram.size()
    }

    /// The Gram matrix.
    pub fn gram(&self) -> &ZMatrix {
        &self.gram
    }

    /// The canonical class, when one was attached.
    pub fn canonical_class(&self) -> Option<&LatticeVector> {
        self.canonical.as_ref()
    }

    fn check_len(&self, v: &[Int]) -> Result<(), LatticeError> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(LatticeError::LatticeMismatch {
                rank: self.rank(),
                got: v.len(),
            })
        }
    }

    /// The pairing `aᵀ · G · b`.
    pub fn intersect(&self, a: &[Int], b: &[Int]) -> Result<Int, LatticeError> {
        self.check_len(a)?;
        self.check_len(b)?;
        let gb = self.gram.mul_vec(b);
        Ok(a.iter().zip(&gb).map(|(x, y)| x * y).sum())
    }

    /// Self-intersection `d²`.
    pub fn square(&self, d: &[Int]) -> Result<Int, LatticeError> {
        self.intersect(d, d)
    }

    /// Whether the lattice is even, i.e. `x² ∈ 2Z` for every `x` — for an
    /// integral symmetric form this is evenness of the diagonal.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (self.gram.entry(i, i) % Int::from(2)).is_zero())
    }

    /// Sylvester inertia `(n₊, n₋, n₀)`, computed exactly.
    pub fn signature(&self) -> (usize, usize, usize) {
        let (pos, neg) = sym_signature(&self.gram);
        (pos, neg, self.rank() - pos - neg)
    }

    /// Determinant of the Gram matrix.
    pub fn determinant(&self) -> Int {
        self.gram.det()
    }

    /// Smith normal form of the Gram matrix; the nonzero elementary
    /// divisors present the discriminant group `M*/M`.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        smith_normal_form(&self.gram)
    }

    /// K3 Riemann–Roch arithmetic for a class with `d² = 2g - 2`:
    /// genus, section count, and ambient projective dimension.  This is
    /// pure lattice arithmetic — no vanishing theorem is claimed.
    pub fn rr_genus(&self, d: &[Int]) -> Result<RiemannRoch, LatticeError> {
        let sq = self.square(d)?;
        let (half, rem) = num_integer::Integer::div_rem(&sq, &Int::from(2));
        if !rem.is_zero() {
            return Err(LatticeError::OddSquare { square: sq });
        }
        let genus = Int::from(1) + &half;
        let h0 = Int::from(2) + &half;
        let ambient_dim = &h0 - Int::from(1);
        Ok(RiemannRoch {
            genus,
            h0,
            ambient_dim,
        })
    }

    /// Adjunction genus `1 + (d² + d·K)/2` on a lattice with canonical
    /// class `K`.
    pub fn adjunction_genus(&self, d: &[Int]) -> Result<Int, LatticeError> {
        let k = self
            .canonical
            .as_ref()
            .ok_or(LatticeError::NoCanonicalClass)?;
        let total = self.square(d)? + self.intersect(d, k)?;
        let (half, rem) = num_integer::Integer::div_rem(&total, &Int::from(2));
        if !rem.is_zero() {
            return Err(LatticeError::OddSquare { square: total });
        }
        Ok(Int::from(1) + half)
    }

    /// If the sum of `classes` is divisible by 2 in the lattice, returns
    /// the half vector `x` with `2x = Σ classes`.  In the fixed basis this
    /// is coordinatewise divisibility.
    pub fn even_set_test(
        &self,
        classes: &[LatticeVector],
    ) -> Result<Option<LatticeVector>, LatticeError> {
        let mut sum = vec![Int::zero(); self.rank()];
        for c in classes {
            self.check_len(c)?;
            for (s, v) in sum.iter_mut().zip(c) {
                *s += v;
            }
        }
        let two = Int::from(2);
        let mut half = Vec::with_capacity(self.rank());
        for s in &sum {
            let (q, r) = num_integer::Integer::div_rem(s, &two);
            if !r.is_zero() {
                return Ok(None);
            }
            half.push(q);
        }
        Ok(Some(half))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[i64]) -> GramLattice {
        let n = entries.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &e) in entries.iter().enumerate() {
            rows[i][i] = e;
        }
        GramLattice::new(ZMatrix::from_i64(
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        ))
    }

    #[test]
    fn signature_and_determinant_of_small_forms() {
        let l = diag(&[2]);
        assert_eq!(l.signature(), (1, 0, 0));
        let l = diag(&[-2, -2]);
        assert_eq!(l.signature(), (0, 2, 0));
        assert_eq!(l.determinant(), Int::from(4));
    }

    #[test]
    fn riemann_roch_arithmetic() {
        // On an even lattice, d² = 4 gives genus 3 and four sections — the
        // numbers of a quartic surface's hyperplane class.
        let l = diag(&[4]);
        let rr = l.rr_genus(&[Int::from(1)]).unwrap();
        assert_eq!(rr.genus, Int::from(3));
        assert_eq!(rr.h0, Int::from(4));
        assert_eq!(rr.ambient_dim, Int::from(3));

        let l = diag(&[3]);
        assert!(matches!(
            l.rr_genus(&[Int::from(1)]),
            Err(LatticeError::OddSquare { .. })
        ));
    }

    #[test]
    fn length_mismatch_is_reported() {
        let l = diag(&[2, 2]);
        assert!(matches!(
            l.intersect(&[Int::from(1)], &[Int::from(1), Int::from(0)]),
            Err(LatticeError::LatticeMismatch { rank: 2, got: 1 })
        ));
    }

    #[test]
    fn adjunction_needs_a_canonical_class() {
        let l = diag(&[2]);
        assert_eq!(
            l.adjunction_genus(&[Int::from(1)]),
            Err(LatticeError::NoCanonicalClass)
        );
        // A line in the plane: h² = 1, h·K = -3, genus 0.
        let plane = GramLattice::with_canonical(
            ZMatrix::from_i64(&[vec![1]]),
            vec![Int::from(-3)],
        );
        assert_eq!(
            plane.adjunction_genus(&[Int::from(1)]).unwrap(),
            Int::zero()
        );
    }

    #[test]
    fn even_set_detection() {
        let l = diag(&[2, 2]);
        let e1 = vec![Int::from(1), Int::from(0)];
        assert_eq!(l.even_set_test(&[e1.clone()]).unwrap(), None);
        assert_eq!(
            l.even_set_test(&[e1.clone(), e1.clone()]).unwrap(),
            Some(e1)
        );
    }
}
