//! The discriminant group of the rank-11 lattice with its finite quadratic
//! form, and the automorphisms preserving that form.
//!
//! For an even nondegenerate lattice `M` the discriminant group is
//! `A_M = M*/M`, carrying the quadratic form `q(x) = x·x mod 2Z` and the
//! bilinear form `b(x, y) = x·y mod Z`, both computed on rational
//! representatives.  Here `A_M ≅ Z/8 ⊕ Z/4 ⊕ Z/4`, generated by the dual
//! basis vectors `ε₁` (dual to `e₁`, order 8), `λ₂₃` and `λ₂₄` (dual to
//! `l₂₃`, `l₂₄`, order 4 each); every element is a coordinate triple
//! `(a, b, c)` modulo `(8, 4, 4)`.
//!
//! The module builds the group from the inverse Gram matrix, re-checks the
//! integer lifts `8ε₁`, `4λ₂₃`, `4λ₂₄` and the reduction of the remaining
//! dual basis vectors to the three generators, enumerates the full group
//! `Aut(A_M, q)` by pruned brute force, and computes the automorphism a
//! lattice isometry induces on `A_M`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{rat, rat_frac, rat_mod_one, rat_mod_two, Int, QMatrix, Rat, ZMatrix};
use crate::lattice::GramLattice;

/// Orders of the fixed generators `(ε₁, λ₂₃, λ₂₄)`.
pub const GENERATOR_ORDERS: [u8; 3] = [8, 4, 4];

/// Basis rows of the inverse Gram matrix serving as generators: `ε₁` is
/// dual to `e₁` (basis index 6), `λ₂₃` and `λ₂₄` dual to `l₂₃`, `l₂₄`
/// (indices 3 and 4).
pub const GENERATOR_ROWS: [usize; 3] = [6, 3, 4];

/// Failure modes of discriminant-form computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscFormError {
    /// The Gram matrix is singular, so `M*/M` is not finite.
    #[error("lattice is degenerate; the discriminant group is not finite")]
    DegenerateLattice,
    /// The lattice is not of the expected discriminant type.
    #[error("discriminant group is not Z/8 + Z/4 + Z/4 on the fixed dual rows")]
    UnexpectedGroupType,
    /// A recorded integer lift disagrees with the dual-basis computation.
    #[error("lift check `{0}` failed")]
    LiftMismatch(String),
    /// The matrix passed for an induced action does not preserve the form.
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
}

/// An element of `A_M` as generator coordinates `(a, b, c)` reduced modulo
/// `(8, 4, 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscElement([u8; 3]);

impl DiscElement {
    /// Builds an element, reducing each coordinate modulo the generator
    /// order.
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        let reduce = |v: i64, m: u8| -> u8 { v.rem_euclid(m as i64) as u8 };
        DiscElement([
            reduce(a, GENERATOR_ORDERS[0]),
            reduce(b, GENERATOR_ORDERS[1]),
            reduce(c, GENERATOR_ORDERS[2]),
        ])
    }

    /// The zero element.
    pub fn zero() -> Self {
        DiscElement([0, 0, 0])
    }

    /// Reduced coordinates.
    pub fn coords(&self) -> [u8; 3] {
        self.0
    }

    /// Group addition.
    pub fn add(&self, other: &DiscElement) -> DiscElement {
        DiscElement::new(
            self.0[0] as i64 + other.0[0] as i64,
            self.0[1] as i64 + other.0[1] as i64,
            self.0[2] as i64 + other.0[2] as i64,
        )
    }

    /// Additive inverse.
    pub fn neg(&self) -> DiscElement {
        DiscElement::new(-(self.0[0] as i64), -(self.0[1] as i64), -(self.0[2] as i64))
    }

    /// Integer multiple `n·x`.
    pub fn scale(&self, n: i64) -> DiscElement {
        DiscElement::new(
            n * self.0[0] as i64,
            n * self.0[1] as i64,
            n * self.0[2] as i64,
        )
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    /// Order of the element in the group.
    pub fn order(&self) -> u32 {
        let component = |v: u8, m: u8| -> u32 {
            let g = num_integer::gcd(v as u32, m as u32);
            m as u32 / g
        };
        let mut o = 1;
        for k in 0..3 {
            o = num_integer::lcm(o, component(self.0[k], GENERATOR_ORDERS[k]));
        }
        o
    }

    /// All 128 elements in lexicographic order.
    pub fn all() -> Vec<DiscElement> {
        let mut out = Vec::with_capacity(128);
        for a in 0..GENERATOR_ORDERS[0] {
            for b in 0..GENERATOR_ORDERS[1] {
                for c in 0..GENERATOR_ORDERS[2] {
                    out.push(DiscElement([a, b, c]));
                }
            }
        }
        out
    }
}

impl fmt::Display for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// An automorphism of `A_M`, recorded by the images of the three
/// generators.  Because the group is the direct sum of the cyclic groups on
/// the generators, any image triple of compatible orders defines an
/// endomorphism; bijectivity is what [`FiniteQuadForm::enumerate_autos`]
/// checks on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscAutomorphism {
    images: [DiscElement; 3],
}

impl DiscAutomorphism {
    /// Builds the endomorphism sending the `k`-th generator to
    /// `images[k]`.  The image orders must divide the generator orders so
    /// the map is well defined.
    pub fn new(images: [DiscElement; 3]) -> Self {
        for k in 0..3 {
            assert!(
                (GENERATOR_ORDERS[k] as u32) % images[k].order() == 0,
                "image order must divide the generator order"
            );
        }
        DiscAutomorphism { images }
    }

    /// The identity map.
    pub fn identity() -> Self {
        DiscAutomorphism {
            images: [
                DiscElement::new(1, 0, 0),
                DiscElement::new(0, 1, 0),
                DiscElement::new(0, 0, 1),
            ],
        }
    }

    /// The negation `x ↦ -x`.
    pub fn negation() -> Self {
        DiscAutomorphism {
            images: [
                DiscElement::new(-1, 0, 0),
                DiscElement::new(0, -1, 0),
                DiscElement::new(0, 0, -1),
            ],
        }
    }

    /// Fixes `ε₁` and negates both `λ` generators.
    pub fn lambda_negation() -> Self {
        DiscAutomorphism {
            images: [
                DiscElement::new(1, 0, 0),
                DiscElement::new(0, -1, 0),
                DiscElement::new(0, 0, -1),
            ],
        }
    }

    /// Generator images.
    pub fn images(&self) -> &[DiscElement; 3] {
        &self.images
    }

    /// Applies the map to an element.
    pub fn apply(&self, x: &DiscElement) -> DiscElement {
        let [a, b, c] = x.coords();
        self.images[0]
            .scale(a as i64)
            .add(&self.images[1].scale(b as i64))
            .add(&self.images[2].scale(c as i64))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &DiscAutomorphism) -> DiscAutomorphism {
        DiscAutomorphism {
            images: [
                self.apply(&other.images[0]),
                self.apply(&other.images[1]),
                self.apply(&other.images[2]),
            ],
        }
    }

    /// Whether the map permutes all 128 elements.
    pub fn is_bijective(&self) -> bool {
        let images: BTreeSet<DiscElement> =
            DiscElement::all().iter().map(|x| self.apply(x)).collect();
        images.len() == 128
    }
}

impl fmt::Display for DiscAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e1 -> {}, l23 -> {}, l24 -> {}",
            self.images[0], self.images[1], self.images[2]
        )
    }
}

/// Closure of a generating set under composition — the subgroup it spans.
/// Returns the sorted element list.
pub fn subgroup_closure(generators: &[DiscAutomorphism]) -> Vec<DiscAutomorphism> {
    let mut known: BTreeSet<DiscAutomorphism> = BTreeSet::new();
    known.insert(DiscAutomorphism::identity());
    let mut frontier: Vec<DiscAutomorphism> = vec![DiscAutomorphism::identity()];
    while let Some(g) = frontier.pop() {
        for h in generators {
            let next = h.compose(&g);
            if known.insert(next) {
                frontier.push(next);
            }
        }
    }
    known.into_iter().collect()
}

/// The discriminant group `A_M` with its quadratic and bilinear forms.
#[derive(Debug, Clone)]
pub struct FiniteQuadForm {
    /// Rational representatives of the three generators in the lattice
    /// basis.
    gens: [Vec<Rat>; 3],
    /// Pairings `gens[i] · gens[j]` as unreduced rationals.
    gen_gram: [[Rat; 3]; 3],
}

/// Constructs `A_M` from the lattice: inverts the Gram matrix, takes the
/// fixed dual rows as generators, and certifies that they present
/// `Z/8 ⊕ Z/4 ⊕ Z/4` (orders are as recorded and the 128 coordinate
/// triples hit pairwise distinct cosets).
pub fn build_disc_group(lat: &GramLattice) -> Result<FiniteQuadForm, DiscFormError> {
    assert!(lat.is_even(), "discriminant forms require an even lattice");
    let ginv = lat
        .gram()
        .to_q()
        .inverse()
        .ok_or(DiscFormError::DegenerateLattice)?;
    let row = |k: usize| -> Vec<Rat> { ginv.rows()[GENERATOR_ROWS[k]].to_vec() };
    let gens = [row(0), row(1), row(2)];

    // Order of a dual vector's coset = lcm of coordinate denominators.
    for (g, expected) in gens.iter().zip(GENERATOR_ORDERS) {
        let mut order = Int::one();
        for c in g {
            order = num_integer::lcm(order, c.denom().clone());
        }
        if order != Int::from(expected) {
            return Err(DiscFormError::UnexpectedGroupType);
        }
    }

    let pair = |x: &[Rat], y: &[Rat]| -> Rat {
        let gy = lat
            .gram()
            .to_q()
            .mul_vec(&y.iter().cloned().collect::<Vec<_>>());
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    };
    let gen_gram = std::array::from_fn(|i| std::array::from_fn(|j| pair(&gens[i], &gens[j])));

    let fq = FiniteQuadForm { gens, gen_gram };

    // Directness: only the zero triple lands in the lattice itself.
    for el in DiscElement::all() {
        let rep = fq.representative(&el);
        let integral = rep.iter().all(|c| c.is_integer());
        if integral != el.is_zero() {
            return Err(DiscFormError::UnexpectedGroupType);
        }
    }
    Ok(fq)
}

impl FiniteQuadForm {
    /// Rational representative of an element in the lattice basis.
    pub fn representative(&self, x: &DiscElement) -> Vec<Rat> {
        let [a, b, c] = x.coords();
        let coeffs = [rat(a as i64), rat(b as i64), rat(c as i64)];
        let mut rep = vec![Rat::zero(); self.gens[0].len()];
        for k in 0..3 {
            for (r, g) in rep.iter_mut().zip(&self.gens[k]) {
                *r += &coeffs[k] * g;
            }
        }
        rep
    }

    /// Generator representative vectors.
    pub fn generators(&self) -> &[Vec<Rat>; 3] {
        &self.gens
    }

    /// The quadratic form `q(x) ∈ Q/2Z`, reduced to `[0, 2)`.
    pub fn q(&self, x: &DiscElement) -> Rat {
        let [a, b, c] = x.coords();
        let v = [rat(a as i64), rat(b as i64), rat(c as i64)];
        let mut total = Rat::zero();
        for i in 0..3 {
            for j in 0..3 {
                total += &v[i] * &v[j] * &self.gen_gram[i][j];
            }
        }
        rat_mod_two(&total)
    }

    /// The bilinear form `b(x, y) ∈ Q/Z`, reduced to `[0, 1)`.
    pub fn b(&self, x: &DiscElement, y: &DiscElement) -> Rat {
        let [a, b, c] = x.coords();
        let [d, e, f] = y.coords();
        let vx = [rat(a as i64), rat(b as i64), rat(c as i64)];
        let vy = [rat(d as i64), rat(e as i64), rat(f as i64)];
        let mut total = Rat::zero();
        for i in 0..3 {
            for j in 0..3 {
                total += &vx[i] * &vy[j] * &self.gen_gram[i][j];
            }
        }
        rat_mod_one(&total)
    }

    /// Expresses a rational vector (an element of `M*` in basis
    /// coordinates) as a generator triple, if its coset is hit — always
    /// true for genuine dual vectors.
    pub fn to_triple(&self, v: &[Rat]) -> Option<DiscElement> {
        DiscElement::all().into_iter().find(|el| {
            let rep = self.representative(el);
            v.iter().zip(&rep).all(|(a, b)| (a - b).is_integer())
        })
    }

    /// Re-derives the integer lifts of the scaled generators and the
    /// reduction of every remaining dual basis vector to the generators,
    /// against the recorded expressions.
    ///
    /// The lift identities assert, e.g., that `8·ε₁` *is* the integer
    /// vector `-6l₁₂ - 6l₁₃ - 6l₁₄ + 4l₂₃ + 4l₂₄ + 4l₃₄ - 13e₁ + e₂ + e₃
    /// + e₄ + 6r₁` of `M`; the reduction identities assert equalities of
    /// cosets in `A_M`, e.g. `λ₁₂ = -2ε₁ - λ₂₃ - λ₂₄`.
    pub fn verify_dual_lifts(&self, lat: &GramLattice) -> Result<Vec<LiftCheck>, DiscFormError> {
        let mut checks = Vec::new();

        // Integer lifts of the scaled generators, in basis order
        // (l12, l13, l14, l23, l24, l34, e1, e2, e3, e4, r1).
        let lifts: [(&str, i64, [i64; 11]); 3] = [
            (
                "lift-8-eps1",
                8,
                [-6, -6, -6, 4, 4, 4, -13, 1, 1, 1, 6],
            ),
            ("lift-4-lam23", 4, [1, 1, 2, -2, 1, 1, 2, 0, 0, 2, 0]),
            ("lift-4-lam24", 4, [1, 2, 1, 1, -2, 1, 2, 0, 2, 0, 0]),
        ];
        for (k, (name, scale, expected)) in lifts.iter().enumerate() {
            let scaled: Vec<Rat> = self.gens[k].iter().map(|c| c * rat(*scale)).collect();
            let ok = scaled
                .iter()
                .zip(expected)
                .all(|(got, want)| *got == rat(*want));
            checks.push(LiftCheck {
                name: name.to_string(),
                ok,
            });
        }

        // Every other dual basis vector reduces to the generators.  Rows
        // refer to the inverse Gram matrix: dual of l12 is row 0, etc.
        let ginv = lat
            .gram()
            .to_q()
            .inverse()
            .ok_or(DiscFormError::DegenerateLattice)?;
        let reductions: [(&str, usize, (i64, i64, i64)); 8] = [
            ("reduce-lam12", 0, (-2, -1, -1)),
            ("reduce-lam13", 1, (2, 0, 1)),
            ("reduce-lam14", 2, (2, 1, 0)),
            ("reduce-lam34", 5, (4, -1, -1)),
            ("reduce-eps2", 7, (3, 2, 2)),
            ("reduce-eps3", 8, (3, 0, 2)),
            ("reduce-eps4", 9, (3, 2, 0)),
            ("reduce-rho", 10, (2, 0, 0)),
        ];
        for (name, dual_row, (a, b, c)) in reductions {
            let v = ginv.rows()[dual_row].to_vec();
            let ok = self.to_triple(&v) == Some(DiscElement::new(a, b, c));
            checks.push(LiftCheck {
                name: name.to_string(),
                ok,
            });
        }
        Ok(checks)
    }

    /// Exhaustively enumerates `Aut(A_M, q)`.
    ///
    /// Candidates for the image of each generator are the elements of the
    /// same order and the same `q` value; each candidate triple is then
    /// kept only if it also preserves the generator `b`-pairings, is
    /// bijective, and preserves `q` on all 128 elements.  The result is
    /// sorted by image triples.
    pub fn enumerate_autos(&self) -> Vec<DiscAutomorphism> {
        let all = DiscElement::all();
        let gen_els = [
            DiscElement::new(1, 0, 0),
            DiscElement::new(0, 1, 0),
            DiscElement::new(0, 0, 1),
        ];
        let candidates: Vec<Vec<DiscElement>> = (0..3)
            .map(|k| {
                let want_order = GENERATOR_ORDERS[k] as u32;
                let want_q = self.q(&gen_els[k]);
                all.iter()
                    .copied()
                    .filter(|x| x.order() == want_order && self.q(x) == want_q)
                    .collect()
            })
            .collect();

        let want_b: [[Rat; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| self.b(&gen_els[i], &gen_els[j]))
        });

        let mut autos = Vec::new();
        for &im0 in &candidates[0] {
            for &im1 in &candidates[1] {
                if self.b(&im0, &im1) != want_b[0][1] {
                    continue;
                }
                for &im2 in &candidates[2] {
                    if self.b(&im0, &im2) != want_b[0][2]
                        || self.b(&im1, &im2) != want_b[1][2]
                    {
                        continue;
                    }
                    let auto = DiscAutomorphism::new([im0, im1, im2]);
                    if !auto.is_bijective() {
                        continue;
                    }
                    if all.iter().all(|x| self.q(&auto.apply(x)) == self.q(x)) {
                        autos.push(auto);
                    }
                }
            }
        }
        autos.sort();
        autos
    }
}

/// Outcome of one lift or reduction re-derivation.
#[derive(Debug, Clone)]
pub struct LiftCheck {
    /// Identifier of the identity re-checked.
    pub name: String,
    /// Whether it held exactly.
    pub ok: bool,
}

/// The automorphism of `A_M` induced by a lattice isometry: generators'
/// rational representatives are mapped through the matrix (columns = basis
/// images) and re-expressed in generator coordinates.
pub fn induced_disc_auto(
    matrix: &ZMatrix,
    lat: &GramLattice,
    fq: &FiniteQuadForm,
) -> Result<DiscAutomorphism, DiscFormError> {
    let g = lat.gram();
    if &matrix.transpose().mul(g).mul(matrix) != g {
        return Err(DiscFormError::NotIsometry);
    }
    let mq: QMatrix = matrix.to_q();
    let mut images = [DiscElement::zero(); 3];
    for k in 0..3 {
        let moved = mq.mul_vec(&fq.generators()[k]);
        images[k] = fq
            .to_triple(&moved)
            .expect("isometries permute dual cosets");
    }
    Ok(DiscAutomorphism::new(images))
}

/// Generator `q`-values as recorded for this lattice: `q(ε₁) = 3/8` and
/// `q(λ₂₃) = q(λ₂₄) = -1/2` in `Q/2Z` (canonical representative `3/2`).
pub fn recorded_generator_q() -> [Rat; 3] {
    [rat_frac(3, 8), rat_frac(3, 2), rat_frac(3, 2)]
}

/// The six vertex-transposition actions on `A_M` as recorded, keyed by the
/// swapped vertex pair.  Together with [`DiscAutomorphism::negation`] and
/// [`DiscAutomorphism::lambda_negation`] they generate the full
/// automorphism group of the quadratic form.
pub fn recorded_transposition_actions() -> [((u8, u8), DiscAutomorphism); 6] {
    let blocks: [((u8, u8), [(i64, i64, i64); 3]); 6] = [
        ((1, 2), [(1, 2, 2), (4, 0, 1), (4, 1, 0)]),
        ((1, 3), [(1, 0, 2), (0, 3, 3), (0, 0, 1)]),
        ((1, 4), [(1, 2, 0), (0, 1, 0), (0, 3, 3)]),
        ((2, 3), [(1, 0, 0), (0, 1, 0), (4, 3, 3)]),
        ((2, 4), [(1, 0, 0), (4, 3, 3), (0, 0, 1)]),
        ((3, 4), [(1, 0, 0), (0, 0, 1), (0, 1, 0)]),
    ];
    blocks.map(|(pair, b)| {
        (
            pair,
            DiscAutomorphism::new(std::array::from_fn(|k| {
                DiscElement::new(b[k].0, b[k].1, b[k].2)
            })),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ClassRegistry;

    fn form() -> (GramLattice, FiniteQuadForm) {
        let lat = GramLattice::new(ClassRegistry::gram_matrix());
        let fq = build_disc_group(&lat).unwrap();
        (lat, fq)
    }

    #[test]
    fn generator_orders_and_q_values() {
        let (_, fq) = form();
        let e = DiscElement::new(1, 0, 0);
        let l23 = DiscElement::new(0, 1, 0);
        let l24 = DiscElement::new(0, 0, 1);
        assert_eq!(e.order(), 8);
        assert_eq!(l23.order(), 4);
        assert_eq!(fq.q(&e), rat_frac(3, 8));
        assert_eq!(fq.q(&l23), rat_frac(3, 2)); // -1/2 mod 2Z
        assert_eq!(fq.q(&l24), rat_frac(3, 2));
        assert_eq!(fq.b(&e, &l23), rat_frac(1, 2));
        assert_eq!(fq.b(&e, &l24), rat_frac(1, 2));
        assert_eq!(fq.b(&l23, &l24), rat_frac(1, 4));
        assert_eq!(fq.q(&DiscElement::zero()), Rat::zero());
    }

    #[test]
    fn q_is_quadratic_and_polarizes_to_b() {
        let (_, fq) = form();
        let xs = [
            DiscElement::new(1, 0, 0),
            DiscElement::new(3, 1, 2),
            DiscElement::new(5, 3, 1),
            DiscElement::new(2, 2, 3),
        ];
        for x in &xs {
            for y in &xs {
                // q(x+y) - q(x) - q(y) = 2 b(x,y) in Q/2Z.
                let lhs = rat_mod_two(&(fq.q(&x.add(y)) - fq.q(x) - fq.q(y)));
                let rhs = rat_mod_two(&(rat(2) * fq.b(x, y)));
                assert_eq!(lhs, rhs);
            }
            // q(3x) = 9 q(x).
            let lhs = fq.q(&x.scale(3));
            let rhs = rat_mod_two(&(rat(9) * fq.q(x)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lifts_and_reductions_hold() {
        let (lat, fq) = form();
        let checks = fq.verify_dual_lifts(&lat).unwrap();
        assert_eq!(checks.len(), 11);
        for c in &checks {
            assert!(c.ok, "lift check {} failed", c.name);
        }
    }

    #[test]
    fn negation_and_lambda_negation_preserve_q() {
        let (_, fq) = form();
        for auto in [DiscAutomorphism::negation(), DiscAutomorphism::lambda_negation()] {
            assert!(auto.is_bijective());
            for x in DiscElement::all() {
                assert_eq!(fq.q(&auto.apply(&x)), fq.q(&x));
            }
        }
    }

    #[test]
    fn closure_of_identity_is_trivial() {
        let group = subgroup_closure(&[DiscAutomorphism::identity()]);
        assert_eq!(group.len(), 1);
        let group = subgroup_closure(&[DiscAutomorphism::negation()]);
        assert_eq!(group.len(), 2);
    }

    #[test]
    fn induced_action_of_identity_is_identity() {
        let (lat, fq) = form();
        let id = ZMatrix::identity(11);
        assert_eq!(
            induced_disc_auto(&id, &lat, &fq).unwrap(),
            DiscAutomorphism::identity()
        );
        // A non-isometry is rejected.
        let bad = ZMatrix::from_i64(
            &(0..11)
                .map(|i| {
                    (0..11)
                        .map(|j| if i == j { 2 } else { 0 })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
        assert_eq!(
            induced_disc_auto(&bad, &lat, &fq),
            Err(DiscFormError::NotIsometry)
        );
    }

    #[test]
    fn enumeration_agrees_with_generated_subgroup() {
        let (_, fq) = form();
        let autos = fq.enumerate_autos();
        let mut gens: Vec<DiscAutomorphism> = recorded_transposition_actions()
            .into_iter()
            .map(|(_, a)| a)
            .collect();
        gens.push(DiscAutomorphism::lambda_negation());
        gens.push(DiscAutomorphism::negation());
        let closure = subgroup_closure(&gens);
        assert_eq!(closure.len(), 96);
        assert_eq!(closure, autos);
    }

    #[test]
    fn degenerate_lattice_is_rejected() {
        let lat = GramLattice::new(ZMatrix::from_i64(&[vec![0, 0], vec![0, 2]]));
        assert_eq!(
            build_disc_group(&lat).unwrap_err(),
            DiscFormError::DegenerateLattice
        );
    }
}
