//! Cross-ratios of the four marked points on each tetrahedron edge.
//!
//! Each edge of the coordinate tetrahedron carries four distinguished
//! points: its two vertices, and the two points where the residual lines
//! of the adjacent faces meet it.  Their cross-ratio `λ_{ij}` is a
//! projective invariant of the quartic; in coefficients,
//!
//! ```text
//! λ₁₂ = a₁b₀/(a₀b₁)   λ₁₃ = a₂c₀/(a₀c₂)   λ₁₄ = b₃c₀/(b₀c₃)
//! λ₂₃ = a₂d₁/(a₁d₂)   λ₂₄ = b₃d₁/(b₁d₃)   λ₃₄ = c₃d₂/(c₂d₃)
//! ```
//!
//! subject to the single multiplicative relation
//! `λ₁₂·λ₁₄·λ₂₃·λ₃₄ = λ₁₃·λ₂₄`.
//!
//! Two independent routes are provided: [`cross_ratios`] evaluates the
//! closed formulas, while [`cross_ratio_oracle`] recomputes each value
//! from scratch as an honest cross-ratio of four concrete points on the
//! edge.  [`cross_ratio_relation_symbolic`] proves the relation once and
//! for all as a polynomial identity in the twelve coefficients.

use num_traits::Zero;

use crate::exactmath::{MultiPoly, Rat};

use super::{QuarticCoefficients, QuarticError, TetraQuartic};

/// The six tetrahedron edges in canonical order, as vertex pairs.
pub const EDGES: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// The six edge cross-ratios of a tetrahedral quartic, in [`EDGES`]
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRatios {
    pub values: [Rat; 6],
}

impl CrossRatios {
    /// The cross-ratio of the edge joining vertices `i < j`.
    pub fn value(&self, i: u8, j: u8) -> &Rat {
        let pos = EDGES
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .expect("edge must be one of the six (i, j) with i < j");
        &self.values[pos]
    }

    /// Both sides of the multiplicative relation:
    /// `(λ₁₂λ₁₄λ₂₃λ₃₄, λ₁₃λ₂₄)`.
    pub fn relation_sides(&self) -> (Rat, Rat) {
        let lhs = self.value(1, 2) * self.value(1, 4) * self.value(2, 3) * self.value(3, 4);
        let rhs = self.value(1, 3) * self.value(2, 4);
        (lhs, rhs)
    }

    /// Whether the multiplicative relation holds.
    pub fn relation_holds(&self) -> bool {
        let (lhs, rhs) = self.relation_sides();
        lhs == rhs
    }

    /// Whether the six values are pairwise distinct.
    pub fn pairwise_distinct(&self) -> bool {
        for i in 0..6 {
            for j in (i + 1)..6 {
                if self.values[i] == self.values[j] {
                    return false;
                }
            }
        }
        true
    }
}

/// Numerator and denominator coefficient names of each `λ_{ij}`, in
/// [`EDGES`] order: `λ = (n₁·n₂)/(d₁·d₂)`.
const FORMULA: [((&str, &str), (&str, &str)); 6] = [
    (("a1", "b0"), ("a0", "b1")),
    (("a2", "c0"), ("a0", "c2")),
    (("b3", "c0"), ("b0", "c3")),
    (("a2", "d1"), ("a1", "d2")),
    (("b3", "d1"), ("b1", "d3")),
    (("c3", "d2"), ("c2", "d3")),
];

fn coefficient<'c>(c: &'c QuarticCoefficients, name: &str) -> &'c Rat {
    let pos = QuarticCoefficients::NAMES
        .iter()
        .position(|n| *n == name)
        .expect("known coefficient name");
    c.as_array()[pos]
}

/// Evaluates the six closed formulas.  Errors with
/// [`QuarticError::DegenerateCoefficient`] naming the first vanishing
/// denominator.
pub fn cross_ratios_from(c: &QuarticCoefficients) -> Result<CrossRatios, QuarticError> {
    let mut values = Vec::with_capacity(6);
    for (edge, ((n1, n2), (d1, d2))) in EDGES.iter().zip(FORMULA.iter()) {
        let den = coefficient(c, d1) * coefficient(c, d2);
        if den.is_zero() {
            return Err(QuarticError::DegenerateCoefficient(format!(
                "edge ({}, {}): denominator {}·{} vanishes",
                edge.0, edge.1, d1, d2
            )));
        }
        values.push(coefficient(c, n1) * coefficient(c, n2) / den);
    }
    Ok(CrossRatios {
        values: values.try_into().expect("six edges"),
    })
}

/// Evaluates the six closed formulas on a surface.
pub fn cross_ratios(quartic: &TetraQuartic) -> Result<CrossRatios, QuarticError> {
    cross_ratios_from(quartic.coeffs())
}

/// A point of an edge in the edge's own homogeneous coordinates
/// `(X_{i−1} : X_{j−1})`.
type EdgePoint = (Rat, Rat);

/// `x_a·y_b − x_b·y_a`, the standard bracket of two points of a
/// projective line; zero exactly when they coincide.
fn bracket(p: &EdgePoint, q: &EdgePoint) -> Rat {
    &p.0 * &q.1 - &q.0 * &p.1
}

/// The classical cross-ratio `(p₁, p₂; p₃, p₄)` via brackets.
fn cross_ratio_of_points(
    p1: &EdgePoint,
    p2: &EdgePoint,
    p3: &EdgePoint,
    p4: &EdgePoint,
) -> Option<Rat> {
    let den = bracket(p1, p4) * bracket(p2, p3);
    if den.is_zero() {
        return None;
    }
    Some(bracket(p1, p3) * bracket(p2, p4) / den)
}

/// Coefficient of `X_{idx}` in a linear form over the space coordinates.
fn linear_coeff(form: &MultiPoly, idx: usize) -> Rat {
    form.terms()
        .find(|(e, _)| e[idx] == 1 && e.iter().map(|&x| x as usize).sum::<usize>() == 1)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero)
}

/// The four marked points of edge `(i, j)` in its own coordinates:
/// vertex `E_i = (1, 0)`, vertex `E_j = (0, 1)`, and the intersections
/// with the residual lines `R_k`, `R_l` of the two adjacent faces
/// (`{k, l}` the complementary vertex pair, `k < l`).
pub fn edge_marked_points(
    quartic: &TetraQuartic,
    i: u8,
    j: u8,
) -> Result<[EdgePoint; 4], QuarticError> {
    assert!(i < j && (1..=4).contains(&i) && (1..=4).contains(&j));
    let complement: Vec<u8> = (1..=4).filter(|v| *v != i && *v != j).collect();
    let (k, l) = (complement[0], complement[1]);
    let residual_point = |m: u8| -> EdgePoint {
        let form = quartic.face_form(m);
        // Restricted to the edge, the face form is m_i·X_{i−1} + m_j·X_{j−1};
        // it vanishes at (m_j : −m_i).
        let mi = linear_coeff(&form, i as usize - 1);
        let mj = linear_coeff(&form, j as usize - 1);
        (mj, -mi)
    };
    let pk = residual_point(k);
    let pl = residual_point(l);
    for (m, p) in [(k, &pk), (l, &pl)] {
        if p.0.is_zero() && p.1.is_zero() {
            return Err(QuarticError::DegenerateCoefficient(format!(
                "residual line R{m} contains the whole edge ({i}, {j})"
            )));
        }
    }
    Ok([(Rat::from_integer(1.into()), Rat::zero()), // E_i
        (Rat::zero(), Rat::from_integer(1.into())), // E_j
        pk,
        pl])
}

/// Recomputes all six cross-ratios geometrically, as
/// `(E_j, E_i; P_{R_l}, P_{R_k})` of the four marked points of each
/// edge.  Independent of the closed formulas.
pub fn cross_ratio_oracle(quartic: &TetraQuartic) -> Result<CrossRatios, QuarticError> {
    let mut values = Vec::with_capacity(6);
    for &(i, j) in EDGES.iter() {
        let [ei, ej, pk, pl] = edge_marked_points(quartic, i, j)?;
        let value = cross_ratio_of_points(&ej, &ei, &pl, &pk).ok_or_else(|| {
            QuarticError::DegenerateCoefficient(format!(
                "marked points of edge ({i}, {j}) are not in general position"
            ))
        })?;
        values.push(value);
    }
    Ok(CrossRatios {
        values: values.try_into().expect("six edges"),
    })
}

/// Proves `λ₁₂λ₁₄λ₂₃λ₃₄ = λ₁₃λ₂₄` as a polynomial identity in the
/// twelve coefficients: returns the cross-multiplied difference
/// `N_lhs·D_rhs − N_rhs·D_lhs`, which must be identically zero.
pub fn cross_ratio_relation_symbolic() -> MultiPoly {
    let vars = QuarticCoefficients::NAMES;
    let v = |name: &str| MultiPoly::var(&vars, name);
    let product = |edges: &[usize], numerator: bool| -> MultiPoly {
        let mut acc = MultiPoly::constant_over(&vars, Rat::from_integer(1.into()));
        for &e in edges {
            let ((n1, n2), (d1, d2)) = FORMULA[e];
            let (f1, f2) = if numerator { (n1, n2) } else { (d1, d2) };
            acc = acc.mul(&v(f1)).mul(&v(f2));
        }
        acc
    };
    // Edge indices in EDGES order: λ12=0, λ13=1, λ14=2, λ23=3, λ24=4, λ34=5.
    let lhs_edges = [0usize, 2, 3, 5];
    let rhs_edges = [1usize, 4];
    let n_lhs = product(&lhs_edges, true);
    let d_lhs = product(&lhs_edges, false);
    let n_rhs = product(&rhs_edges, true);
    let d_rhs = product(&rhs_edges, false);
    n_lhs.mul(&d_rhs).sub(&n_rhs.mul(&d_lhs))
}
