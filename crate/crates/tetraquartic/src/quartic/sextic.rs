//! The branch sextic of the projection from a vertex node, with its
//! tritangent line, tritangent conic, and tangency cubic.
//!
//! Projecting a tetrahedral quartic from the node `(0:0:0:1)` onto the
//! opposite face exhibits the surface as a double cover of the plane.
//! Writing `F = P·X₃² + Q_c·X₃ + R` in the coordinate `X₃`, the branch
//! curve is the sextic
//!
//! ```text
//! G = Q_c² − 4·P·R
//! P   = b₃X₀X₁ + c₃X₀X₂ + d₃X₁X₂            (image of the node: a conic)
//! Q_c = X₀X₁(b₀X₀+b₁X₁) + X₀X₂(c₀X₀+c₂X₂)
//!     + X₁X₂(d₁X₁+d₂X₂) + δ·X₀X₁X₂          (a cubic)
//! R   = A·X₀X₁X₂                            (the face section)
//! ```
//!
//! Generically `G` has exactly three cusps, at the coordinate points of
//! the plane (the images of the three edges through the node).  Because
//! `R` vanishes on the line `{A = 0}`, on each coordinate line, and `P`
//! vanishes on the conic `{P = 0}`, the sextic restricts to a *perfect
//! square* on all five curves — they are tritangent (tangent wherever
//! they meet).  The cubic `{Q_c = 0}` passes through all nine honest
//! tangency points and through the cusps, matching the cusp tangent
//! lines: all of this is verified exactly here.

use num_traits::{One, Zero};

use crate::exactmath::{BinaryForm, MultiPoly, Rat};

use super::singular::{classify_from_expansion, normalize_projective};
use super::{
    homogeneous_parts, PointType, QuarticError, SingularityReport, TetraQuartic, PLANE_VARS,
    SYMBOLIC_VARS,
};

/// The branch data of the projection from the node `(0:0:0:1)`: all
/// polynomials live on the plane `X₃ = 0` in the variables `X₀, X₁, X₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSextic {
    /// The branch sextic `G = Q_c² − 4PR`.
    pub sextic: MultiPoly,
    /// The tritangent conic `P` (image of the projection node).
    pub tritangent_conic: MultiPoly,
    /// The tangency cubic `Q_c` (middle coefficient of `F` in `X₃`).
    pub tangency_cubic: MultiPoly,
    /// The tritangent line `A` (the residual line of the opposite face).
    pub tritangent_line: MultiPoly,
}

/// The five tritangent curves of the branch sextic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentCurve {
    /// The residual line `{A = 0}`.
    Line,
    /// The conic `{P = 0}` through the three cusps.
    Conic,
    /// The coordinate line `{X_i = 0}` (image of a tetrahedron edge
    /// avoiding the node), `i ∈ {0, 1, 2}`.
    Edge(usize),
}

impl std::fmt::Display for TangentCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TangentCurve::Line => write!(f, "tritangent line"),
            TangentCurve::Conic => write!(f, "tritangent conic"),
            TangentCurve::Edge(i) => write!(f, "edge X{i} = 0"),
        }
    }
}

/// Contact structure of the sextic along one tritangent curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TritangencyReport {
    pub curve: TangentCurve,
    /// Degree of the exact square root of the pulled-back sextic.
    pub sqrt_degree: usize,
    /// Cusps of the sextic lying on the curve (forced even contacts).
    pub cusp_contacts: usize,
    /// Honest tangency points beyond the cusps.
    pub tangency_contacts: usize,
    /// All contact parameters — cusps and tangencies — are pairwise
    /// distinct on the curve.
    pub contacts_distinct: bool,
}

/// Computes the branch data of the projection from `(0:0:0:1)`.
///
/// Errors with [`QuarticError::NotANode`] when that vertex is not a node
/// (its tangent cone `b₃X₀X₁ + c₃X₀X₂ + d₃X₁X₂` degenerates, i.e.
/// `b₃c₃d₃ = 0`).
pub fn branch_sextic(quartic: &TetraQuartic) -> Result<BranchSextic, QuarticError> {
    let c = quartic.coeffs();
    if (&c.b3 * &c.c3 * &c.d3).is_zero() {
        return Err(QuarticError::NotANode(
            "vertex (0:0:0:1) has a degenerate tangent cone (b3·c3·d3 = 0)".into(),
        ));
    }
    let x3 = quartic
        .f()
        .var_index("X3")
        .expect("quartic universe contains X3");
    let by_x3 = quartic.f().coeffs_wrt(x3);
    assert_eq!(by_x3.len(), 3, "a vertex of multiplicity 2 gives X3-degree 2");
    let to_plane = |p: &MultiPoly| p.with_universe(&PLANE_VARS);
    let r = to_plane(&by_x3[0]);
    let q_cubic = to_plane(&by_x3[1]);
    let p_conic = to_plane(&by_x3[2]);
    let four = MultiPoly::constant_over(&PLANE_VARS, Rat::from_integer(4.into()));
    let sextic = q_cubic
        .mul(&q_cubic)
        .sub(&four.mul(&p_conic).mul(&r));
    let tritangent_line = to_plane(&quartic.face_form(4));
    // The defining identity R = A·X0X1X2 must hold on the nose.
    debug_assert_eq!(
        r,
        tritangent_line.mul(&MultiPoly::var(&PLANE_VARS, "X0"))
            .mul(&MultiPoly::var(&PLANE_VARS, "X1"))
            .mul(&MultiPoly::var(&PLANE_VARS, "X2"))
    );
    Ok(BranchSextic {
        sextic,
        tritangent_conic: p_conic,
        tangency_cubic: q_cubic,
        tritangent_line,
    })
}

/// The branch sextic with all coefficients symbolic, built by the same
/// `X₃`-decomposition route.
pub fn symbolic_branch_sextic() -> MultiPoly {
    let f = super::symbolic_quartic();
    let x3 = f.var_index("X3").expect("X3 in symbolic universe");
    let by_x3 = f.coeffs_wrt(x3);
    let four = MultiPoly::constant_over(&SYMBOLIC_VARS, Rat::from_integer(4.into()));
    by_x3[1]
        .mul(&by_x3[1])
        .sub(&four.mul(&by_x3[2]).mul(&by_x3[0]))
}

/// The branch sextic transcribed directly from its expanded closed form
/// (with general `δ`):
/// `[X₀X₁(b₀X₀+b₁X₁) + X₀X₂(c₀X₀+c₂X₂) + X₁X₂(d₁X₁+d₂X₂) + δX₀X₁X₂]²
///  − 4·(a₀X₀+a₁X₁+a₂X₂)·X₀X₁X₂·(b₃X₀X₁+c₃X₀X₂+d₃X₁X₂)`.
pub fn symbolic_branch_sextic_closed_form() -> MultiPoly {
    let v = |name: &str| MultiPoly::var(&SYMBOLIC_VARS, name);
    let x0 = v("X0");
    let x1 = v("X1");
    let x2 = v("X2");
    let bracket = x0
        .mul(&x1)
        .mul(&v("b0").mul(&x0).add(&v("b1").mul(&x1)))
        .add(&x0.mul(&x2).mul(&v("c0").mul(&x0).add(&v("c2").mul(&x2))))
        .add(&x1.mul(&x2).mul(&v("d1").mul(&x1).add(&v("d2").mul(&x2))))
        .add(&v("delta").mul(&x0).mul(&x1).mul(&x2));
    let a = v("a0").mul(&x0).add(&v("a1").mul(&x1)).add(&v("a2").mul(&x2));
    let conic = v("b3")
        .mul(&x0)
        .mul(&x1)
        .add(&v("c3").mul(&x0).mul(&x2))
        .add(&v("d3").mul(&x1).mul(&x2));
    let four = MultiPoly::constant_over(&SYMBOLIC_VARS, Rat::from_integer(4.into()));
    bracket
        .mul(&bracket)
        .sub(&four.mul(&a).mul(&x0).mul(&x1).mul(&x2).mul(&conic))
}

/// The three cusp points of the branch sextic: the coordinate points of
/// the plane (images of the tetrahedron edges through the node).
pub fn cusp_points() -> [Vec<Rat>; 3] {
    std::array::from_fn(|i| {
        let mut p = vec![Rat::zero(); 3];
        p[i] = Rat::one();
        p
    })
}

/// Classifies a point of a plane curve: smooth / node / cusp / worse.
///
/// A *cusp* is a double point whose tangent cone is a double line not
/// dividing the cubic term of the local expansion.
pub fn classify_plane_point(
    curve: &MultiPoly,
    point: &[Rat],
) -> Result<SingularityReport, QuarticError> {
    assert_eq!(point.len(), 3, "plane points have three coordinates");
    assert_eq!(curve.vars().len(), 3, "plane curves live over three variables");
    let pivot = point
        .iter()
        .position(|c| !c.is_zero())
        .expect("projective point must be nonzero");
    let scaled: Vec<Rat> = point.iter().map(|c| c / &point[pivot]).collect();
    let var_refs: Vec<&str> = curve.vars().iter().map(|s| s.as_str()).collect();
    let mut bindings = std::collections::BTreeMap::new();
    bindings.insert(
        var_refs[pivot].to_string(),
        MultiPoly::constant_over(&var_refs, Rat::one()),
    );
    for (i, value) in scaled.iter().enumerate() {
        if i != pivot {
            bindings.insert(
                var_refs[i].to_string(),
                MultiPoly::var(&var_refs, var_refs[i])
                    .add(&MultiPoly::constant_over(&var_refs, value.clone())),
            );
        }
    }
    let localized = curve.substitute(&bindings);
    let affine: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
    classify_from_expansion(point, &homogeneous_parts(&localized), &affine, 2)
}

/// Enumerates the singular points of a plane curve exactly.
///
/// Same chart-and-solve strategy as the surface version; errors if the
/// singular locus is positive-dimensional or has uncertified irrational
/// points.
pub fn plane_curve_singular_points(
    curve: &MultiPoly,
) -> Result<Vec<SingularityReport>, QuarticError> {
    let var_refs: Vec<&str> = curve.vars().iter().map(|s| s.as_str()).collect();
    assert_eq!(var_refs.len(), 3);
    let partials: Vec<MultiPoly> = (0..3).map(|i| curve.partial(i)).collect();
    let one = MultiPoly::constant_over(&var_refs, Rat::one());
    let mut points = std::collections::BTreeSet::new();
    for chart in 0..3 {
        let system: Vec<MultiPoly> = partials
            .iter()
            .map(|p| p.substitute_one(var_refs[chart], &one))
            .collect();
        let outcome = crate::solver::solve_system(&system);
        if outcome.positive_dimensional {
            return Err(QuarticError::PositiveDimensionalLocus);
        }
        if outcome.residue {
            return Err(QuarticError::IncompleteEnumeration(format!(
                "irrational singular points possible in chart {} = 1",
                var_refs[chart]
            )));
        }
        for sol in &outcome.solutions {
            let mut point = vec![Rat::zero(); 3];
            point[chart] = Rat::one();
            for (name, value) in outcome.vars.iter().zip(sol) {
                let idx = var_refs
                    .iter()
                    .position(|v| v == name)
                    .expect("chart variables are coordinates");
                point[idx] = value.clone();
            }
            points.insert(normalize_projective(&point));
        }
    }
    points
        .iter()
        .map(|p| classify_plane_point(curve, p))
        .collect()
}

/// A rational parametrization of a tritangent curve: three coordinate
/// forms of equal degree in `(s, t)`, plus the parameters of any cusps
/// the curve passes through.
struct CurveChart {
    coords: [BinaryForm; 3],
    cusp_params: Vec<(Rat, Rat)>,
}

/// Builds the parametrization of one tritangent curve.
fn curve_chart(branch: &BranchSextic, curve: TangentCurve) -> Result<CurveChart, QuarticError> {
    let lin = |c: Rat, d: Rat| BinaryForm::new(vec![c, d]);
    let zero1 = || BinaryForm::new(vec![Rat::zero(), Rat::zero()]);
    match curve {
        TangentCurve::Line => {
            // A = a0X0 + a1X1 + a2X2 = 0, parametrized through two of its
            // points; a0 ≠ 0 is required to solve for X0.
            let a0 = linear_coefficient(&branch.tritangent_line, 0);
            let a1 = linear_coefficient(&branch.tritangent_line, 1);
            let a2 = linear_coefficient(&branch.tritangent_line, 2);
            if a0.is_zero() {
                return Err(QuarticError::ParametrizationFailure(
                    "tritangent line cannot be solved for X0 (a0 = 0)".into(),
                ));
            }
            // (s, t) ↦ (−(a1 s + a2 t), a0 s, a0 t).
            Ok(CurveChart {
                coords: [
                    lin(-a1.clone(), -a2.clone()),
                    lin(a0.clone(), Rat::zero()),
                    lin(Rat::zero(), a0.clone()),
                ],
                cusp_params: Vec::new(),
            })
        }
        TangentCurve::Conic => {
            // P = b3X0X1 + c3X0X2 + d3X1X2: the rational parametrization
            // (s, t) ↦ (−d3·st, t·(b3t + c3s), s·(b3t + c3s)),
            // passing through the cusps at (s:t) = (0:1), (1:0), (b3:−c3).
            let b3 = quadratic_coefficient(&branch.tritangent_conic, 0, 1);
            let c3 = quadratic_coefficient(&branch.tritangent_conic, 0, 2);
            let d3 = quadratic_coefficient(&branch.tritangent_conic, 1, 2);
            if b3.is_zero() || c3.is_zero() || d3.is_zero() {
                return Err(QuarticError::ParametrizationFailure(
                    "tritangent conic is degenerate (a coefficient vanishes)".into(),
                ));
            }
            let st = BinaryForm::new(vec![Rat::zero(), Rat::one(), Rat::zero()]);
            let tangent = lin(c3.clone(), b3.clone()); // b3·t + c3·s
            let x0 = st.scale(&-d3.clone());
            let x1 = tangent.mul(&lin(Rat::zero(), Rat::one()));
            let x2 = tangent.mul(&lin(Rat::one(), Rat::zero()));
            let chart = CurveChart {
                coords: [x0, x1, x2],
                cusp_params: vec![
                    (Rat::zero(), Rat::one()),
                    (Rat::one(), Rat::zero()),
                    (b3.clone(), -c3.clone()),
                ],
            };
            // The parametrization must actually lie on the conic.
            let on_conic = pullback(&branch.tritangent_conic, &chart.coords);
            if !on_conic.is_zero() {
                return Err(QuarticError::ParametrizationFailure(
                    "conic parametrization does not satisfy the conic equation".into(),
                ));
            }
            Ok(chart)
        }
        TangentCurve::Edge(i) => {
            assert!(i < 3, "plane edges are X0, X1, X2");
            // X_i = 0, parametrized by the other two coordinates; the two
            // cusps on this edge sit at the coordinate parameters.
            let mut coords = [zero1(), zero1(), zero1()];
            let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            coords[others[0]] = lin(Rat::one(), Rat::zero());
            coords[others[1]] = lin(Rat::zero(), Rat::one());
            Ok(CurveChart {
                coords,
                cusp_params: vec![(Rat::one(), Rat::zero()), (Rat::zero(), Rat::one())],
            })
        }
    }
}

/// Coefficient of `X_idx` in a linear plane form.
fn linear_coefficient(form: &MultiPoly, idx: usize) -> Rat {
    form.terms()
        .find(|(e, _)| e[idx] == 1)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero)
}

/// Coefficient of `X_i·X_j` in a quadratic plane form.
fn quadratic_coefficient(form: &MultiPoly, i: usize, j: usize) -> Rat {
    form.terms()
        .find(|(e, _)| e[i] == 1 && e[j] == 1)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero)
}

/// Pulls a plane form back along a parametrization, as a binary form of
/// degree `deg(form) · deg(chart)`.
fn pullback(form: &MultiPoly, coords: &[BinaryForm; 3]) -> BinaryForm {
    let st = ["s", "t"];
    let bindings: std::collections::BTreeMap<String, MultiPoly> = PLANE_VARS
        .iter()
        .zip(coords.iter())
        .map(|(v, c)| (v.to_string(), c.to_multipoly()))
        .collect();
    let substituted = form.substitute(&bindings).with_universe(&st);
    let chart_deg = coords[0].degree();
    let deg = form.total_degree().map(|d| d as usize).unwrap_or(0) * chart_deg;
    BinaryForm::from_multipoly(&substituted, "s", "t", deg)
}

/// Verifies that the sextic is tangent at every intersection with one of
/// the five tritangent curves, and reports the contact structure.
///
/// The pullback of the sextic to the curve must be an exact square; its
/// root form must vanish once at each cusp the curve passes through, and
/// the remaining contact points must be simple and distinct.
pub fn tritangency_check(
    branch: &BranchSextic,
    curve: TangentCurve,
) -> Result<TritangencyReport, QuarticError> {
    let chart = curve_chart(branch, curve)?;
    let pulled = pullback(&branch.sextic, &chart.coords);
    if pulled.is_zero() {
        return Err(QuarticError::UnexpectedFactor(format!(
            "sextic vanishes identically on the {curve}"
        )));
    }
    // Even-contact certificate: the pullback is a square over ℚ.
    let root = pulled.sqrt_exact().ok_or_else(|| {
        QuarticError::UnexpectedFactor(format!(
            "pullback of the sextic to the {curve} is not a perfect square"
        ))
    })?;
    // Each cusp on the curve forces one root; strip those factors.
    let mut tangency_part = root.clone();
    for (s0, t0) in &chart.cusp_params {
        tangency_part = tangency_part
            .exact_div(&BinaryForm::vanishing_line(s0, t0))
            .ok_or_else(|| {
                QuarticError::UnexpectedFactor(format!(
                    "contact form on the {curve} misses the cusp ({s0}, {t0})"
                ))
            })?;
    }
    // The honest tangencies: simple roots, distinct from the cusps.
    let contacts_distinct = root.has_distinct_roots();
    let tangency_contacts = tangency_part.degree();
    if !contacts_distinct {
        return Err(QuarticError::UnexpectedFactor(format!(
            "contact points on the {curve} are not distinct"
        )));
    }
    Ok(TritangencyReport {
        curve,
        sqrt_degree: root.degree(),
        cusp_contacts: chart.cusp_params.len(),
        tangency_contacts,
        contacts_distinct,
    })
}

/// Verifies the tangency cubic `Q_c` against all eight incidence
/// conditions: it passes through the three tangency points on the
/// tritangent line, the three on the conic, the one on each edge
/// (divisibility of binary forms), and it passes through each cusp with
/// the same tangent line as the sextic.
pub fn tangency_cubic_check(branch: &BranchSextic) -> Result<(), QuarticError> {
    // Divisibility route: on each tritangent curve the square root of the
    // pulled-back sextic must divide the pulled-back cubic, so the cubic
    // contains every contact point.
    let curves = [
        TangentCurve::Line,
        TangentCurve::Conic,
        TangentCurve::Edge(0),
        TangentCurve::Edge(1),
        TangentCurve::Edge(2),
    ];
    for curve in curves {
        let chart = curve_chart(branch, curve)?;
        let pulled = pullback(&branch.sextic, &chart.coords);
        let root = pulled.sqrt_exact().ok_or_else(|| {
            QuarticError::UnexpectedFactor(format!(
                "pullback of the sextic to the {curve} is not a perfect square"
            ))
        })?;
        let cubic_pulled = pullback(&branch.tangency_cubic, &chart.coords);
        if cubic_pulled.exact_div(&root).is_none() {
            return Err(QuarticError::UnexpectedFactor(format!(
                "tangency cubic misses a contact point on the {curve}"
            )));
        }
    }
    // Cusp route: Q_c vanishes at each cusp, and its tangent line there
    // is proportional to the double tangent line of the sextic.
    for cusp in cusp_points() {
        let cubic_report = classify_plane_point(&branch.tangency_cubic, &cusp);
        let cubic_report = match cubic_report {
            Ok(r) => r,
            Err(QuarticError::PointNotOnCurve) => {
                return Err(QuarticError::UnexpectedFactor(format!(
                    "tangency cubic misses the cusp {cusp:?}"
                )))
            }
            Err(e) => return Err(e),
        };
        if cubic_report.classification != PointType::Smooth {
            return Err(QuarticError::UnexpectedFactor(format!(
                "tangency cubic is singular at the cusp {cusp:?}"
            )));
        }
        let sextic_report = classify_plane_point(&branch.sextic, &cusp)?;
        if sextic_report.classification != PointType::Cusp {
            return Err(QuarticError::UnexpectedFactor(format!(
                "sextic does not have a cusp at {cusp:?}"
            )));
        }
        let cubic_tangent = tangent_line_at(&branch.tangency_cubic, &cusp, 1);
        let sextic_tangent_sq = tangent_line_at(&branch.sextic, &cusp, 2);
        // Proportionality: cubic_tangent² ∝ sextic's rank-one quadratic part.
        let sq = cubic_tangent.mul(&cubic_tangent);
        if !proportional(&sq, &sextic_tangent_sq) {
            return Err(QuarticError::UnexpectedFactor(format!(
                "tangent lines at the cusp {cusp:?} differ"
            )));
        }
    }
    Ok(())
}

/// The lowest homogeneous part of a plane curve's local expansion at a
/// point, which must sit in degree `expected_mult`.
fn tangent_line_at(curve: &MultiPoly, point: &[Rat], expected_mult: usize) -> MultiPoly {
    let pivot = point.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let var_refs: Vec<&str> = curve.vars().iter().map(|s| s.as_str()).collect();
    let mut bindings = std::collections::BTreeMap::new();
    bindings.insert(
        var_refs[pivot].to_string(),
        MultiPoly::constant_over(&var_refs, Rat::one()),
    );
    for (i, value) in point.iter().enumerate() {
        if i != pivot {
            let v = value / &point[pivot];
            bindings.insert(
                var_refs[i].to_string(),
                MultiPoly::var(&var_refs, var_refs[i])
                    .add(&MultiPoly::constant_over(&var_refs, v)),
            );
        }
    }
    let parts = homogeneous_parts(&curve.substitute(&bindings));
    assert!(
        parts.iter().take(expected_mult).all(|p| p.is_zero()),
        "expected multiplicity {expected_mult}"
    );
    parts[expected_mult].clone()
}

/// Whether two nonzero polynomials differ by a constant factor.
fn proportional(p: &MultiPoly, q: &MultiPoly) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    let (_, pc) = p.leading_grlex().expect("nonzero");
    let (_, qc) = q.leading_grlex().expect("nonzero");
    p.scale(qc) == q.scale(pc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::quartic::{build_quartic, QuarticCoefficients};

    fn reference_branch() -> BranchSextic {
        branch_sextic(&build_quartic(QuarticCoefficients::reference_sample())).unwrap()
    }

    #[test]
    fn decomposition_matches_the_closed_form_symbolically() {
        assert_eq!(
            symbolic_branch_sextic(),
            symbolic_branch_sextic_closed_form()
        );
    }

    #[test]
    fn branch_parts_have_the_expected_shapes() {
        let b = reference_branch();
        assert_eq!(b.sextic.total_degree(), Some(6));
        assert_eq!(b.tritangent_conic.total_degree(), Some(2));
        assert_eq!(b.tangency_cubic.total_degree(), Some(3));
        assert_eq!(b.tritangent_line.total_degree(), Some(1));
        // P = b3·X0X1 + c3·X0X2 + d3·X1X2 with b3 = 1, c3 = 2, d3 = 3.
        assert_eq!(quadratic_coefficient(&b.tritangent_conic, 0, 1), rat(1));
        assert_eq!(quadratic_coefficient(&b.tritangent_conic, 0, 2), rat(2));
        assert_eq!(quadratic_coefficient(&b.tritangent_conic, 1, 2), rat(3));
    }

    #[test]
    fn degenerate_vertex_is_rejected() {
        let mut c = QuarticCoefficients::reference_sample();
        c.d3 = rat(0);
        let err = branch_sextic(&build_quartic(c)).unwrap_err();
        assert!(matches!(err, QuarticError::NotANode(_)));
    }

    #[test]
    fn coordinate_points_are_cusps_and_nothing_else_is_singular() {
        let b = reference_branch();
        for cusp in cusp_points() {
            let report = classify_plane_point(&b.sextic, &cusp).unwrap();
            assert_eq!(report.multiplicity, 2);
            assert_eq!(report.tangent_cone_rank, 1);
            assert_eq!(report.classification, PointType::Cusp, "at {cusp:?}");
        }
        let singular = plane_curve_singular_points(&b.sextic).unwrap();
        assert_eq!(singular.len(), 3);
        assert!(singular
            .iter()
            .all(|r| r.classification == PointType::Cusp));
    }

    #[test]
    fn all_five_curves_are_tritangent() {
        let b = reference_branch();
        let expectations = [
            (TangentCurve::Line, 0, 3),
            (TangentCurve::Conic, 3, 3),
            (TangentCurve::Edge(0), 2, 1),
            (TangentCurve::Edge(1), 2, 1),
            (TangentCurve::Edge(2), 2, 1),
        ];
        for (curve, cusps, tangencies) in expectations {
            let report = tritangency_check(&b, curve).unwrap();
            assert_eq!(report.cusp_contacts, cusps, "{curve}");
            assert_eq!(report.tangency_contacts, tangencies, "{curve}");
            assert!(report.contacts_distinct, "{curve}");
        }
    }

    #[test]
    fn tangency_cubic_passes_all_incidence_checks() {
        tangency_cubic_check(&reference_branch()).unwrap();
    }

    #[test]
    fn plane_point_classification_distinguishes_node_from_cusp() {
        // Nodal cubic X1²X2 − X0²(X0 + X2): node at (0:0:1).
        let v = |n: &str| MultiPoly::var(&PLANE_VARS, n);
        let nodal = v("X1")
            .mul(&v("X1"))
            .mul(&v("X2"))
            .sub(&v("X0").mul(&v("X0")).mul(&v("X0").add(&v("X2"))));
        let p = vec![rat(0), rat(0), rat(1)];
        let report = classify_plane_point(&nodal, &p).unwrap();
        assert_eq!(report.classification, PointType::Node);
        assert_eq!(report.tangent_cone_rank, 2);

        // Cuspidal cubic X1²X2 − X0³: cusp at (0:0:1).
        let cuspidal = v("X1")
            .mul(&v("X1"))
            .mul(&v("X2"))
            .sub(&v("X0").mul(&v("X0")).mul(&v("X0")));
        let report = classify_plane_point(&cuspidal, &p).unwrap();
        assert_eq!(report.classification, PointType::Cusp);
        assert_eq!(report.tangent_cone_rank, 1);

        // Tacnode-like: X1²X2² − X0⁴ has multiplicity 2 but the quartic
        // term is divisible by the double tangent line X1... build the
        // quartic X1²X2² − X0²X1X2 instead? Keep it simple: a triple
        // point is Worse.
        let triple = v("X0").mul(&v("X0")).mul(&v("X0"));
        let report = classify_plane_point(&triple, &p).unwrap();
        assert_eq!(report.classification, PointType::Worse);

        let off = vec![rat(1), rat(1), rat(1)];
        assert_eq!(
            classify_plane_point(&nodal, &off),
            Err(QuarticError::PointNotOnCurve)
        );
    }
}
