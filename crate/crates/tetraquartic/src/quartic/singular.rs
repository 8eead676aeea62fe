//! Singular points of a tetrahedral quartic: local classification and
//! exact enumeration of the whole singular locus.
//!
//! A point of multiplicity 2 is a *node* when its tangent cone is a
//! nondegenerate quadric cone — rank 3 for the quadratic part of a
//! surface's local expansion.  The generic tetrahedral quartic has
//! exactly four nodes, at the vertices of the coordinate tetrahedron:
//! the local quadratic part at the vertex `E₁ = (1:0:0:0)` is
//! `a₀X₁X₂ + b₀X₁X₃ + c₀X₂X₃`, of rank 3 exactly when `a₀b₀c₀ ≠ 0`,
//! and likewise at the other vertices with products `a₁b₁d₁`, `a₂c₂d₂`,
//! `b₃c₃d₃`.
//!
//! Enumeration solves the system of the four partial derivatives (whose
//! common zeros automatically lie on the surface, by the Euler relation)
//! over the four affine charts, deduplicating projectively.  The solver's
//! completeness flags are surfaced as errors: a positive-dimensional
//! branch or an uncertified (irrational) residue means no finite count
//! can be claimed.

use num_traits::{One, Zero};

use crate::exactmath::{MultiPoly, QMatrix, Rat};
use crate::solver::solve_system;

use super::{
    homogeneous_parts, PointType, QuarticError, SingularityReport, TetraQuartic, SPACE_VARS,
};

/// Local expansion of `poly` at a projective `point`: dehomogenize at the
/// first nonzero coordinate and translate the point to the origin, then
/// split into homogeneous parts.  Returns the parts and the indices of
/// the affine variables.
fn local_expansion(poly: &MultiPoly, point: &[Rat]) -> (Vec<MultiPoly>, Vec<usize>) {
    let n = point.len();
    assert_eq!(poly.vars().len(), n, "point arity mismatch");
    let pivot = point
        .iter()
        .position(|c| !c.is_zero())
        .expect("projective point must have a nonzero coordinate");
    // Scale so the pivot coordinate is 1.
    let scaled: Vec<Rat> = point.iter().map(|c| c / &point[pivot]).collect();
    let var_refs: Vec<&str> = poly.vars().iter().map(|s| s.as_str()).collect();
    let mut bindings = std::collections::BTreeMap::new();
    bindings.insert(
        var_refs[pivot].to_string(),
        MultiPoly::constant_over(&var_refs, Rat::one()),
    );
    for (i, value) in scaled.iter().enumerate() {
        if i == pivot {
            continue;
        }
        // X_i ↦ X_i + p_i: the new origin is the point.
        bindings.insert(
            var_refs[i].to_string(),
            MultiPoly::var(&var_refs, var_refs[i])
                .add(&MultiPoly::constant_over(&var_refs, value.clone())),
        );
    }
    let localized = poly.substitute(&bindings);
    let affine: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    (homogeneous_parts(&localized), affine)
}

/// Rank of the symmetric matrix of a quadratic form in the given
/// variables.
fn quadratic_rank(part: &MultiPoly, affine: &[usize]) -> usize {
    let m = affine.len();
    let half = Rat::new(1.into(), 2.into());
    let mut rows = vec![vec![Rat::zero(); m]; m];
    for (e, c) in part.terms() {
        let support: Vec<usize> = (0..e.len()).filter(|&i| e[i] > 0).collect();
        match support.as_slice() {
            [i] => {
                debug_assert_eq!(e[*i], 2);
                let ii = affine.iter().position(|a| a == i).expect("affine var");
                rows[ii][ii] = c.clone();
            }
            [i, j] => {
                let ii = affine.iter().position(|a| a == i).expect("affine var");
                let jj = affine.iter().position(|a| a == j).expect("affine var");
                let v = c * &half;
                rows[ii][jj] = v.clone();
                rows[jj][ii] = v;
            }
            _ => unreachable!("quadratic part has at most two variables per term"),
        }
    }
    QMatrix::new(rows).rank()
}

/// Multiplicity and tangent-cone rank at a point, with the surface
/// classification (`Node` requires multiplicity 2 and rank 3).
pub fn classify_surface_point(
    quartic: &TetraQuartic,
    point: &[Rat],
) -> Result<SingularityReport, QuarticError> {
    assert_eq!(point.len(), 4, "surface points live in projective 3-space");
    let (parts, affine) = local_expansion(quartic.f(), point);
    classify_from_expansion(point, &parts, &affine, 3)
}

/// Shared classification logic: `nondegenerate_rank` is 3 for surfaces
/// and 2 for plane curves.
pub(crate) fn classify_from_expansion(
    point: &[Rat],
    parts: &[MultiPoly],
    affine: &[usize],
    nondegenerate_rank: usize,
) -> Result<SingularityReport, QuarticError> {
    let multiplicity = match parts.iter().position(|p| !p.is_zero()) {
        Some(m) => m,
        None => 0, // identically zero polynomial: treat as not-on-locus
    };
    if multiplicity == 0 && !parts.is_empty() && !parts[0].is_zero() {
        return Err(if nondegenerate_rank == 3 {
            QuarticError::PointNotOnSurface
        } else {
            QuarticError::PointNotOnCurve
        });
    }
    let tangent_cone_rank = if multiplicity == 2 {
        quadratic_rank(&parts[2], affine)
    } else {
        0
    };
    let classification = match multiplicity {
        1 => PointType::Smooth,
        2 if tangent_cone_rank == nondegenerate_rank => PointType::Node,
        2 if nondegenerate_rank == 2 && tangent_cone_rank == 1 => {
            // Plane-curve double point with a double tangent line: a cusp
            // exactly when the cubic part is not divisible by the line.
            let line = rank_one_root_line(&parts[2], affine);
            let divisible = parts
                .get(3)
                .map(|cubic| !cubic.is_zero() && cubic.exact_div(&line).is_some())
                .unwrap_or(true);
            if divisible {
                PointType::Worse
            } else {
                PointType::Cusp
            }
        }
        _ => PointType::Worse,
    };
    Ok(SingularityReport {
        point: point.to_vec(),
        multiplicity,
        tangent_cone_rank,
        classification,
    })
}

/// The linear form whose square spans a rank-one binary quadratic form
/// `αu² + βuv + γv²` (`u`, `v` the two affine variables).
fn rank_one_root_line(part: &MultiPoly, affine: &[usize]) -> MultiPoly {
    assert_eq!(affine.len(), 2, "rank-one extraction is for plane curves");
    let var_refs: Vec<&str> = part.vars().iter().map(|s| s.as_str()).collect();
    let u = MultiPoly::var(&var_refs, &var_refs[affine[0]]);
    let v = MultiPoly::var(&var_refs, &var_refs[affine[1]]);
    let coeff = |eu: u16, ev: u16| -> Rat {
        part.terms()
            .find(|(e, _)| e[affine[0]] == eu && e[affine[1]] == ev)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    };
    let alpha = coeff(2, 0);
    let beta = coeff(1, 1);
    let gamma = coeff(0, 2);
    if !alpha.is_zero() {
        // α(u + (β/2α)v)² — line u + (β/2α)v.
        let ratio = &beta / (&alpha * Rat::from_integer(2.into()));
        u.add(&v.scale(&ratio))
    } else {
        debug_assert!(beta.is_zero(), "rank one with α = 0 forces β = 0");
        debug_assert!(!gamma.is_zero());
        v
    }
}

/// Enumerates the entire singular locus exactly and classifies each
/// point.
///
/// Errors with [`QuarticError::PositiveDimensionalLocus`] if the locus is
/// not a finite set of points, and with
/// [`QuarticError::IncompleteEnumeration`] if completeness over the
/// complex numbers could not be certified (so the reported points are
/// sound but the *count* would not be).  Reports are sorted by point
/// coordinates.
pub fn singular_locus_count(
    quartic: &TetraQuartic,
) -> Result<Vec<SingularityReport>, QuarticError> {
    let partials: Vec<MultiPoly> = (0..4).map(|i| quartic.f().partial(i)).collect();
    let one = MultiPoly::constant_over(&SPACE_VARS, Rat::one());

    let mut points: std::collections::BTreeSet<Vec<Rat>> = std::collections::BTreeSet::new();
    for chart in 0..4 {
        let system: Vec<MultiPoly> = partials
            .iter()
            .map(|p| p.substitute_one(SPACE_VARS[chart], &one))
            .collect();
        let outcome = solve_system(&system);
        if outcome.positive_dimensional {
            return Err(QuarticError::PositiveDimensionalLocus);
        }
        if outcome.residue {
            return Err(QuarticError::IncompleteEnumeration(format!(
                "irrational singular points possible in chart {} = 1",
                SPACE_VARS[chart]
            )));
        }
        for sol in &outcome.solutions {
            // Rebuild the full projective point: 1 in the chart slot, the
            // solved values elsewhere (solver variables are sorted names).
            let mut point = vec![Rat::zero(); 4];
            point[chart] = Rat::one();
            for (name, value) in outcome.vars.iter().zip(sol) {
                let idx = SPACE_VARS
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
        .map(|p| classify_surface_point(quartic, p))
        .collect()
}

/// Scales a projective point so its first nonzero coordinate is 1.
pub(crate) fn normalize_projective(point: &[Rat]) -> Vec<Rat> {
    let pivot = point
        .iter()
        .find(|c| !c.is_zero())
        .expect("projective point must be nonzero");
    point.iter().map(|c| c / pivot).collect()
}

/// The four tetrahedron vertices `E₁..E₄` (`E_j` has a 1 in slot `j−1`).
pub fn tetrahedron_vertices() -> [Vec<Rat>; 4] {
    std::array::from_fn(|j| {
        let mut v = vec![Rat::zero(); 4];
        v[j] = Rat::one();
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::quartic::{build_quartic, QuarticCoefficients};

    #[test]
    fn vertices_are_nodes_of_the_reference_sample() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        for v in tetrahedron_vertices() {
            let report = classify_surface_point(&q, &v).unwrap();
            assert_eq!(report.multiplicity, 2);
            assert_eq!(report.tangent_cone_rank, 3);
            assert_eq!(report.classification, PointType::Node);
        }
    }

    #[test]
    fn vertex_degenerates_when_its_triple_product_vanishes() {
        // a0 = 0 kills the rank at E1 = (1:0:0:0): quadratic part drops to
        // b0·X1X3 + c0·X2X3, rank 2.
        let mut c = QuarticCoefficients::reference_sample();
        c.a0 = rat(0);
        let q = build_quartic(c);
        let e1 = tetrahedron_vertices()[0].clone();
        let report = classify_surface_point(&q, &e1).unwrap();
        assert_eq!(report.multiplicity, 2);
        assert_eq!(report.tangent_cone_rank, 2);
        assert_eq!(report.classification, PointType::Worse);
    }

    #[test]
    fn generic_surface_point_is_smooth_and_off_points_error() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        // A point of the residual line R4 = {X3 = 0, A = 0}: A = X0 + 2X1 + 3X2,
        // take (1, 1, -1, 0).
        let on = vec![rat(1), rat(1), rat(-1), rat(0)];
        assert!(q.f().eval(&on).is_zero());
        let report = classify_surface_point(&q, &on).unwrap();
        assert_eq!(report.classification, PointType::Smooth);

        let off = vec![rat(1), rat(1), rat(1), rat(1)];
        assert!(!q.f().eval(&off).is_zero());
        assert_eq!(
            classify_surface_point(&q, &off),
            Err(QuarticError::PointNotOnSurface)
        );
    }

    #[test]
    fn reference_sample_has_exactly_the_four_vertex_nodes() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let reports = singular_locus_count(&q).unwrap();
        assert_eq!(reports.len(), 4);
        let mut expected: Vec<Vec<Rat>> = tetrahedron_vertices().to_vec();
        expected.sort();
        let got: Vec<Vec<Rat>> = reports.iter().map(|r| r.point.clone()).collect();
        assert_eq!(got, expected);
        assert!(reports
            .iter()
            .all(|r| r.classification == PointType::Node));
    }

    #[test]
    fn cone_surface_reports_positive_dimensional_locus() {
        // X0·X1·X2·X3 ... is not expressible; use a quartic cone instead:
        // F = X0²X1² has a whole singular plane's worth of singular lines.
        // Build via coefficients is impossible, so exercise the raw system
        // path through a degenerate coefficient choice: all of a, b, c
        // zero leaves F = D·X1X2X3, whose singular locus contains curves.
        let c = QuarticCoefficients::from_i64([0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 3], 0);
        let q = build_quartic(c);
        assert_eq!(
            singular_locus_count(&q),
            Err(QuarticError::PositiveDimensionalLocus)
        );
    }
}
