//! Exact enumeration of all lines on a tetrahedral quartic.
//!
//! A generic tetrahedral quartic contains exactly ten lines: the six
//! edges of the coordinate tetrahedron and the four residual lines (one
//! per face).  [`enumerate_lines`] proves this for a given surface by
//! exhaustive search over the six affine charts of the Grassmannian of
//! lines in projective 3-space: in the chart where the Plücker
//! coordinate `p_{pq}` is invertible, a line is the graph
//!
//! ```text
//! X_r = m₀₀·X_p + m₀₁·X_q,    X_s = m₁₀·X_p + m₁₁·X_q
//! ```
//!
//! and lying on the surface is five polynomial equations (the
//! coefficients of the restricted binary quartic) in the four unknowns
//! `m`.  Every chart system is solved exactly; the union of charts
//! covers the Grassmannian, results are deduplicated by normalized
//! Plücker coordinates, and each line found is re-verified symbolically
//! on the original quartic.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exactmath::{MultiPoly, Rat};
use crate::solver::solve_system;

use super::{QuarticError, TetraQuartic, SPACE_VARS};

/// A line in projective 3-space on the surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    /// Plücker coordinates `(p₀₁, p₀₂, p₀₃, p₁₂, p₁₃, p₂₃)`, scaled so
    /// the first nonzero entry is 1 — a canonical label.
    pub pluecker: Vec<Rat>,
    /// Two distinct points spanning the line.
    pub points: [Vec<Rat>; 2],
}

/// The index pairs of the Plücker coordinates, in storage order.
const PLUECKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl Line {
    /// Builds the line through two points, with normalized Plücker label.
    ///
    /// Panics if the points coincide projectively.
    pub fn through(u: Vec<Rat>, v: Vec<Rat>) -> Self {
        assert_eq!(u.len(), 4);
        assert_eq!(v.len(), 4);
        let raw: Vec<Rat> = PLUECKER_PAIRS
            .iter()
            .map(|&(a, b)| &u[a] * &v[b] - &u[b] * &v[a])
            .collect();
        let pivot = raw
            .iter()
            .find(|c| !c.is_zero())
            .expect("points spanning a line must be distinct")
            .clone();
        let pluecker: Vec<Rat> = raw.iter().map(|c| c / &pivot).collect();
        // Plücker relation: a sanity check on the construction.
        debug_assert!(
            (&pluecker[0] * &pluecker[5] - &pluecker[1] * &pluecker[4]
                + &pluecker[2] * &pluecker[3])
                .is_zero()
        );
        Line {
            pluecker,
            points: [u, v],
        }
    }

    /// Whether the line lies on a surface, by restricting the defining
    /// polynomial to a parametrization of the line.
    pub fn lies_on(&self, f: &MultiPoly) -> bool {
        let st = ["s", "t"];
        let s = MultiPoly::var(&st, "s");
        let t = MultiPoly::var(&st, "t");
        let bindings: BTreeMap<String, MultiPoly> = SPACE_VARS
            .iter()
            .enumerate()
            .map(|(c, name)| {
                let term = s
                    .scale(&self.points[0][c])
                    .add(&t.scale(&self.points[1][c]));
                (name.to_string(), term)
            })
            .collect();
        f.substitute(&bindings).with_universe(&st).is_zero()
    }
}

/// The six tetrahedron edges as [`Line`]s, keyed by their vertex pairs.
pub fn edge_lines() -> Vec<((u8, u8), Line)> {
    let vertex = |i: u8| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); 4];
        v[i as usize - 1] = Rat::one();
        v
    };
    super::crossratio::EDGES
        .iter()
        .map(|&(i, j)| ((i, j), Line::through(vertex(i), vertex(j))))
        .collect()
}

/// The four residual lines `R_j = {X_{j−1} = 0, Φ_j = 0}` of a quartic.
pub fn residual_lines(quartic: &TetraQuartic) -> Result<Vec<(u8, Line)>, QuarticError> {
    let mut out = Vec::new();
    for j in 1..=4u8 {
        let phi = quartic.face_form(j);
        let coeffs: Vec<Rat> = (0..4)
            .map(|idx| {
                phi.terms()
                    .find(|(e, _)| e[idx] == 1)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Rat::zero)
            })
            .collect();
        let support: Vec<usize> = (0..4).filter(|&i| !coeffs[i].is_zero()).collect();
        if support.len() < 2 {
            return Err(QuarticError::DegenerateCoefficient(format!(
                "face form of R{j} has fewer than two nonzero coefficients"
            )));
        }
        // Null-space basis of the linear form within the face: pivot on
        // the first nonzero coefficient.
        let pivot = support[0];
        let make_point = |other: usize| -> Vec<Rat> {
            let mut p = vec![Rat::zero(); 4];
            p[pivot] = -coeffs[other].clone();
            p[other] = coeffs[pivot].clone();
            p
        };
        let u = make_point(support[1]);
        let v = if support.len() >= 3 {
            make_point(support[2])
        } else {
            // Only two nonzero coefficients: the second basis vector is
            // the free coordinate axis within the face.
            let free = (0..4)
                .find(|&i| i != quartic_face_coord(j) && !support.contains(&i))
                .expect("a free coordinate exists");
            let mut p = vec![Rat::zero(); 4];
            p[free] = Rat::one();
            p
        };
        out.push((j, Line::through(u, v)));
    }
    Ok(out)
}

fn quartic_face_coord(j: u8) -> usize {
    j as usize - 1
}

/// The coefficients of the binary quartic obtained by restricting a
/// quartic form to the graph chart, as polynomials in the four graph
/// parameters.
fn chart_equations(
    f: &MultiPoly,
    p: usize,
    q: usize,
    params: &[&str; 4],
    universe: &[&str],
) -> Vec<MultiPoly> {
    let var = |name: &str| MultiPoly::var(universe, name);
    let nonpivot: Vec<usize> = (0..4).filter(|&c| c != p && c != q).collect();
    let (r, s) = (nonpivot[0], nonpivot[1]);
    let mut bindings = BTreeMap::new();
    bindings.insert(
        SPACE_VARS[r].to_string(),
        var(params[0])
            .mul(&var(SPACE_VARS[p]))
            .add(&var(params[1]).mul(&var(SPACE_VARS[q]))),
    );
    bindings.insert(
        SPACE_VARS[s].to_string(),
        var(params[2])
            .mul(&var(SPACE_VARS[p]))
            .add(&var(params[3]).mul(&var(SPACE_VARS[q]))),
    );
    let restricted = f.with_universe(universe).substitute(&bindings);
    // Group by the exponents of (X_p, X_q): five binary-quartic slots.
    let pi = restricted.var_index(SPACE_VARS[p]).expect("pivot present");
    let qi = restricted.var_index(SPACE_VARS[q]).expect("pivot present");
    let mut slots: Vec<Vec<(Vec<u16>, Rat)>> = vec![Vec::new(); 5];
    for (e, c) in restricted.terms() {
        let (ep, eq) = (e[pi] as usize, e[qi] as usize);
        assert_eq!(ep + eq, 4, "restriction is a binary quartic");
        let mut ne = e.clone();
        ne[pi] = 0;
        ne[qi] = 0;
        slots[eq].push((ne, c.clone()));
    }
    let uref: Vec<&str> = universe.to_vec();
    slots
        .into_iter()
        .map(|terms| MultiPoly::from_terms(&uref, terms))
        .collect()
}

/// Exhaustively enumerates the lines on the surface.
///
/// Errors with [`QuarticError::InfiniteFamily`] when a chart system has
/// a positive-dimensional solution set (the surface contains a family of
/// lines, e.g. a plane or a cone), and with
/// [`QuarticError::IncompleteEnumeration`] when lines over an extension
/// field could not be ruled out (so no exact count can be certified).
/// Every returned line is re-verified against the quartic; the list is
/// sorted by Plücker label.
pub fn enumerate_lines(quartic: &TetraQuartic) -> Result<Vec<Line>, QuarticError> {
    let params = ["m00", "m01", "m10", "m11"];
    let universe: Vec<&str> = SPACE_VARS.iter().copied().chain(params).collect();

    // Solve every chart before judging: a positive-dimensional family in
    // one chart outranks an irrational residue in another (the latter is
    // merely inconclusive, the former is a definite structural fact).
    let outcomes: Vec<((usize, usize), crate::solver::SolveOutcome)> = PLUECKER_PAIRS
        .iter()
        .map(|&(p, q)| {
            let equations = chart_equations(quartic.f(), p, q, &params, &universe);
            ((p, q), solve_system(&equations))
        })
        .collect();
    for ((p, q), outcome) in &outcomes {
        if outcome.positive_dimensional {
            return Err(QuarticError::InfiniteFamily(format!(
                "graph chart ({p}, {q}) has a positive-dimensional solution set"
            )));
        }
        if !outcome.solutions.is_empty() && outcome.vars.len() < 4 {
            // A parameter absent from every equation is unconstrained.
            return Err(QuarticError::InfiniteFamily(format!(
                "graph chart ({p}, {q}) leaves a graph parameter free"
            )));
        }
    }
    for ((p, q), outcome) in &outcomes {
        if outcome.residue {
            return Err(QuarticError::IncompleteEnumeration(format!(
                "graph chart ({p}, {q}) may have irrational lines"
            )));
        }
    }

    let mut found: BTreeMap<Vec<Rat>, Line> = BTreeMap::new();
    for &((p, q), ref outcome) in &outcomes {
        let nonpivot: Vec<usize> = (0..4).filter(|&c| c != p && c != q).collect();
        let (r, s) = (nonpivot[0], nonpivot[1]);
        for sol in &outcome.solutions {
            let value = |name: &str| -> Rat {
                let k = outcome
                    .vars
                    .iter()
                    .position(|v| v == name)
                    .expect("all four parameters are constrained");
                sol[k].clone()
            };
            // Span: the graph over (X_p, X_q) = (1, 0) and (0, 1).
            let mut u = vec![Rat::zero(); 4];
            u[p] = Rat::one();
            u[r] = value("m00");
            u[s] = value("m10");
            let mut v = vec![Rat::zero(); 4];
            v[q] = Rat::one();
            v[r] = value("m01");
            v[s] = value("m11");
            let line = Line::through(u, v);
            if !line.lies_on(quartic.f()) {
                return Err(QuarticError::IncompleteEnumeration(format!(
                    "chart ({p}, {q}) produced a spurious line"
                )));
            }
            found.insert(line.pluecker.clone(), line);
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::quartic::{build_quartic, QuarticCoefficients};

    #[test]
    fn reference_sample_has_exactly_ten_lines() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let lines = enumerate_lines(&q).unwrap();
        assert_eq!(lines.len(), 10);

        // The ten must be precisely the six edges and four residuals.
        let mut expected: Vec<Vec<Rat>> = edge_lines()
            .into_iter()
            .map(|(_, l)| l.pluecker)
            .collect();
        expected.extend(
            residual_lines(&q)
                .unwrap()
                .into_iter()
                .map(|(_, l)| l.pluecker),
        );
        expected.sort();
        let got: Vec<Vec<Rat>> = lines.iter().map(|l| l.pluecker.clone()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn every_edge_and_residual_line_lies_on_the_surface() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        for (edge, line) in edge_lines() {
            assert!(line.lies_on(q.f()), "edge {edge:?}");
        }
        for (j, line) in residual_lines(&q).unwrap() {
            assert!(line.lies_on(q.f()), "residual R{j}");
        }
    }

    #[test]
    fn plueker_label_is_projective() {
        let a = Line::through(
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
        );
        let b = Line::through(
            vec![rat(3), rat(3), rat(0), rat(0)],
            vec![rat(0), rat(-2), rat(0), rat(0)],
        );
        assert_eq!(a.pluecker, b.pluecker);
    }

    #[test]
    fn surface_containing_a_plane_reports_an_infinite_family() {
        // With D = 0 the quartic factors as X0 · (cubic), so the plane
        // X0 = 0 lies on the surface and carries a pencil of lines.
        let c = QuarticCoefficients::from_i64([1, 2, 3, 2, 5, 1, 3, 1, 2, 0, 0, 0], 1);
        let q = build_quartic(c);
        assert!(matches!(
            enumerate_lines(&q),
            Err(QuarticError::InfiniteFamily(_))
        ));
    }

    #[test]
    fn line_through_rejects_coincident_points() {
        let caught = std::panic::catch_unwind(|| {
            Line::through(
                vec![rat(1), rat(2), rat(0), rat(0)],
                vec![rat(2), rat(4), rat(0), rat(0)],
            )
        });
        assert!(caught.is_err());
    }
}
