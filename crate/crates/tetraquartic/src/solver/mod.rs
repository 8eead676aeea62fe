//! Exact enumeration of rational solutions of small polynomial systems.
//!
//! [`solve_system`] finds every solution in `ℚⁿ` of a finite system of
//! polynomial equations with rational coefficients, by exact elimination:
//!
//! 1. monomial-content splits (`m·g = 0` branches into the vanishing of
//!    each content variable and of `g`),
//! 2. substitution of variables that appear linearly with a constant
//!    coefficient,
//! 3. projection via pairwise Sylvester resultants — the eliminants are
//!    kept *as a system* (taking a gcd here would be unsound: coprime
//!    polynomials can share isolated zeros), and
//! 4. a univariate base case using gcds and exact rational root finding.
//!
//! Every candidate is verified against the original equations before it is
//! reported.  Two flags qualify the outcome:
//!
//! * `residue` — some branch had solutions over the complex numbers that
//!   could not be certified rational (an irrational-root residue), or
//!   could not be analysed at all; when `false`, the returned set is the
//!   *complete* solution set of the system over the complex numbers, each
//!   point being rational.
//! * `positive_dimensional` — a branch exhibited a free variable, so the
//!   solution locus is infinite.
//!
//! The procedure is exponential in the worst case and is intended for the
//! small structured systems that arise from line enumeration and singular
//! point analysis on quartic surfaces (a handful of variables, low
//! degrees).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::exactmath::{resultant_wrt, MultiPoly, Rat, UniPoly};

/// Result of an exact solve: the rational solutions plus completeness
/// qualifiers.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    /// Variable names, in the coordinate order used by `solutions`.
    pub vars: Vec<String>,
    /// All verified rational solutions, as coordinate vectors parallel to
    /// `vars`.
    pub solutions: BTreeSet<Vec<Rat>>,
    /// `true` if completeness over the complex numbers could not be
    /// certified (some branch had non-rational or unanalysable solutions).
    pub residue: bool,
    /// `true` if some branch of the solution locus has positive dimension.
    pub positive_dimensional: bool,
}

impl SolveOutcome {
    /// Whether the solve certified a finite, fully rational solution set.
    pub fn is_complete(&self) -> bool {
        !self.residue && !self.positive_dimensional
    }
}

/// Partial assignments produced by the recursion: ambient variable index
/// to value.
type Assignment = BTreeMap<usize, Rat>;

struct SearchState {
    solutions: Vec<Assignment>,
    residue: bool,
    positive_dimensional: bool,
}

impl SearchState {
    fn empty() -> Self {
        SearchState {
            solutions: Vec::new(),
            residue: false,
            positive_dimensional: false,
        }
    }

    fn absorb_flags(&mut self, other: &SearchState) {
        self.residue |= other.residue;
        self.positive_dimensional |= other.positive_dimensional;
    }
}

/// Solves a polynomial system exactly over the rationals.
///
/// The variable universe is the union of the variables of all input
/// polynomials, in sorted order; it must be nonempty unless the system is
/// trivial.
pub fn solve_system(system: &[MultiPoly]) -> SolveOutcome {
    let mut universe: BTreeSet<String> = BTreeSet::new();
    for p in system {
        for v in p.vars_present() {
            universe.insert(p.vars()[v].clone());
        }
    }
    let vars: Vec<String> = universe.into_iter().collect();
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let lifted: Vec<MultiPoly> = system.iter().map(|p| p.with_universe(&var_refs)).collect();
    let unresolved: BTreeSet<usize> = (0..vars.len()).collect();

    let state = solve_rec(&lifted, &unresolved);

    let mut solutions = BTreeSet::new();
    for assignment in state.solutions {
        if assignment.len() != vars.len() {
            continue;
        }
        let point: Vec<Rat> = (0..vars.len())
            .map(|i| assignment[&i].clone())
            .collect();
        // Final defence: re-verify against the original equations.
        if lifted.iter().all(|p| p.eval(&point).is_zero()) {
            solutions.insert(point);
        }
    }
    SolveOutcome {
        vars,
        solutions,
        residue: state.residue,
        positive_dimensional: state.positive_dimensional,
    }
}

fn solve_rec(system: &[MultiPoly], unresolved: &BTreeSet<usize>) -> SearchState {
    // Drop identically zero equations; a nonzero constant equation kills
    // the branch outright (certified: no solutions at all).
    let mut eqs: Vec<MultiPoly> = Vec::new();
    for p in system {
        if p.is_zero() {
            continue;
        }
        if let Some(c) = p.as_constant() {
            if !c.is_zero() {
                return SearchState::empty();
            }
        } else {
            eqs.push(p.clone());
        }
    }

    if eqs.is_empty() {
        if unresolved.is_empty() {
            return SearchState {
                solutions: vec![Assignment::new()],
                residue: false,
                positive_dimensional: false,
            };
        }
        // No constraints but variables remain: the whole affine space.
        return SearchState {
            solutions: Vec::new(),
            residue: true,
            positive_dimensional: true,
        };
    }

    // Variables that have silently dropped out of every equation are free:
    // solve the rest, and if it is consistent the locus is infinite.
    let present: BTreeSet<usize> = eqs
        .iter()
        .flat_map(|p| p.vars_present())
        .filter(|v| unresolved.contains(v))
        .collect();
    if present.len() < unresolved.len() {
        let mut inner = solve_rec(&eqs, &present);
        if !inner.solutions.is_empty() {
            inner.positive_dimensional = true;
            inner.residue = true;
            inner.solutions.clear();
        }
        return inner;
    }

    // Monomial-content split: m(x)·g = 0 means some content variable
    // vanishes or g does.
    if let Some((idx, content)) = eqs.iter().enumerate().find_map(|(i, p)| {
        let m = p.monomial_content();
        if m.iter().any(|&e| e > 0) {
            Some((i, m))
        } else {
            None
        }
    }) {
        let mut state = SearchState::empty();
        for (v, &e) in content.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let branch = substitute_value(&eqs, v, &Rat::zero());
            let mut rest = unresolved.clone();
            rest.remove(&v);
            let mut sub = solve_rec(&branch, &rest);
            state.absorb_flags(&sub);
            for mut a in sub.solutions.drain(..) {
                a.insert(v, Rat::zero());
                state.solutions.push(a);
            }
        }
        let mut cofactor = eqs.clone();
        cofactor[idx] = cofactor[idx].divide_by_monomial(&content);
        let sub = solve_rec(&cofactor, unresolved);
        state.absorb_flags(&sub);
        state.solutions.extend(sub.solutions);
        return state;
    }

    // Linear elimination: p = c·v + rest with nonzero constant c and rest
    // free of v gives v = -rest/c exactly.
    for (i, p) in eqs.iter().enumerate() {
        for &v in unresolved {
            if p.degree_in(v) != Some(1) {
                continue;
            }
            let coeffs = p.coeffs_wrt(v);
            let Some(c) = coeffs[1].as_constant() else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            let expr = coeffs[0].scale(&(-c.recip()));
            let name = eqs[i].vars()[v].clone();
            let mut rest: Vec<MultiPoly> = Vec::new();
            for (j, q) in eqs.iter().enumerate() {
                if j != i {
                    rest.push(q.substitute_one(&name, &expr));
                }
            }
            let mut sub_unresolved = unresolved.clone();
            sub_unresolved.remove(&v);
            let mut state = solve_rec(&rest, &sub_unresolved);
            let nvars = eqs[i].vars().len();
            for a in state.solutions.iter_mut() {
                let mut point = vec![Rat::zero(); nvars];
                for (&k, val) in a.iter() {
                    point[k] = val.clone();
                }
                let value = expr.eval(&point);
                a.insert(v, value);
            }
            return state;
        }
    }

    // Univariate base case: one variable left, so a gcd is sound.
    if unresolved.len() == 1 {
        let v = *unresolved.iter().next().unwrap();
        let mut state = SearchState::empty();
        if let Some(roots) = common_univariate_roots(&eqs, v, &mut state) {
            for r in roots {
                let mut a = Assignment::new();
                a.insert(v, r);
                state.solutions.push(a);
            }
        }
        return state;
    }

    // Projection: eliminate the unresolved variable of smallest worst-case
    // degree via pairwise resultants.
    let pivot = *unresolved
        .iter()
        .min_by_key(|&&v| {
            let maxdeg = eqs
                .iter()
                .filter_map(|p| p.degree_in(v))
                .max()
                .unwrap_or(0);
            (maxdeg, v)
        })
        .expect("nonempty unresolved set");

    let (with_pivot, without_pivot): (Vec<MultiPoly>, Vec<MultiPoly>) = eqs
        .iter()
        .cloned()
        .partition(|p| p.degree_in(pivot).map(|d| d > 0).unwrap_or(false));

    let mut projected: Vec<MultiPoly> = without_pivot;
    for i in 0..with_pivot.len() {
        for j in (i + 1)..with_pivot.len() {
            let res = resultant_wrt(&with_pivot[i], &with_pivot[j], pivot);
            if let Some(c) = res.as_constant() {
                if !c.is_zero() {
                    // A unit in the elimination ideal: provably no common
                    // zeros anywhere, over any extension.
                    return SearchState::empty();
                }
                // Zero resultant carries no information; drop it.
            } else {
                projected.push(res);
            }
        }
    }

    let mut rest_unresolved = unresolved.clone();
    rest_unresolved.remove(&pivot);

    if projected.is_empty() {
        // Every pair shares a common factor in the pivot and nothing else
        // constrains the remaining variables: cannot certify anything.
        return SearchState {
            solutions: Vec::new(),
            residue: true,
            positive_dimensional: true,
        };
    }

    let sub = solve_rec(&projected, &rest_unresolved);
    let mut state = SearchState::empty();
    state.absorb_flags(&sub);

    for partial in sub.solutions {
        // Substitute the partial solution into every pivot equation and
        // extend by their common rational roots.
        let substituted: Vec<MultiPoly> = with_pivot
            .iter()
            .map(|p| {
                let mut q = p.clone();
                for (&k, val) in partial.iter() {
                    let name = p.vars()[k].clone();
                    let c = MultiPoly::constant_over(
                        &p.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                        val.clone(),
                    );
                    q = q.substitute_one(&name, &c);
                }
                q
            })
            .collect();
        let mut local = SearchState::empty();
        let roots = common_univariate_roots(&substituted, pivot, &mut local);
        state.absorb_flags(&local);
        if let Some(roots) = roots {
            for r in roots {
                let mut a = partial.clone();
                a.insert(pivot, r);
                state.solutions.push(a);
            }
        }
    }
    state
}

/// Substitutes a constant value for variable `v` in every equation.
fn substitute_value(eqs: &[MultiPoly], v: usize, value: &Rat) -> Vec<MultiPoly> {
    eqs.iter()
        .map(|p| {
            let name = p.vars()[v].clone();
            let c = MultiPoly::constant_over(
                &p.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                value.clone(),
            );
            p.substitute_one(&name, &c)
        })
        .collect()
}

/// Common rational roots of a set of polynomials that are (at most)
/// univariate in `v`.
///
/// Returns `None` when the branch dies (an equation reduced to a nonzero
/// constant, or the gcd is a nonzero constant).  Flags free variables
/// (every equation vanished) and irrational residues (the squarefree gcd
/// has higher degree than its rational root count) on `state`.
fn common_univariate_roots(
    eqs: &[MultiPoly],
    v: usize,
    state: &mut SearchState,
) -> Option<Vec<Rat>> {
    let mut unis: Vec<UniPoly> = Vec::new();
    for p in eqs {
        if p.is_zero() {
            continue;
        }
        if let Some(c) = p.as_constant() {
            if c.is_zero() {
                continue;
            }
            return None;
        }
        let coeffs = p.coeffs_wrt(v);
        let consts: Option<Vec<Rat>> = coeffs.iter().map(|c| c.as_constant()).collect();
        let consts = consts.expect("equation must be univariate in the pivot");
        unis.push(UniPoly::from_coeffs(consts));
    }
    if unis.is_empty() {
        // Every equation vanished identically: the variable is free.
        state.residue = true;
        state.positive_dimensional = true;
        return None;
    }
    let mut g = unis[0].clone();
    for u in &unis[1..] {
        g = g.gcd(u);
    }
    match g.degree() {
        None => unreachable!("gcd of nonzero polynomials is nonzero"),
        Some(0) => return None,
        Some(_) => {}
    }
    let sf = g.squarefree_part();
    let roots = crate::exactmath::rational_roots(&sf);
    if roots.len() < sf.degree().unwrap_or(0) {
        // Some common zeros are irrational; the enumeration is incomplete
        // over the complex numbers.
        state.residue = true;
    }
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    const V: &[&str] = &["x", "y", "z"];

    fn x() -> MultiPoly {
        MultiPoly::var(V, "x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var(V, "y")
    }
    fn z() -> MultiPoly {
        MultiPoly::var(V, "z")
    }
    fn k(c: i64) -> MultiPoly {
        MultiPoly::constant_over(V, rat(c))
    }
    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn circle_and_line_meet_in_two_rational_points() {
        // x² + y² = 25, x + y = 7  →  (3,4) and (4,3).
        let c = x().mul(&x()).add(&y().mul(&y())).sub(&k(25));
        let l = x().add(&y()).sub(&k(7));
        let out = solve_system(&[c, l]);
        assert!(out.is_complete());
        assert_eq!(out.vars, vec!["x", "y"]);
        let want: BTreeSet<Vec<Rat>> = [pt(&[3, 4]), pt(&[4, 3])].into_iter().collect();
        assert_eq!(out.solutions, want);
    }

    #[test]
    fn inconsistent_system_is_certified_empty() {
        // x² + y² = 0 ∧ x + y = 7 has no real (let alone rational)
        // solutions; the resultant route certifies emptiness... over ℚ the
        // only zero of x²+y² is the origin, which fails the line.
        let c = x().mul(&x()).add(&y().mul(&y()));
        let l = x().add(&y()).sub(&k(7));
        let out = solve_system(&[c, l]);
        assert!(out.solutions.is_empty());
        assert!(!out.positive_dimensional);
    }

    #[test]
    fn three_coordinate_planes_meet_at_origin() {
        let out = solve_system(&[
            x().mul(&y()),
            y().mul(&z()),
            x().mul(&z()),
            x().add(&y()).add(&z()),
        ]);
        assert!(out.is_complete());
        let want: BTreeSet<Vec<Rat>> = [pt(&[0, 0, 0])].into_iter().collect();
        assert_eq!(out.solutions, want);
    }

    #[test]
    fn monomial_split_finds_all_axis_points() {
        // x·y = 0, x + y = 2  →  (0,2) and (2,0).
        let out = solve_system(&[x().mul(&y()), x().add(&y()).sub(&k(2))]);
        assert!(out.is_complete());
        let want: BTreeSet<Vec<Rat>> = [pt(&[0, 2]), pt(&[2, 0])].into_iter().collect();
        assert_eq!(out.solutions, want);
    }

    #[test]
    fn positive_dimensional_locus_is_flagged() {
        // One equation in two variables: a curve.
        let out = solve_system(&[x().add(&y())]);
        assert!(out.positive_dimensional);
        assert!(out.residue);
        assert!(out.solutions.is_empty());
    }

    #[test]
    fn shared_component_is_flagged_not_enumerated() {
        // Both equations vanish on the line x = y.
        let d = x().sub(&y());
        let out = solve_system(&[d.mul(&x()), d.mul(&y())]);
        assert!(out.positive_dimensional || out.residue);
    }

    #[test]
    fn irrational_solutions_raise_the_residue_flag() {
        // x² = 2, y = 1: solutions exist but none are rational.
        let out = solve_system(&[x().mul(&x()).sub(&k(2)), y().sub(&k(1))]);
        assert!(out.solutions.is_empty());
        assert!(out.residue);
        assert!(!out.positive_dimensional);
    }

    #[test]
    fn mixed_rational_and_irrational_roots() {
        // (x-1)(x²-2) = 0, y = x: only x = 1 is rational, and the residue
        // flag must still be raised for the √2 pair.
        let p = x()
            .sub(&k(1))
            .mul(&x().mul(&x()).sub(&k(2)));
        let out = solve_system(&[p, y().sub(&x())]);
        let want: BTreeSet<Vec<Rat>> = [pt(&[1, 1])].into_iter().collect();
        assert_eq!(out.solutions, want);
        assert!(out.residue);
    }

    #[test]
    fn twisted_cubic_points_on_a_hyperplane() {
        // y = x², z = x³, x + y + z = 14  →  only rational root x buried
        // in x³ + x² + x - 14 = 0 is… test by direct check: x=2 gives
        // 8+4+2=14. The cubic factors as (x-2)(x²+3x+7), the quadratic has
        // no rational roots but also no real ones; over ℂ they are extra
        // solutions, so the residue flag must be set.
        let out = solve_system(&[
            y().sub(&x().mul(&x())),
            z().sub(&x().mul(&x()).mul(&x())),
            x().add(&y()).add(&z()).sub(&k(14)),
        ]);
        let want: BTreeSet<Vec<Rat>> = [pt(&[2, 4, 8])].into_iter().collect();
        assert_eq!(out.solutions, want);
        assert!(out.residue);
    }

    #[test]
    fn zero_dimensional_system_with_multiplicity() {
        // (x-3)² = 0, (y+1)² = 0: a fat point, still one rational solution
        // and complete.
        let fx = x().sub(&k(3));
        let fy = y().add(&k(1));
        let out = solve_system(&[fx.mul(&fx), fy.mul(&fy)]);
        assert!(out.is_complete());
        let want: BTreeSet<Vec<Rat>> = [pt(&[3, -1])].into_iter().collect();
        assert_eq!(out.solutions, want);
    }

    #[test]
    fn system_over_three_variables_with_projection() {
        // Unit sphere-like quadric meets two quadrics in 4 rational
        // points: x²=1, y²=4, z=x·y.
        let out = solve_system(&[
            x().mul(&x()).sub(&k(1)),
            y().mul(&y()).sub(&k(4)),
            z().sub(&x().mul(&y())),
        ]);
        assert!(out.is_complete());
        assert_eq!(out.solutions.len(), 4);
        assert!(out.solutions.contains(&pt(&[1, 2, 2])));
        assert!(out.solutions.contains(&pt(&[-1, 2, -2])));
        assert!(out.solutions.contains(&pt(&[1, -2, -2])));
        assert!(out.solutions.contains(&pt(&[-1, -2, 2])));
    }
}
