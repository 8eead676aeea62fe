//! Elliptic fibrations on a tetrahedral quartic from pencils of planes.
//!
//! Two kinds of pencil sweep out genus-one fibrations on the (resolved)
//! surface:
//!
//! * the *edge pencils*: planes through a tetrahedron edge; the moving
//!   part of each plane section is a cubic, and
//! * the *residual pencils*: planes through one of the four residual
//!   lines.
//!
//! For each pencil the family of fiber cubics is computed in two affine
//! charts of the base line (`t` around one distinguished plane, `s`
//! around the other), and the discriminant of the ternary cubic is taken
//! exactly in each chart via the classical six-by-six resultant of the
//! three partial-derivative quadrics ([`salmon_discriminant`]).  The two
//! chart discriminants must be degree-24 reversals of one another up to
//! a constant — a cross-check that also certifies the order of vanishing
//! at the `t = ∞` fiber.  The total count (orders at the two
//! distinguished fibers plus the simple roots elsewhere) is the Euler
//! number of the fibration, which must come out to 24.

use num_traits::{One, Zero};

use crate::exactmath::{det_bareiss, rational_roots, MultiPoly, Rat, UniPoly};

use super::sextic::plane_curve_singular_points;
use super::{PointType, QuarticError, TetraQuartic, SPACE_VARS};

/// A pencil of planes on the quartic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pencil {
    /// Planes through the edge joining vertices `i < j`.
    Edge(u8, u8),
    /// Planes through the residual line `R_j` of the face opposite
    /// vertex `j`.
    Residual(u8),
}

impl std::fmt::Display for Pencil {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pencil::Edge(i, j) => write!(f, "edge pencil ({i}, {j})"),
            Pencil::Residual(j) => write!(f, "residual pencil R{j}"),
        }
    }
}

/// The two distinguished base points of a pencil chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberParam {
    /// The plane at parameter `t = 0`.
    Zero,
    /// The plane at parameter `t = ∞` (i.e. `s = 0` in the other chart).
    Infinity,
}

impl std::fmt::Display for FiberParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FiberParam::Zero => write!(f, "t = 0"),
            FiberParam::Infinity => write!(f, "t = ∞"),
        }
    }
}

/// Exact fiber accounting for one pencil.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberReport {
    pub pencil: Pencil,
    /// Degree of the discriminant in the finite chart.
    pub discriminant_degree: usize,
    /// Multiplicity of the discriminant at each distinguished plane with
    /// positive order (the reducible fibers), as `(order, parameter)`.
    pub reducible_fibers: Vec<(usize, FiberParam)>,
    /// Number of simple discriminant roots away from the distinguished
    /// planes — fibers with a single node each.
    pub nodal_fiber_count: usize,
    /// The rational ones among those roots, each verified to carry a
    /// cubic with exactly one node.
    pub verified_nodal_parameters: Vec<Rat>,
    /// Sum of all root multiplicities over the whole base: the Euler
    /// number, 24 for a fibration on a K3 surface.
    pub euler_sum: usize,
}

/// A family of plane cubics over one affine chart of the pencil base.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicFamily {
    /// The cubic, homogeneous of degree 3 in `coords`, polynomial of
    /// degree ≤ 2 in the chart parameter `t`.
    pub cubic: MultiPoly,
    /// The three plane coordinates.
    pub coords: [&'static str; 3],
}

/// The working universe: space coordinates plus the chart parameter.
const CHART_VARS: [&str; 5] = ["X0", "X1", "X2", "X3", "t"];

/// The vertex pair complementary to `{i, j}` in `{1, 2, 3, 4}`.
fn complement(i: u8, j: u8) -> (u8, u8) {
    let rest: Vec<u8> = (1..=4).filter(|v| *v != i && *v != j).collect();
    (rest[0], rest[1])
}

/// Substitutes one coordinate by a replacement and strips the base-line
/// factor, producing the fiber cubic family of one chart.
fn chart_cubic(
    quartic: &TetraQuartic,
    eliminated: &str,
    replacement: &MultiPoly,
    divisor: &MultiPoly,
    pencil: Pencil,
) -> Result<MultiPoly, QuarticError> {
    let f = quartic.f().with_universe(&CHART_VARS);
    let substituted = f.substitute_one(eliminated, replacement);
    let cubic = substituted.exact_div(divisor).ok_or_else(|| {
        QuarticError::UnexpectedFactor(format!(
            "plane sections of the {pencil} do not contain the base line"
        ))
    })?;
    Ok(cubic)
}

/// Builds the fiber cubic families of both charts: `(around t = 0,
/// around t = ∞)`.
fn pencil_charts(
    quartic: &TetraQuartic,
    pencil: Pencil,
) -> Result<(CubicFamily, CubicFamily), QuarticError> {
    let var = |name: &str| MultiPoly::var(&CHART_VARS, name);
    let t = var("t");
    match pencil {
        Pencil::Edge(i, j) => {
            assert!(i < j && (1..=4).contains(&i) && (1..=4).contains(&j));
            let (k, l) = complement(i, j);
            let xk = SPACE_VARS[k as usize - 1];
            let xl = SPACE_VARS[l as usize - 1];
            let coords_right = [SPACE_VARS[i as usize - 1], SPACE_VARS[j as usize - 1], xk];
            let coords_left = [SPACE_VARS[i as usize - 1], SPACE_VARS[j as usize - 1], xl];
            // Right chart: the plane {X_{l−1} = t·X_{k−1}}; t = 0 is the
            // face {X_{l−1} = 0}; the base edge inside the plane is
            // {X_{k−1} = 0}.
            let right = chart_cubic(quartic, xl, &t.mul(&var(xk)), &var(xk), pencil)?;
            // Left chart: the plane {X_{k−1} = t·X_{l−1}}.
            let left = chart_cubic(quartic, xk, &t.mul(&var(xl)), &var(xl), pencil)?;
            Ok((
                CubicFamily {
                    cubic: right,
                    coords: coords_right,
                },
                CubicFamily {
                    cubic: left,
                    coords: coords_left,
                },
            ))
        }
        Pencil::Residual(j) => {
            assert!((1..=4).contains(&j));
            let xj = SPACE_VARS[j as usize - 1];
            let phi = quartic.face_form(j).with_universe(&CHART_VARS);
            // Right chart: the plane {X_{j−1} = t·Φ}; t = 0 is the face
            // {X_{j−1} = 0}; the base line R_j inside the plane is
            // {Φ = 0}.
            let right = chart_cubic(quartic, xj, &t.mul(&phi), &phi, pencil)?;
            let coords_right: [&str; 3] = SPACE_VARS
                .iter()
                .copied()
                .filter(|v| *v != xj)
                .collect::<Vec<_>>()
                .try_into()
                .expect("three coordinates remain");
            // Left chart: the plane {Φ = t·X_{j−1}}, solved for the last
            // coordinate of Φ with nonzero coefficient.
            let (pick, coeff) = face_form_pivot(quartic, j)?;
            let rest = phi.sub(&var(pick).scale(&coeff));
            let replacement = t
                .mul(&var(xj))
                .sub(&rest)
                .scale(&(Rat::one() / &coeff));
            let left = chart_cubic(quartic, pick, &replacement, &var(xj), pencil)?;
            let coords_left: [&str; 3] = SPACE_VARS
                .iter()
                .copied()
                .filter(|v| *v != pick)
                .collect::<Vec<_>>()
                .try_into()
                .expect("three coordinates remain");
            Ok((
                CubicFamily {
                    cubic: right,
                    coords: coords_right,
                },
                CubicFamily {
                    cubic: left,
                    coords: coords_left,
                },
            ))
        }
    }
}

/// The last coordinate of `face_form(j)` with nonzero coefficient, used
/// to solve the plane equation of the left chart.
fn face_form_pivot(
    quartic: &TetraQuartic,
    j: u8,
) -> Result<(&'static str, Rat), QuarticError> {
    let phi = quartic.face_form(j);
    for idx in (0..4).rev() {
        let c = phi
            .terms()
            .find(|(e, _)| e[idx] == 1)
            .map(|(_, c)| c.clone());
        if let Some(c) = c {
            if !c.is_zero() {
                return Ok((SPACE_VARS[idx], c));
            }
        }
    }
    Err(QuarticError::DegenerateCoefficient(format!(
        "face form of R{j} vanishes identically"
    )))
}

/// The public fiber-family accessor: the cubic family of the chart
/// around `t = 0` (for [`FiberParam::Zero`]) or around the plane at
/// infinity (for [`FiberParam::Infinity`], where the local parameter is
/// again called `t`).
pub fn pencil_cubic_family(
    quartic: &TetraQuartic,
    pencil: Pencil,
    around: FiberParam,
) -> Result<CubicFamily, QuarticError> {
    let (right, left) = pencil_charts(quartic, pencil)?;
    Ok(match around {
        FiberParam::Zero => right,
        FiberParam::Infinity => left,
    })
}

/// The 6-vector of coefficients of a quadratic form in the three
/// `coords`, over the monomial basis
/// `[x², y², z², yz, xz, xy]`; entries are polynomials in the remaining
/// variables.
fn quadric_coefficients(f: &MultiPoly, idx: [usize; 3]) -> Vec<MultiPoly> {
    let var_refs: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let mut slots: Vec<Vec<(Vec<u16>, Rat)>> = vec![Vec::new(); 6];
    for (e, c) in f.terms() {
        let key = (e[idx[0]], e[idx[1]], e[idx[2]]);
        let slot = match key {
            (2, 0, 0) => 0,
            (0, 2, 0) => 1,
            (0, 0, 2) => 2,
            (0, 1, 1) => 3,
            (1, 0, 1) => 4,
            (1, 1, 0) => 5,
            _ => panic!("form is not quadratic in the fiber coordinates"),
        };
        let mut ne = e.clone();
        for &i in &idx {
            ne[i] = 0;
        }
        slots[slot].push((ne, c.clone()));
    }
    slots
        .into_iter()
        .map(|terms| MultiPoly::from_terms(&var_refs, terms))
        .collect()
}

/// Discriminant of a ternary cubic by the classical resultant of its
/// three partial-derivative quadrics: the determinant of the six-by-six
/// matrix whose first three rows are the quadrics' coefficient vectors
/// and whose last three are those of the partials of their Jacobian
/// determinant.
///
/// The result is a polynomial in the non-`coords` variables; it vanishes
/// exactly when the cubic is singular.  Normalization control: for
/// `y²z − x³ − pxz² − qz³` it equals `2¹³·3³·(4p³ + 27q²)`.
pub fn salmon_discriminant(cubic: &MultiPoly, coords: &[&str; 3]) -> MultiPoly {
    let idx: [usize; 3] = coords.map(|c| {
        cubic
            .var_index(c)
            .expect("fiber coordinate present in the cubic's universe")
    });
    let partials: Vec<MultiPoly> = idx.iter().map(|&i| cubic.partial(i)).collect();
    let jacobian: Vec<Vec<MultiPoly>> = partials
        .iter()
        .map(|f| idx.iter().map(|&j| f.partial(j)).collect())
        .collect();
    let j = det_bareiss(&jacobian);
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(6);
    for f in &partials {
        rows.push(quadric_coefficients(f, idx));
    }
    for &i in &idx {
        rows.push(quadric_coefficients(&j.partial(i), idx));
    }
    det_bareiss(&rows)
}

/// Converts a polynomial in the single variable `t` to dense univariate
/// form.
fn to_unipoly(p: &MultiPoly, param: &str) -> UniPoly {
    let Some(ti) = p.var_index(param) else {
        // Constant in the parameter.
        return UniPoly::from_coeffs(vec![p.as_constant().expect("constant polynomial")]);
    };
    if p.is_zero() {
        return UniPoly::from_coeffs(Vec::new());
    }
    let coeffs: Vec<Rat> = p
        .coeffs_wrt(ti)
        .iter()
        .map(|c| {
            c.as_constant()
                .expect("discriminant depends only on the parameter")
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// Verifies that the two chart discriminants are reversals of one
/// another at degree 24 up to a nonzero constant.
fn reversal_consistent(right: &UniPoly, left: &UniPoly) -> bool {
    let pad = |p: &UniPoly| -> Vec<Rat> {
        let mut v = p.coeffs().to_vec();
        v.resize(25, Rat::zero());
        v
    };
    if right.degree().unwrap_or(0) > 24 || left.degree().unwrap_or(0) > 24 {
        return false;
    }
    let r = pad(right);
    let l = pad(left);
    // l[24 − i] = γ·r[i] for a single nonzero γ: cross-multiply.
    let Some(i0) = (0..25).find(|&i| !r[i].is_zero() || !l[24 - i].is_zero()) else {
        return false;
    };
    if r[i0].is_zero() || l[24 - i0].is_zero() {
        return false;
    }
    (0..25).all(|i| &l[24 - i] * &r[i0] == &l[24 - i0] * &r[i])
}

/// Computes the exact singular-fiber accounting of a pencil.
///
/// Errors with [`QuarticError::UnexpectedFactor`] when the discriminant
/// degenerates: an identically-zero discriminant, chart inconsistency, a
/// multiple root away from the distinguished planes, or a rational nodal
/// parameter whose fiber fails verification.
pub fn fibration_fibers(
    quartic: &TetraQuartic,
    pencil: Pencil,
) -> Result<FiberReport, QuarticError> {
    let (right, left) = pencil_charts(quartic, pencil)?;
    for family in [&right, &left] {
        debug_assert!(family
            .cubic
            .terms()
            .all(|(e, _)| {
                let d: usize = family
                    .coords
                    .iter()
                    .map(|c| e[family.cubic.var_index(c).unwrap()] as usize)
                    .sum();
                d == 3
            }));
    }
    let disc_right = to_unipoly(&salmon_discriminant(&right.cubic, &right.coords), "t");
    let disc_left = to_unipoly(&salmon_discriminant(&left.cubic, &left.coords), "t");
    if disc_right.is_zero() || disc_left.is_zero() {
        return Err(QuarticError::UnexpectedFactor(format!(
            "discriminant of the {pencil} vanishes identically"
        )));
    }
    if !reversal_consistent(&disc_right, &disc_left) {
        return Err(QuarticError::UnexpectedFactor(format!(
            "chart discriminants of the {pencil} are not degree-24 reversals"
        )));
    }
    let degree = disc_right.degree().expect("nonzero discriminant");
    let ord_zero = disc_right.ord_at_zero().expect("nonzero discriminant");
    let ord_infinity = disc_left.ord_at_zero().expect("nonzero discriminant");
    debug_assert_eq!(ord_infinity, 24 - degree);

    // The fibers away from the distinguished planes: the cofactor after
    // stripping t^ord0 must be squarefree, so each remaining root is
    // simple (a one-node fiber).
    let cofactor = strip_power_of_t(&disc_right, ord_zero);
    let sf = cofactor.squarefree_part();
    if sf.degree() != cofactor.degree() {
        return Err(QuarticError::UnexpectedFactor(format!(
            "the {pencil} has a multiple singular fiber away from the distinguished planes"
        )));
    }
    let nodal_fiber_count = degree - ord_zero;

    // Verify nodality at every rational root: the fiber cubic must have
    // exactly one singular point, of node type.
    let mut verified_nodal_parameters = Vec::new();
    for root in rational_roots(&cofactor) {
        verify_nodal_fiber(&right, &root, pencil)?;
        verified_nodal_parameters.push(root);
    }

    let mut reducible_fibers = Vec::new();
    if ord_zero > 0 {
        reducible_fibers.push((ord_zero, FiberParam::Zero));
    }
    if ord_infinity > 0 {
        reducible_fibers.push((ord_infinity, FiberParam::Infinity));
    }
    Ok(FiberReport {
        pencil,
        discriminant_degree: degree,
        reducible_fibers,
        nodal_fiber_count,
        verified_nodal_parameters,
        euler_sum: ord_zero + ord_infinity + nodal_fiber_count,
    })
}

/// Divides a univariate polynomial by `t^k` exactly.
fn strip_power_of_t(p: &UniPoly, k: usize) -> UniPoly {
    UniPoly::from_coeffs(p.coeffs()[k..].to_vec())
}

/// Confirms that the fiber cubic at a rational parameter is a plane
/// cubic with exactly one singular point, of node type.
fn verify_nodal_fiber(
    family: &CubicFamily,
    value: &Rat,
    pencil: Pencil,
) -> Result<(), QuarticError> {
    let bound = MultiPoly::constant_over(&CHART_VARS, value.clone());
    let fiber = family
        .cubic
        .substitute_one("t", &bound)
        .with_universe(&family.coords);
    let reports = plane_curve_singular_points(&fiber)?;
    let ok = reports.len() == 1 && reports[0].classification == PointType::Node;
    if !ok {
        return Err(QuarticError::UnexpectedFactor(format!(
            "fiber of the {pencil} at t = {value} is not a one-node cubic"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::quartic::{build_quartic, QuarticCoefficients};

    #[test]
    fn weierstrass_control_pins_the_discriminant_normalization() {
        let vars = ["x", "y", "z", "p", "q"];
        let v = |n: &str| MultiPoly::var(&vars, n);
        let cubic = v("y")
            .mul(&v("y"))
            .mul(&v("z"))
            .sub(&v("x").mul(&v("x")).mul(&v("x")))
            .sub(&v("p").mul(&v("x")).mul(&v("z")).mul(&v("z")))
            .sub(&v("q").mul(&v("z")).mul(&v("z")).mul(&v("z")));
        let disc = salmon_discriminant(&cubic, &["x", "y", "z"]);
        let four = MultiPoly::constant_over(&vars, rat(4));
        let twenty_seven = MultiPoly::constant_over(&vars, rat(27));
        let expected = four
            .mul(&v("p").pow(3))
            .add(&twenty_seven.mul(&v("q").pow(2)))
            .scale(&rat(221184));
        assert_eq!(disc, expected);
    }

    #[test]
    fn smooth_fermat_cubic_has_nonzero_discriminant() {
        let vars = ["x", "y", "z"];
        let v = |n: &str| MultiPoly::var(&vars, n);
        let fermat = v("x").pow(3).add(&v("y").pow(3)).add(&v("z").pow(3));
        let disc = salmon_discriminant(&fermat, &["x", "y", "z"]);
        assert!(!disc.is_zero());
        // A cubic with a node: xyz + x³ → singular at (0:0:1) and (0:1:0)?
        // Use the nodal cubic y²z − x²(x + z): discriminant must vanish.
        let nodal = v("y")
            .mul(&v("y"))
            .mul(&v("z"))
            .sub(&v("x").mul(&v("x")).mul(&v("x").add(&v("z"))));
        assert!(salmon_discriminant(&nodal, &["x", "y", "z"]).is_zero());
    }

    #[test]
    fn edge_pencil_of_the_reference_sample() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let report = fibration_fibers(&q, Pencil::Edge(1, 2)).unwrap();
        assert_eq!(report.discriminant_degree, 20);
        assert_eq!(
            report.reducible_fibers,
            vec![(4, FiberParam::Zero), (4, FiberParam::Infinity)]
        );
        assert_eq!(report.nodal_fiber_count, 16);
        assert_eq!(report.euler_sum, 24);
    }

    #[test]
    fn residual_pencil_of_the_reference_sample() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let report = fibration_fibers(&q, Pencil::Residual(3)).unwrap();
        assert_eq!(
            report.reducible_fibers,
            vec![(6, FiberParam::Zero), (2, FiberParam::Infinity)]
        );
        assert_eq!(report.nodal_fiber_count, 16);
        assert_eq!(report.euler_sum, 24);
    }

    #[test]
    fn distinguished_fibers_factor_into_the_expected_components() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let zero = MultiPoly::zero_over(&CHART_VARS);

        // Edge pencil (1, 2), fiber at t = 0 (the face X3 = 0): the cubic
        // is A·X0·X1 — the residual line R4 and the edges L13, L23.
        let family = pencil_cubic_family(&q, Pencil::Edge(1, 2), FiberParam::Zero).unwrap();
        let fiber = family.cubic.substitute_one("t", &zero);
        let expected = q
            .face_form(4)
            .with_universe(&CHART_VARS)
            .mul(&MultiPoly::var(&CHART_VARS, "X0"))
            .mul(&MultiPoly::var(&CHART_VARS, "X1"));
        assert_eq!(fiber, expected);

        // Residual pencil R3, fiber at t = 0 (the face X2 = 0): the cubic
        // is X0·X1·X3 — the three edges of that face.
        let family = pencil_cubic_family(&q, Pencil::Residual(3), FiberParam::Zero).unwrap();
        let fiber = family.cubic.substitute_one("t", &zero);
        let expected = MultiPoly::var(&CHART_VARS, "X0")
            .mul(&MultiPoly::var(&CHART_VARS, "X1"))
            .mul(&MultiPoly::var(&CHART_VARS, "X3"));
        assert_eq!(fiber, expected);

        // Residual pencil R3, fiber at t = ∞ (the plane B = 0): an
        // irreducible cubic with a single node at the vertex E3 — the
        // source of the I2 fiber on the resolved surface.
        let family = pencil_cubic_family(&q, Pencil::Residual(3), FiberParam::Infinity).unwrap();
        let fiber = family
            .cubic
            .substitute_one("t", &zero)
            .with_universe(&family.coords);
        let reports = plane_curve_singular_points(&fiber).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].classification, PointType::Node);
        // The left chart of R3 eliminates X3, so the plane is charted by
        // (X0, X1, X2) and the node E3 = (0:0:1:0) appears at (0, 0, 1).
        assert_eq!(family.coords, ["X0", "X1", "X2"]);
        assert_eq!(reports[0].point, vec![rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn all_six_edge_pencils_have_euler_sum_24() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        for &(i, j) in crate::quartic::crossratio::EDGES.iter() {
            let report = fibration_fibers(&q, Pencil::Edge(i, j)).unwrap();
            assert_eq!(report.euler_sum, 24, "edge ({i}, {j})");
            assert_eq!(
                report.reducible_fibers,
                vec![(4, FiberParam::Zero), (4, FiberParam::Infinity)],
                "edge ({i}, {j})"
            );
        }
    }

    #[test]
    fn all_four_residual_pencils_have_euler_sum_24() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        for j in 1..=4u8 {
            let report = fibration_fibers(&q, Pencil::Residual(j)).unwrap();
            assert_eq!(report.euler_sum, 24, "residual R{j}");
            assert_eq!(
                report.reducible_fibers,
                vec![(6, FiberParam::Zero), (2, FiberParam::Infinity)],
                "residual R{j}"
            );
        }
    }
}
