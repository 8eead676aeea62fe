//! Projective geometry of tetrahedral quartics over the rationals.
//!
//! A tetrahedral quartic is a surface in projective 3-space containing all
//! six edges of the coordinate tetrahedron.  Its equation is determined by
//! twelve rational coefficients and a scale `δ`:
//!
//! ```text
//! F = A·X₀X₁X₂ + B·X₀X₁X₃ + C·X₀X₂X₃ + D·X₁X₂X₃ + δ·X₀X₁X₂X₃
//! A = a₀X₀ + a₁X₁ + a₂X₂      B = b₀X₀ + b₁X₁ + b₃X₃
//! C = c₀X₀ + c₂X₂ + c₃X₃      D = d₁X₁ + d₂X₂ + d₃X₃
//! ```
//!
//! Each face of the tetrahedron cuts the surface in its three edges plus
//! one *residual line*: the face `X₃ = 0` carries `{A = 0}` (class `R₄`),
//! `X₂ = 0` carries `{B = 0}` (`R₃`), `X₁ = 0` carries `{C = 0}` (`R₂`),
//! and `X₀ = 0` carries `{D = 0}` (`R₁`).
//!
//! Submodules compute, exactly: the singular locus ([`singular`]), the
//! cross-ratios of the marked points on the edges ([`crossratio`]), the
//! branch sextic of the projection from a node with its tritangent curves
//! ([`sextic`]), the singular fibers of the pencil-of-planes elliptic
//! fibrations ([`fibration`]), and the complete list of lines on the
//! surface ([`lines`]).

pub mod crossratio;
pub mod fibration;
pub mod lines;
pub mod sextic;
pub mod singular;

use num_traits::{One, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::exactmath::{parse_rat, MultiPoly, Rat};

pub use crossratio::{cross_ratio_oracle, cross_ratio_relation_symbolic, cross_ratios, CrossRatios};
pub use fibration::{fibration_fibers, FiberParam, FiberReport, Pencil};
pub use lines::{enumerate_lines, Line};
pub use sextic::{branch_sextic, tangency_cubic_check, tritangency_check, BranchSextic, TangentCurve};
pub use singular::{classify_surface_point, singular_locus_count};

/// The four homogeneous coordinates of the ambient projective space.
pub const SPACE_VARS: [&str; 4] = ["X0", "X1", "X2", "X3"];

/// The coordinates of the projection plane (the face `X₃ = 0`).
pub const PLANE_VARS: [&str; 3] = ["X0", "X1", "X2"];

/// Failure modes of the quartic geometry computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuarticError {
    /// Input file or JSON did not match the coefficient schema.
    #[error("input parse error: {0}")]
    InputParse(String),
    /// A coefficient string was not an exact rational `p/q`.
    #[error("not a rational number: {0}")]
    NonRational(String),
    /// A formula's denominator vanished for these coefficients.
    #[error("degenerate coefficient: {0}")]
    DegenerateCoefficient(String),
    /// The queried point does not lie on the surface.
    #[error("point is not on the surface")]
    PointNotOnSurface,
    /// The queried point does not lie on the curve.
    #[error("point is not on the curve")]
    PointNotOnCurve,
    /// The projection center is not a node of the surface.
    #[error("projection center is not a node: {0}")]
    NotANode(String),
    /// The singular locus is not a finite set of points.
    #[error("singular locus has positive dimension")]
    PositiveDimensionalLocus,
    /// An enumeration could not be certified complete (solutions over an
    /// extension field were detected).
    #[error("enumeration incomplete: {0}")]
    IncompleteEnumeration(String),
    /// A curve expected to be rationally parametrizable was not.
    #[error("parametrization failure: {0}")]
    ParametrizationFailure(String),
    /// A discriminant or elimination produced an unexpected factor
    /// structure (degenerate member of the family).
    #[error("unexpected factor structure: {0}")]
    UnexpectedFactor(String),
    /// Line enumeration collapsed onto a positive-dimensional family.
    #[error("infinite family of lines: {0}")]
    InfiniteFamily(String),
}

/// The twelve defining coefficients plus the scale `δ` of the
/// `X₀X₁X₂X₃` monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCoefficients {
    pub a0: Rat,
    pub a1: Rat,
    pub a2: Rat,
    pub b0: Rat,
    pub b1: Rat,
    pub b3: Rat,
    pub c0: Rat,
    pub c2: Rat,
    pub c3: Rat,
    pub d1: Rat,
    pub d2: Rat,
    pub d3: Rat,
    pub delta: Rat,
}

/// Field-by-field raw input schema: all values exact rationals as strings.
#[derive(Deserialize)]
struct RawCoefficients {
    a0: String,
    a1: String,
    a2: String,
    b0: String,
    b1: String,
    b3: String,
    c0: String,
    c2: String,
    c3: String,
    d1: String,
    d2: String,
    d3: String,
    delta: Option<String>,
}

/// Open genericity conditions, computed (never assumed) from the
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityFlags {
    /// All twelve coefficients are nonzero.
    pub all_coefficients_nonzero: bool,
    /// The four vertex triple products (`a₀b₀c₀`, `a₁b₁d₁`, `a₂c₂d₂`,
    /// `b₃c₃d₃`) are nonzero, so every vertex has a rank-3 tangent cone.
    pub node_products_nonzero: [bool; 4],
    /// The six cross-ratios are defined and pairwise distinct.
    pub cross_ratios_distinct: bool,
}

impl GenericityFlags {
    /// All flags hold.
    pub fn all(&self) -> bool {
        self.all_coefficients_nonzero
            && self.node_products_nonzero.iter().all(|&b| b)
            && self.cross_ratios_distinct
    }
}

impl QuarticCoefficients {
    /// Builds from the twelve coefficients in the order
    /// `a₀a₁a₂ b₀b₁b₃ c₀c₂c₃ d₁d₂d₃`, with `δ`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(coeffs: [Rat; 12], delta: Rat) -> Self {
        let [a0, a1, a2, b0, b1, b3, c0, c2, c3, d1, d2, d3] = coeffs;
        QuarticCoefficients {
            a0,
            a1,
            a2,
            b0,
            b1,
            b3,
            c0,
            c2,
            c3,
            d1,
            d2,
            d3,
            delta,
        }
    }

    /// Builds from small integers (convenience for tests and fixtures).
    pub fn from_i64(coeffs: [i64; 12], delta: i64) -> Self {
        let v: Vec<Rat> = coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect();
        Self::new(
            v.try_into().expect("twelve coefficients"),
            Rat::from_integer(delta.into()),
        )
    }

    /// The frozen reference sample used throughout the test suite: small
    /// distinct coefficients passing every genericity flag.
    pub fn reference_sample() -> Self {
        Self::from_i64([1, 2, 3, 2, 5, 1, 3, 1, 2, 1, 4, 3], 1)
    }

    /// Parses the JSON input schema: twelve mandatory string fields
    /// `a0..d3` holding exact rationals `p/q`, plus optional `delta`
    /// (default `1`).
    pub fn from_json_str(text: &str) -> Result<Self, QuarticError> {
        let raw: RawCoefficients =
            serde_json::from_str(text).map_err(|e| QuarticError::InputParse(e.to_string()))?;
        let field = |name: &str, value: &str| -> Result<Rat, QuarticError> {
            parse_rat(value)
                .map_err(|e| QuarticError::NonRational(format!("field {name}: {e}")))
        };
        let delta = match &raw.delta {
            Some(s) => field("delta", s)?,
            None => Rat::one(),
        };
        Ok(QuarticCoefficients {
            a0: field("a0", &raw.a0)?,
            a1: field("a1", &raw.a1)?,
            a2: field("a2", &raw.a2)?,
            b0: field("b0", &raw.b0)?,
            b1: field("b1", &raw.b1)?,
            b3: field("b3", &raw.b3)?,
            c0: field("c0", &raw.c0)?,
            c2: field("c2", &raw.c2)?,
            c3: field("c3", &raw.c3)?,
            d1: field("d1", &raw.d1)?,
            d2: field("d2", &raw.d2)?,
            d3: field("d3", &raw.d3)?,
            delta,
        })
    }

    /// The twelve coefficients in canonical order (no `δ`).
    pub fn as_array(&self) -> [&Rat; 12] {
        [
            &self.a0, &self.a1, &self.a2, &self.b0, &self.b1, &self.b3, &self.c0, &self.c2,
            &self.c3, &self.d1, &self.d2, &self.d3,
        ]
    }

    /// The canonical coefficient names, parallel to [`Self::as_array`].
    pub const NAMES: [&'static str; 12] = [
        "a0", "a1", "a2", "b0", "b1", "b3", "c0", "c2", "c3", "d1", "d2", "d3",
    ];

    /// Computes the genericity flags.
    pub fn genericity(&self) -> GenericityFlags {
        let all_nonzero = self.as_array().iter().all(|c| !c.is_zero());
        let prod = |x: &Rat, y: &Rat, z: &Rat| !(x * y * z).is_zero();
        let node_products_nonzero = [
            prod(&self.a0, &self.b0, &self.c0),
            prod(&self.a1, &self.b1, &self.d1),
            prod(&self.a2, &self.c2, &self.d2),
            prod(&self.b3, &self.c3, &self.d3),
        ];
        let cross_ratios_distinct = match crossratio::cross_ratios_from(self) {
            Ok(cr) => cr.pairwise_distinct(),
            Err(_) => false,
        };
        GenericityFlags {
            all_coefficients_nonzero: all_nonzero,
            node_products_nonzero,
            cross_ratios_distinct,
        }
    }
}

/// A tetrahedral quartic surface: coefficients plus the assembled
/// polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct TetraQuartic {
    coeffs: QuarticCoefficients,
    f: MultiPoly,
}

/// Assembles the quartic polynomial from its coefficients.
pub fn build_quartic(coeffs: QuarticCoefficients) -> TetraQuartic {
    let f = assemble_f(&coeffs);
    TetraQuartic { coeffs, f }
}

impl TetraQuartic {
    /// The defining coefficients.
    pub fn coeffs(&self) -> &QuarticCoefficients {
        &self.coeffs
    }

    /// The quartic polynomial `F` over `X₀..X₃`.
    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    /// The linear form of the face opposite vertex `j` (`1..=4`): `D` for
    /// the face `X₀ = 0`, `C` for `X₁ = 0`, `B` for `X₂ = 0`, `A` for
    /// `X₃ = 0`.  Its zero set on the face is the residual line `R_j`.
    pub fn face_form(&self, j: u8) -> MultiPoly {
        let c = &self.coeffs;
        let lin = |terms: [(usize, &Rat); 3]| -> MultiPoly {
            MultiPoly::from_terms(
                &SPACE_VARS,
                terms.iter().map(|(i, v)| {
                    let mut e = vec![0u16; 4];
                    e[*i] = 1;
                    (e, (*v).clone())
                }),
            )
        };
        match j {
            1 => lin([(1, &c.d1), (2, &c.d2), (3, &c.d3)]),
            2 => lin([(0, &c.c0), (2, &c.c2), (3, &c.c3)]),
            3 => lin([(0, &c.b0), (1, &c.b1), (3, &c.b3)]),
            4 => lin([(0, &c.a0), (1, &c.a1), (2, &c.a2)]),
            _ => panic!("face index must be 1..=4"),
        }
    }

    /// The coordinate that cuts out the face opposite vertex `j`:
    /// the face is `{X_{j-1} = 0}`.
    pub fn face_coordinate(j: u8) -> usize {
        assert!((1..=4).contains(&j), "face index must be 1..=4");
        j as usize - 1
    }

    /// Whether `F` vanishes identically on the edge joining vertices `i`
    /// and `j` (the line where the two complementary coordinates vanish).
    pub fn edge_vanishes(&self, i: u8, j: u8) -> bool {
        assert!(i != j && (1..=4).contains(&i) && (1..=4).contains(&j));
        let zero = MultiPoly::zero_over(&SPACE_VARS);
        let mut restricted = self.f.clone();
        for k in 1..=4u8 {
            if k != i && k != j {
                restricted = restricted.substitute_one(SPACE_VARS[k as usize - 1], &zero);
            }
        }
        restricted.is_zero()
    }
}

/// Builds `F` over the `X₀..X₃` universe from explicit coefficients.
fn assemble_f(c: &QuarticCoefficients) -> MultiPoly {
    // Exponent layout: (X0, X1, X2, X3).
    let term = |e: [u16; 4], v: &Rat| (e.to_vec(), v.clone());
    MultiPoly::from_terms(
        &SPACE_VARS,
        [
            // A·X0X1X2
            term([2, 1, 1, 0], &c.a0),
            term([1, 2, 1, 0], &c.a1),
            term([1, 1, 2, 0], &c.a2),
            // B·X0X1X3
            term([2, 1, 0, 1], &c.b0),
            term([1, 2, 0, 1], &c.b1),
            term([1, 1, 0, 2], &c.b3),
            // C·X0X2X3
            term([2, 0, 1, 1], &c.c0),
            term([1, 0, 2, 1], &c.c2),
            term([1, 0, 1, 2], &c.c3),
            // D·X1X2X3
            term([0, 2, 1, 1], &c.d1),
            term([0, 1, 2, 1], &c.d2),
            term([0, 1, 1, 2], &c.d3),
            // δ·X0X1X2X3
            term([1, 1, 1, 1], &c.delta),
        ],
    )
}

/// The sixteen-variable symbolic universe: coordinates first, then the
/// twelve coefficients, then `delta`.
pub const SYMBOLIC_VARS: [&str; 17] = [
    "X0", "X1", "X2", "X3", "a0", "a1", "a2", "b0", "b1", "b3", "c0", "c2", "c3", "d1", "d2",
    "d3", "delta",
];

/// The quartic with all twelve coefficients and `δ` as polynomial
/// indeterminates — the input for once-and-for-all symbolic identities.
pub fn symbolic_quartic() -> MultiPoly {
    let v = |name: &str| MultiPoly::var(&SYMBOLIC_VARS, name);
    let x0 = v("X0");
    let x1 = v("X1");
    let x2 = v("X2");
    let x3 = v("X3");
    let a = v("a0").mul(&x0).add(&v("a1").mul(&x1)).add(&v("a2").mul(&x2));
    let b = v("b0").mul(&x0).add(&v("b1").mul(&x1)).add(&v("b3").mul(&x3));
    let c = v("c0").mul(&x0).add(&v("c2").mul(&x2)).add(&v("c3").mul(&x3));
    let d = v("d1").mul(&x1).add(&v("d2").mul(&x2)).add(&v("d3").mul(&x3));
    let x012 = x0.mul(&x1).mul(&x2);
    let x013 = x0.mul(&x1).mul(&x3);
    let x023 = x0.mul(&x2).mul(&x3);
    let x123 = x1.mul(&x2).mul(&x3);
    a.mul(&x012)
        .add(&b.mul(&x013))
        .add(&c.mul(&x023))
        .add(&d.mul(&x123))
        .add(&v("delta").mul(&x012).mul(&x3))
}

/// Report of a local singularity analysis at a point of a surface or a
/// plane curve.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityReport {
    /// The analyzed point, in homogeneous coordinates.
    pub point: Vec<Rat>,
    /// Multiplicity of the defining polynomial at the point.
    pub multiplicity: usize,
    /// Rank of the quadratic part of the local expansion (0 unless
    /// multiplicity is exactly 2).
    pub tangent_cone_rank: usize,
    /// The classification.
    pub classification: PointType,
}

/// Local type of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointType {
    /// Multiplicity 1.
    Smooth,
    /// Multiplicity 2 with nondegenerate tangent cone (rank 3 on a
    /// surface, rank 2 on a plane curve).
    Node,
    /// Plane-curve double point with a double tangent line whose cubic
    /// term avoids that line.
    Cusp,
    /// Anything more degenerate.
    Worse,
}

impl std::fmt::Display for PointType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PointType::Smooth => "smooth",
            PointType::Node => "node",
            PointType::Cusp => "cusp",
            PointType::Worse => "worse",
        };
        write!(f, "{s}")
    }
}

/// Decomposes a polynomial (after dehomogenizing and translating a point
/// to the origin) into homogeneous parts; index = total degree.
pub(crate) fn homogeneous_parts(p: &MultiPoly) -> Vec<MultiPoly> {
    let n = match p.total_degree() {
        Some(d) => d as usize,
        None => return Vec::new(),
    };
    let var_refs: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut parts = vec![MultiPoly::zero_over(&var_refs); n + 1];
    for (e, c) in p.terms() {
        let d: usize = e.iter().map(|&x| x as usize).sum();
        parts[d] = parts[d].add(&MultiPoly::from_terms(
            &var_refs,
            [(e.clone(), c.clone())],
        ));
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn reference_sample_passes_every_genericity_flag() {
        let c = QuarticCoefficients::reference_sample();
        let flags = c.genericity();
        assert!(flags.all_coefficients_nonzero);
        assert_eq!(flags.node_products_nonzero, [true; 4]);
        assert!(flags.cross_ratios_distinct);
        assert!(flags.all());
    }

    #[test]
    fn all_ones_coefficients_are_flagged_degenerate() {
        let c = QuarticCoefficients::from_i64([1; 12], 1);
        let flags = c.genericity();
        assert!(flags.all_coefficients_nonzero);
        // Every cross-ratio equals 1: not pairwise distinct.
        assert!(!flags.cross_ratios_distinct);
        assert!(!flags.all());
    }

    #[test]
    fn quartic_has_thirteen_monomials_and_vanishes_on_all_edges() {
        let q = build_quartic(QuarticCoefficients::reference_sample());
        assert_eq!(q.f().term_count(), 13);
        for i in 1..=4u8 {
            for j in (i + 1)..=4u8 {
                assert!(q.edge_vanishes(i, j), "edge ({i},{j})");
            }
        }
    }

    #[test]
    fn face_restriction_is_the_face_form_times_the_triple_product() {
        // F restricted to X3 = 0 is A·X0X1X2.
        let q = build_quartic(QuarticCoefficients::reference_sample());
        let zero = MultiPoly::zero_over(&SPACE_VARS);
        let restricted = q.f().substitute_one("X3", &zero);
        let x012 = MultiPoly::var(&SPACE_VARS, "X0")
            .mul(&MultiPoly::var(&SPACE_VARS, "X1"))
            .mul(&MultiPoly::var(&SPACE_VARS, "X2"));
        assert_eq!(restricted, q.face_form(4).mul(&x012));
    }

    #[test]
    fn json_round_trip_and_error_reporting() {
        let ok = r#"{"a0":"1","a1":"2","a2":"3","b0":"2","b1":"5","b3":"1",
                     "c0":"3","c2":"1","c3":"2","d1":"1","d2":"4","d3":"3"}"#;
        let c = QuarticCoefficients::from_json_str(ok).unwrap();
        assert_eq!(c, QuarticCoefficients::reference_sample());

        let fraction = r#"{"a0":"3/7","a1":"2","a2":"3","b0":"2","b1":"5","b3":"1",
                     "c0":"3","c2":"1","c3":"2","d1":"1","d2":"4","d3":"3","delta":"-2/5"}"#;
        let c = QuarticCoefficients::from_json_str(fraction).unwrap();
        assert_eq!(c.a0, crate::exactmath::rat_frac(3, 7));
        assert_eq!(c.delta, crate::exactmath::rat_frac(-2, 5));

        let missing = r#"{"a0":"1","a1":"2","a2":"3","b0":"2","b1":"5","b3":"1",
                     "c0":"3","c2":"1","c3":"2","d1":"1","d2":"4"}"#;
        let err = QuarticCoefficients::from_json_str(missing).unwrap_err();
        match err {
            QuarticError::InputParse(msg) => assert!(msg.contains("d3"), "got {msg}"),
            other => panic!("wrong error {other:?}"),
        }

        let bad = r#"{"a0":"one","a1":"2","a2":"3","b0":"2","b1":"5","b3":"1",
                     "c0":"3","c2":"1","c3":"2","d1":"1","d2":"4","d3":"3"}"#;
        let err = QuarticCoefficients::from_json_str(bad).unwrap_err();
        match err {
            QuarticError::NonRational(msg) => assert!(msg.contains("a0"), "got {msg}"),
            other => panic!("wrong error {other:?}"),
        }
    }

    #[test]
    fn symbolic_quartic_specializes_to_the_assembled_one() {
        let sym = symbolic_quartic();
        let c = QuarticCoefficients::reference_sample();
        let mut bindings = std::collections::BTreeMap::new();
        for (name, value) in QuarticCoefficients::NAMES.iter().zip(c.as_array()) {
            bindings.insert(
                name.to_string(),
                MultiPoly::constant_over(&SYMBOLIC_VARS, value.clone()),
            );
        }
        bindings.insert(
            "delta".to_string(),
            MultiPoly::constant_over(&SYMBOLIC_VARS, rat(1)),
        );
        let specialized = sym.substitute(&bindings).with_universe(&SPACE_VARS);
        assert_eq!(specialized, build_quartic(c).f().clone());
    }
}
