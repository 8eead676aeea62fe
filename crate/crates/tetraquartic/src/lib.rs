//! Exact-arithmetic verification of the geometry and lattice theory of
//! tetrahedral quartic surfaces in projective 3-space.
//!
//! A *tetrahedral quartic* is a degree-4 surface containing all six edges of
//! the coordinate tetrahedron.  Such a surface is cut out by
//!
//! ```text
//! F = A·X0X1X2 + B·X0X1X3 + C·X0X2X3 + D·X1X2X3 + δ·X0X1X2X3
//! ```
//!
//! with linear face forms `A, B, C, D` in twelve rational coefficients.  For
//! generic coefficients it has exactly four nodes (the tetrahedron vertices),
//! contains exactly ten lines, and its minimal resolution is a K3 surface
//! whose Néron–Severi lattice contains a distinguished rank-11 lattice `M`.
//!
//! This crate reconstructs and machine-checks, in exact rational arithmetic,
//! every computable statement about that picture:
//!
//! * [`lattice`] — the rank-11 Gram matrix `M`, its signature `(1,10)`,
//!   determinant `±128`, Smith normal form, the named divisor-class registry
//!   (edges `L_ij`, exceptional curves `E_i`, residual lines `R_j`, the
//!   hyperplane class `H` and friends), and Riemann–Roch arithmetic.
//! * [`discform`] — the discriminant group `A_M = M*/M ≅ Z/8 ⊕ Z/4 ⊕ Z/4`
//!   with its quadratic form `q` (values in `Q/2Z`) and bilinear form `b`
//!   (values in `Q/Z`), plus a brute-force enumeration of `Aut(A_M, q)`.
//! * [`isometry`] — integer isometries of `M`: the two node-projection
//!   involutions, the `S4` coordinate action, the mirror swap, and an exact
//!   finite/infinite order decision procedure.
//! * [`quartic`] — the projective geometry of a concrete quartic: nodes,
//!   lines, cross-ratios, the branch sextic of the projection from a node,
//!   tritangency certificates, and elliptic-fibration fiber counts.
//! * [`exactmath`] — the shared engine: arbitrary-precision rationals,
//!   sparse multivariate polynomials, resultants, rational root extraction.
//! * [`solver`] — an exact solver for zero-dimensional polynomial systems
//!   over the rationals, used for singular-locus and line enumeration.
//! * [`report`] — claim records aggregating every verified statement, with
//!   deterministic text and JSON rendering for the CLI.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! crate.  Every claim check is literal equality of rational numbers,
//! vectors, or polynomials.

pub mod discform;
pub mod exactmath;
pub mod isometry;
pub mod lattice;
pub mod quartic;
pub mod report;
pub mod solver;

/// Convenient re-exports of the scalar types used across the crate.
pub mod prelude {
    pub use crate::exactmath::{Int, Rat};
    pub use num_traits::{One, Signed, Zero};
}
