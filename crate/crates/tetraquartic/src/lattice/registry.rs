//! The concrete rank-11 lattice of a four-nodal tetrahedral quartic and its
//! registry of named divisor classes.
//!
//! On the minimal resolution of a generic tetrahedral quartic the following
//! curves are distinguished: the six edge lines `L_ij` of the coordinate
//! tetrahedron, the four exceptional `(-2)`-curves `E_i` over the nodes,
//! and the four residual lines `R_j` (the line cut on the face opposite
//! vertex `j` by the quartic, residual to the three edges in that face).
//! The classes `l_12, l_13, l_14, l_23, l_24, l_34, e_1..e_4, r_1` are a
//! basis of the lattice `M` they span; the registry stores every other
//! class of interest as an integer combination:
//!
//! * `R_2 = R_1 + E_2 - E_1 + L_23 + L_24 - L_13 - L_14`, and cyclic
//!   analogues for `R_3`, `R_4`;
//! * `H`, the hyperplane class, e.g. `L_12 + L_24 + L_14 + E_1 + E_2 + E_4
//!   + R_3` (four such expressions exist and must agree);
//! * `A`, the sum of all fourteen lines;
//! * `A_0 = 3H - ΣE_i`, the polarization blowing the nodes down to a
//!   degree-28 model;
//! * `H' = A - L_14 - L_23`, the degree-8 model polarization;
//! * `H^v = 3H - 2ΣE_i - ΣL_ij`, the mirror image of `H`;
//! * `C = A + L_12`, used in arithmetic-genus checks.

use std::fmt;

use num_traits::Zero;

use super::{GramLattice, LatticeError, LatticeVector};
use crate::exactmath::{Int, ZMatrix};

/// Names understood by the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassName {
    /// Edge line class `L_ij`, `1 ≤ i < j ≤ 4`.
    Edge(u8, u8),
    /// Exceptional class `E_i` over the `i`-th node, `1 ≤ i ≤ 4`.
    Exceptional(u8),
    /// Residual line class `R_j`, `1 ≤ j ≤ 4`.
    Residual(u8),
    /// Hyperplane class `H` of the quartic model.
    H,
    /// `A`, the sum of all fourteen line classes.
    A,
    /// `A_0 = 3H - ΣE_i`.
    A0,
    /// `H' = A - L_14 - L_23`.
    HPrime,
    /// `H^v = 3H - 2ΣE_i - ΣL_ij`.
    HMirror,
    /// `C = A + L_12`.
    C,
}

impl ClassName {
    /// Every registered name, in a fixed deterministic order.
    pub fn all() -> Vec<ClassName> {
        let mut names = Vec::new();
        names.extend(EDGE_PAIRS.iter().map(|&(i, j)| ClassName::Edge(i, j)));
        names.extend((1..=4).map(ClassName::Exceptional));
        names.extend((1..=4).map(ClassName::Residual));
        names.extend([
            ClassName::H,
            ClassName::A,
            ClassName::A0,
            ClassName::HPrime,
            ClassName::HMirror,
            ClassName::C,
        ]);
        names
    }

    /// Parses the textual form produced by `Display` (`L12`, `E3`, `R2`,
    /// `H`, `A`, `A0`, `H'`, `Hv`, `C`).
    pub fn parse(s: &str) -> Result<ClassName, LatticeError> {
        let unknown = || LatticeError::UnknownName(s.to_string());
        match s {
            "H" => return Ok(ClassName::H),
            "A" => return Ok(ClassName::A),
            "A0" => return Ok(ClassName::A0),
            "H'" => return Ok(ClassName::HPrime),
            "Hv" => return Ok(ClassName::HMirror),
            "C" => return Ok(ClassName::C),
            _ => {}
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(unknown)?;
        let digits: String = chars.collect();
        match head {
            'L' => {
                let [i, j] = digits.as_bytes() else {
                    return Err(unknown());
                };
                let (i, j) = (i - b'0', j - b'0');
                if EDGE_PAIRS.contains(&(i, j)) {
                    Ok(ClassName::Edge(i, j))
                } else {
                    Err(unknown())
                }
            }
            'E' | 'R' => {
                let k: u8 = digits.parse().map_err(|_| unknown())?;
                if !(1..=4).contains(&k) {
                    return Err(unknown());
                }
                Ok(if head == 'E' {
                    ClassName::Exceptional(k)
                } else {
                    ClassName::Residual(k)
                })
            }
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassName::Edge(i, j) => write!(f, "L{i}{j}"),
            ClassName::Exceptional(i) => write!(f, "E{i}"),
            ClassName::Residual(j) => write!(f, "R{j}"),
            ClassName::H => write!(f, "H"),
            ClassName::A => write!(f, "A"),
            ClassName::A0 => write!(f, "A0"),
            ClassName::HPrime => write!(f, "H'"),
            ClassName::HMirror => write!(f, "Hv"),
            ClassName::C => write!(f, "C"),
        }
    }
}

/// The six edge index pairs in basis order.
pub const EDGE_PAIRS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Gram matrix of `M` in the basis
/// `l_12, l_13, l_14, l_23, l_24, l_34, e_1, e_2, e_3, e_4, r_1`:
/// every basis class is a smooth rational curve (square `-2`); an edge
/// meets `e_i` exactly when `i` is one of its endpoints, and meets `r_1`
/// exactly when it lies in the face `X_0 = 0`.
const GRAM_ROWS: [[i64; 11]; 11] = [
    [-2, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, -2, 0, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, -2, 0, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, -2, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, -2, 0, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, -2, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0, -2, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, -2, 0, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0, -2, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, -2],
];

/// Outcome of one registry identity check: the residual vector of a linear
/// identity that must vanish.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    /// Short identifier of the identity.
    pub name: &'static str,
    /// Left-hand side minus right-hand side, in basis coordinates.
    pub residual: LatticeVector,
}

impl IdentityCheck {
    /// Whether the identity holds exactly.
    pub fn ok(&self) -> bool {
        self.residual.iter().all(|c| c.is_zero())
    }
}

/// The lattice `M` together with its named classes.
#[derive(Debug, Clone)]
pub struct ClassRegistry {
    lattice: GramLattice,
}

impl Default for ClassRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassRegistry {
    /// The 11×11 Gram matrix of `M`.
    pub fn gram_matrix() -> ZMatrix {
        ZMatrix::from_i64(&GRAM_ROWS.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    /// Builds the registry over `M`.
    pub fn new() -> Self {
        ClassRegistry {
            lattice: GramLattice::new(Self::gram_matrix()),
        }
    }

    /// The underlying lattice.
    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    /// Index of a basis class in the fixed basis order.
    fn basis_index(name: ClassName) -> Option<usize> {
        match name {
            ClassName::Edge(i, j) => EDGE_PAIRS.iter().position(|&p| p == (i, j)),
            ClassName::Exceptional(i) => Some(5 + i as usize),
            ClassName::Residual(1) => Some(10),
            _ => None,
        }
    }

    /// Coordinates of a named class in the basis of `M`.
    pub fn class(&self, name: ClassName) -> LatticeVector {
        if let Some(k) = Self::basis_index(name) {
            let mut v = vec![Int::zero(); 11];
            v[k] = Int::from(1);
            return v;
        }
        let combo = |parts: &[(i64, ClassName)]| -> LatticeVector {
            let mut acc = vec![Int::zero(); 11];
            for &(c, part) in parts {
                for (a, b) in acc.iter_mut().zip(self.class(part)) {
                    *a += Int::from(c) * b;
                }
            }
            acc
        };
        use ClassName::*;
        match name {
            // R_j = R_1 + E_j - E_1 + (edges through neither 1 nor j)
            //     - (edges through both ... ) — concretely:
            Residual(2) => combo(&[
                (1, Residual(1)),
                (1, Exceptional(2)),
                (-1, Exceptional(1)),
                (1, Edge(2, 3)),
                (1, Edge(2, 4)),
                (-1, Edge(1, 3)),
                (-1, Edge(1, 4)),
            ]),
            Residual(3) => combo(&[
                (1, Residual(1)),
                (1, Exceptional(3)),
                (-1, Exceptional(1)),
                (1, Edge(2, 3)),
                (1, Edge(3, 4)),
                (-1, Edge(1, 4)),
                (-1, Edge(1, 2)),
            ]),
            Residual(4) => combo(&[
                (1, Residual(1)),
                (1, Exceptional(4)),
                (-1, Exceptional(1)),
                (1, Edge(2, 4)),
                (1, Edge(3, 4)),
                (-1, Edge(1, 2)),
                (-1, Edge(1, 3)),
            ]),
            H => combo(&[
                (1, Edge(1, 2)),
                (1, Edge(2, 4)),
                (1, Edge(1, 4)),
                (1, Exceptional(1)),
                (1, Exceptional(2)),
                (1, Exceptional(4)),
                (1, Residual(3)),
            ]),
            A => {
                let mut parts: Vec<(i64, ClassName)> = Vec::new();
                parts.extend(EDGE_PAIRS.iter().map(|&(i, j)| (1, Edge(i, j))));
                parts.extend((1..=4).map(|i| (1, Exceptional(i))));
                parts.extend((1..=4).map(|j| (1, Residual(j))));
                combo(&parts)
            }
            A0 => combo(&[
                (3, H),
                (-1, Exceptional(1)),
                (-1, Exceptional(2)),
                (-1, Exceptional(3)),
                (-1, Exceptional(4)),
            ]),
            HPrime => combo(&[(1, A), (-1, Edge(1, 4)), (-1, Edge(2, 3))]),
            HMirror => {
                let mut parts: Vec<(i64, ClassName)> = vec![(3, H)];
                parts.extend((1..=4).map(|i| (-2, Exceptional(i))));
                parts.extend(EDGE_PAIRS.iter().map(|&(i, j)| (-1, Edge(i, j))));
                combo(&parts)
            }
            C => combo(&[(1, A), (1, Edge(1, 2))]),
            _ => unreachable!("basis classes handled above"),
        }
    }

    /// Intersection number of two named classes.
    pub fn pair(&self, x: ClassName, y: ClassName) -> Int {
        self.lattice
            .intersect(&self.class(x), &self.class(y))
            .expect("registry vectors have the lattice rank")
    }

    /// Self-intersection of a named class.
    pub fn square(&self, x: ClassName) -> Int {
        self.pair(x, x)
    }

    /// Full pairwise intersection matrix over the given names.
    pub fn intersection_table(&self, names: &[ClassName]) -> Vec<Vec<Int>> {
        names
            .iter()
            .map(|&x| names.iter().map(|&y| self.pair(x, y)).collect())
            .collect()
    }

    /// The linear identities the registry is built on, re-checked from
    /// scratch.  Every returned residual must be the zero vector.
    pub fn verify_class_identities(&self) -> Vec<IdentityCheck> {
        use ClassName::*;
        let sub = |a: &LatticeVector, b: &LatticeVector| -> LatticeVector {
            a.iter().zip(b).map(|(x, y)| x - y).collect()
        };
        let sum = |names: &[(i64, ClassName)]| -> LatticeVector {
            let mut acc = vec![Int::zero(); 11];
            for &(c, n) in names {
                for (a, b) in acc.iter_mut().zip(self.class(n)) {
                    *a += Int::from(c) * b;
                }
            }
            acc
        };
        let mut checks = Vec::new();

        // The three alternative expressions for H against the stored one.
        let h = self.class(H);
        for (name, expr) in [
            (
                "h-expression-faces-1",
                [Edge(2, 4), Edge(2, 3), Edge(3, 4), Exceptional(2), Exceptional(3), Exceptional(4), Residual(1)],
            ),
            (
                "h-expression-faces-2",
                [Edge(1, 3), Edge(1, 4), Edge(3, 4), Exceptional(1), Exceptional(3), Exceptional(4), Residual(2)],
            ),
            (
                "h-expression-faces-4",
                [Edge(1, 2), Edge(1, 3), Edge(2, 3), Exceptional(1), Exceptional(2), Exceptional(3), Residual(4)],
            ),
        ] {
            let parts: Vec<(i64, ClassName)> = expr.iter().map(|&n| (1, n)).collect();
            checks.push(IdentityCheck {
                name,
                residual: sub(&sum(&parts), &h),
            });
        }

        // R_j also arises as H minus the classes in the face opposite j.
        for (name, j, others) in [
            ("residual-2-via-h", 2u8, [Exceptional(1), Exceptional(3), Exceptional(4), Edge(1, 3), Edge(1, 4), Edge(3, 4)]),
            ("residual-3-via-h", 3u8, [Exceptional(1), Exceptional(2), Exceptional(4), Edge(1, 2), Edge(1, 4), Edge(2, 4)]),
            ("residual-4-via-h", 4u8, [Exceptional(1), Exceptional(2), Exceptional(3), Edge(1, 2), Edge(1, 3), Edge(2, 3)]),
        ] {
            let mut parts: Vec<(i64, ClassName)> = vec![(1, H)];
            parts.extend(others.iter().map(|&n| (-1, n)));
            checks.push(IdentityCheck {
                name,
                residual: sub(&sum(&parts), &self.class(Residual(j))),
            });
        }

        // A_0 = 3H - ΣE_i rewritten as a nonnegative combination.
        let expansion = sum(&[
            (2, Exceptional(4)),
            (1, Exceptional(1)),
            (1, Exceptional(2)),
            (1, Exceptional(3)),
            (1, Residual(1)),
            (1, Residual(2)),
            (1, Residual(3)),
            (2, Edge(1, 4)),
            (2, Edge(2, 4)),
            (2, Edge(3, 4)),
            (1, Edge(1, 2)),
            (1, Edge(2, 3)),
            (1, Edge(1, 3)),
        ]);
        checks.push(IdentityCheck {
            name: "a0-effective-expansion",
            residual: sub(&expansion, &self.class(A0)),
        });

        // The eight classes E_1..E_4, R_1..R_4 sum to twice a lattice
        // vector (an "even eight"), with an explicitly known half.
        let mut eight: Vec<(i64, ClassName)> = Vec::new();
        eight.extend((1..=4).map(|i| (1, Exceptional(i))));
        eight.extend((1..=4).map(|j| (1, Residual(j))));
        let half = sum(&[
            (1, Edge(2, 3)),
            (1, Edge(2, 4)),
            (1, Edge(3, 4)),
            (-1, Edge(1, 2)),
            (-1, Edge(1, 3)),
            (-1, Edge(1, 4)),
            (-1, Exceptional(1)),
            (1, Exceptional(2)),
            (1, Exceptional(3)),
            (1, Exceptional(4)),
            (2, Residual(1)),
        ]);
        let twice_half: LatticeVector = half.iter().map(|c| c * Int::from(2)).collect();
        checks.push(IdentityCheck {
            name: "even-eight-half",
            residual: sub(&sum(&eight), &twice_half),
        });

        // The pencil of planes through the edge L_12 fibres the surface in
        // cubics with fiber class H - L_12 - E_1 - E_2; over each of the
        // two faces containing the edge the fiber decomposes into a
        // four-cycle of lines and exceptional curves.
        let edge_fiber = sum(&[
            (1, H),
            (-1, Edge(1, 2)),
            (-1, Exceptional(1)),
            (-1, Exceptional(2)),
        ]);
        for (name, parts) in [
            (
                "edge-pencil-fiber-over-face-4",
                [Edge(1, 3), Edge(2, 3), Exceptional(3), Residual(4)],
            ),
            (
                "edge-pencil-fiber-over-face-3",
                [Edge(1, 4), Edge(2, 4), Exceptional(4), Residual(3)],
            ),
        ] {
            let parts: Vec<(i64, ClassName)> = parts.iter().map(|&n| (1, n)).collect();
            checks.push(IdentityCheck {
                name,
                residual: sub(&sum(&parts), &edge_fiber),
            });
        }

        // Likewise the planes through the residual line R_3 have fiber
        // class H - R_3, and over the face X_2 = 0 the fiber is the
        // six-cycle of the remaining face classes.
        let residual_fiber = sum(&[(1, H), (-1, Residual(3))]);
        let hexagon = sum(&[
            (1, Edge(1, 2)),
            (1, Edge(1, 4)),
            (1, Edge(2, 4)),
            (1, Exceptional(1)),
            (1, Exceptional(2)),
            (1, Exceptional(4)),
        ]);
        checks.push(IdentityCheck {
            name: "residual-pencil-fiber-over-face-3",
            residual: sub(&hexagon, &residual_fiber),
        });

        checks
    }
}

/// The Picard lattice of the degree-6 del Pezzo surface — the plane blown
/// up in the three vertices of a triangle — in the basis `h, e_1, e_2, e_3`,
/// carrying its canonical class `-3h + e_1 + e_2 + e_3`.
pub fn del_pezzo_sextic() -> GramLattice {
    let gram = ZMatrix::from_i64(&[
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
    ]);
    let k = vec![Int::from(-3), Int::from(1), Int::from(1), Int::from(1)];
    GramLattice::with_canonical(gram, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_is_even_negative_definite_off_a_hyperbolic_direction() {
        let reg = ClassRegistry::new();
        assert!(reg.lattice().is_even());
        assert_eq!(reg.lattice().signature(), (1, 10, 0));
        assert_eq!(reg.lattice().determinant(), Int::from(128));
    }

    #[test]
    fn named_squares() {
        let reg = ClassRegistry::new();
        assert_eq!(reg.square(ClassName::A), Int::from(20));
        assert_eq!(reg.square(ClassName::A0), Int::from(28));
        assert_eq!(reg.square(ClassName::H), Int::from(4));
        assert_eq!(reg.square(ClassName::HPrime), Int::from(8));
        assert_eq!(reg.square(ClassName::HMirror), Int::from(4));
        assert_eq!(reg.square(ClassName::Exceptional(3)), Int::from(-2));
    }

    #[test]
    fn all_identities_hold() {
        let reg = ClassRegistry::new();
        for check in reg.verify_class_identities() {
            assert!(check.ok(), "identity {} has residual {:?}", check.name, check.residual);
        }
    }

    #[test]
    fn pencil_fiber_classes_square_to_zero() {
        let reg = ClassRegistry::new();
        let combine = |parts: &[(i64, ClassName)]| -> LatticeVector {
            let mut acc = vec![Int::zero(); 11];
            for &(c, n) in parts {
                for (a, b) in acc.iter_mut().zip(reg.class(n)) {
                    *a += Int::from(c) * b;
                }
            }
            acc
        };
        use ClassName::*;
        let edge_fiber = combine(&[
            (1, H),
            (-1, Edge(1, 2)),
            (-1, Exceptional(1)),
            (-1, Exceptional(2)),
        ]);
        let residual_fiber = combine(&[(1, H), (-1, Residual(3))]);
        let sq = |v: &LatticeVector| reg.lattice().square(v).unwrap();
        assert_eq!(sq(&edge_fiber), Int::zero());
        assert_eq!(sq(&residual_fiber), Int::zero());

        // The residual-pencil fiber over the plane through the node P_3
        // has two components: E_3 and a nodal cubic c = H - R_3 - E_3,
        // meeting each other twice.
        let cubic = combine(&[(1, H), (-1, Residual(3)), (-1, Exceptional(3))]);
        assert_eq!(sq(&cubic), Int::from(-2));
        let e3 = reg.class(Exceptional(3));
        assert_eq!(
            reg.lattice().intersect(&cubic, &e3).unwrap(),
            Int::from(2)
        );

        // The edge-pencil fiber over the face X_3 = 0 is a four-cycle:
        // consecutive components meet once, opposite ones not at all.
        let cycle = [Edge(1, 3), Exceptional(3), Edge(2, 3), Residual(4)];
        for k in 0..4 {
            assert_eq!(reg.pair(cycle[k], cycle[(k + 1) % 4]), Int::from(1));
            assert_eq!(reg.pair(cycle[k], cycle[(k + 2) % 4]), Int::zero());
        }
    }

    #[test]
    fn table_is_symmetric() {
        let reg = ClassRegistry::new();
        let names = ClassName::all();
        let t = reg.intersection_table(&names);
        for i in 0..names.len() {
            for j in 0..names.len() {
                assert_eq!(t[i][j], t[j][i]);
            }
        }
    }

    #[test]
    fn names_round_trip_through_text() {
        for name in ClassName::all() {
            assert_eq!(ClassName::parse(&name.to_string()).unwrap(), name);
        }
        assert!(ClassName::parse("L21").is_err());
        assert!(ClassName::parse("E5").is_err());
        assert!(ClassName::parse("Q").is_err());
    }

    #[test]
    fn del_pezzo_canonical_numbers() {
        let dp = del_pezzo_sextic();
        let k = dp.canonical_class().unwrap().clone();
        assert_eq!(dp.square(&k).unwrap(), Int::from(6));
        // The strict transform class 6h - 2e_1 - 2e_2 - 2e_3 has genus 7.
        let c = vec![Int::from(6), Int::from(-2), Int::from(-2), Int::from(-2)];
        assert_eq!(dp.adjunction_genus(&c).unwrap(), Int::from(7));
        // A line in the plane has genus 0.
        let h = vec![Int::from(1), Int::from(0), Int::from(0), Int::from(0)];
        assert_eq!(dp.adjunction_genus(&h).unwrap(), Int::from(0));
    }
}
