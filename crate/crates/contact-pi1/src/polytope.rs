//! Rational convex polytopes in halfspace form <x, u_i> >= lambda_i, with
//! exact vertex/edge enumeration, Delzant and integrality checks, lattice
//! Morse data for a generic linear functional, orbifold vertex orders and the
//! cone-over construction.
//!
//! Offsets are exact rationals; normals are primitive integer vectors. This
//! is the only module where rational arithmetic appears: everything that
//! reaches the lattice layer is integral.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use itertools::Itertools;

use crate::cone::{v_description, MomentCone};
use crate::error::{Error, Result};
use crate::lattice::{gcd_all, primitive_part, IntMatrix, IntVector};

/// A vertex: exact rational coordinates plus the indices of every halfspace
/// that is tight there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: Vec<BigRational>,
    pub active: BTreeSet<usize>,
}

impl Vertex {
    pub fn is_integral(&self) -> bool {
        self.point.iter().all(|c| c.is_integer())
    }

    fn render(&self) -> String {
        let coords: Vec<String> = self.point.iter().map(|c| c.to_string()).collect();
        format!("({})", coords.join(", "))
    }
}

/// An edge of a simple polytope between vertices `tail` and `head` (indices
/// into the vertex list, tail < head). `direction` is the primitive integer
/// vector from tail to head; `lattice_length` is set when both endpoints are
/// lattice points, in which case head - tail = lattice_length * direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub direction: IntVector,
    pub lattice_length: Option<BigInt>,
}

/// Morse data of a generic linear functional on a simple polytope: the even
/// index of every vertex and, for each index-2 vertex, its unique descending
/// edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseData {
    pub functional: IntVector,
    /// Parallel to `vertices()`: index(V) = 2 * #{neighbors below V}.
    pub indices: Vec<usize>,
    /// (vertex index, its unique down-edge) for every index-2 vertex.
    pub index2_down_edges: Vec<(usize, Edge)>,
}

/// Orbifold structure-group orders of the vertices of a simple (not
/// necessarily Delzant) polytope, and their least common multiple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldData {
    /// Parallel to `vertices()`: |det| of the active normals at each vertex.
    pub orders: Vec<BigInt>,
    pub m_lcm: BigInt,
}

/// A Delzant violation at one vertex: either too many facets meet there, or
/// the active normal determinant is not +-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantViolation {
    pub vertex: usize,
    pub active_count: usize,
    pub determinant: Option<BigInt>,
}

/// Bounded nonempty rational polytope with every halfspace supporting a
/// facet. Vertices (and edges, when the polytope is simple) are enumerated at
/// construction and immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    halfspaces: Vec<(IntVector, BigRational)>,
    vertices: Vec<Vertex>,
    edges: Option<Vec<Edge>>,
}

fn rational(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Solves the square rational system rows * x = rhs by Gaussian elimination;
/// None when the rows are singular.
fn solve_square(rows: &[&IntVector], rhs: &[&BigRational]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<BigRational> = row
                .entries()
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect();
            r.push((*b).clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot);
        let p = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &p;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let delta = &f * &m[k][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[row.len() - 1].clone()).collect())
}

/// Clears denominators of a rational vector: returns the primitive integer
/// direction along it.
fn primitive_direction(diff: &[BigRational]) -> IntVector {
    let lcm = diff
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = diff.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    primitive_part(&IntVector::new(ints))
        .expect("edge endpoints are distinct")
        .0
}

impl RationalPolytope {
    /// Validates halfspaces and enumerates vertices (and edges when simple).
    /// Normals are primitivized with the offset rescaled by the same content
    /// (recorded as a warning); duplicates, unbounded or empty systems and
    /// halfspaces that do not support a facet are rejected.
    pub fn from_halfspaces(
        dim: usize,
        raw: Vec<(IntVector, BigRational)>,
    ) -> Result<(Self, Vec<String>)> {
        if dim == 0 {
            return Err(Error::AmbientTooSmall { dim: 0 });
        }
        let mut warnings = Vec::new();
        let mut halfspaces: Vec<(IntVector, BigRational)> = Vec::with_capacity(raw.len());
        for (index, (normal, offset)) in raw.into_iter().enumerate() {
            if normal.dim() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    got: normal.dim(),
                    expected: dim,
                });
            }
            if normal.is_zero() {
                return Err(Error::ZeroNormal { index });
            }
            let (prim, content) = primitive_part(&normal)?;
            let scaled = &offset / BigRational::from(content.clone());
            if !content.is_one() {
                warnings.push(format!(
                    "halfspace {index} had content {content}; rescaled to primitive normal with offset {scaled}"
                ));
            }
            halfspaces.push((prim, scaled));
        }
        for (i, j) in (0..halfspaces.len()).tuple_combinations() {
            if halfspaces[i] == halfspaces[j] {
                return Err(Error::DuplicateHalfspace { first: i, second: j });
            }
        }

        // Bounded iff the recession cone {x : <x,u_i> >= 0} is the origin.
        let normals: Vec<IntVector> = halfspaces.iter().map(|(u, _)| u.clone()).collect();
        let recession = v_description(&normals, dim);
        if !recession.lineality_basis.is_empty() || !recession.rays.is_empty() {
            return Err(Error::Unbounded);
        }

        // Vertex enumeration over dim-subsets of tight halfspaces.
        let mut vertex_map: std::collections::BTreeMap<Vec<BigRational>, BTreeSet<usize>> =
            std::collections::BTreeMap::new();
        for subset in (0..halfspaces.len()).combinations(dim) {
            let rows: Vec<&IntVector> = subset.iter().map(|&i| &halfspaces[i].0).collect();
            let rhs: Vec<&BigRational> = subset.iter().map(|&i| &halfspaces[i].1).collect();
            let Some(point) = solve_square(&rows, &rhs) else {
                continue;
            };
            let feasible = halfspaces.iter().all(|(u, lambda)| {
                let value: BigRational = u
                    .entries()
                    .iter()
                    .zip(&point)
                    .map(|(a, x)| BigRational::from(a.clone()) * x)
                    .sum();
                value >= *lambda
            });
            if !feasible {
                continue;
            }
            let active: BTreeSet<usize> = halfspaces
                .iter()
                .enumerate()
                .filter(|(_, (u, lambda))| {
                    let value: BigRational = u
                        .entries()
                        .iter()
                        .zip(&point)
                        .map(|(a, x)| BigRational::from(a.clone()) * x)
                        .sum();
                    value == *lambda
                })
                .map(|(i, _)| i)
                .collect();
            vertex_map.entry(point).or_insert(active);
        }
        if vertex_map.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let vertices: Vec<Vertex> = vertex_map
            .into_iter()
            .map(|(point, active)| Vertex { point, active })
            .collect();

        // Every halfspace must be tight on a (dim-1)-dimensional face.
        for i in 0..halfspaces.len() {
            let on_facet: Vec<&Vertex> =
                vertices.iter().filter(|v| v.active.contains(&i)).collect();
            let affine_rank = match on_facet.split_first() {
                None => return Err(Error::RedundantHalfspace { index: i }),
                Some((first, rest)) => {
                    let diffs: Vec<IntVector> = rest
                        .iter()
                        .map(|v| {
                            let diff: Vec<BigRational> = v
                                .point
                                .iter()
                                .zip(&first.point)
                                .map(|(a, b)| a - b)
                                .collect();
                            primitive_direction(&diff)
                        })
                        .collect();
                    IntMatrix::from_rows_with_cols(&diffs, dim).rank()
                }
            };
            if affine_rank != dim - 1 {
                return Err(Error::RedundantHalfspace { index: i });
            }
        }

        let simple = vertices.iter().all(|v| v.active.len() == dim);
        let edges = simple.then(|| {
            let mut edges = Vec::new();
            for (i, j) in (0..vertices.len()).tuple_combinations() {
                let shared = vertices[i].active.intersection(&vertices[j].active).count();
                if shared != dim - 1 {
                    continue;
                }
                let diff: Vec<BigRational> = vertices[j]
                    .point
                    .iter()
                    .zip(&vertices[i].point)
                    .map(|(a, b)| a - b)
                    .collect();
                let direction = primitive_direction(&diff);
                let lattice_length = (vertices[i].is_integral() && vertices[j].is_integral())
                    .then(|| {
                        let ints: Vec<BigInt> =
                            diff.iter().map(|q| q.numer().clone()).collect();
                        gcd_all(&ints)
                    });
                edges.push(Edge {
                    tail: i,
                    head: j,
                    direction,
                    lattice_length,
                });
            }
            edges
        });

        Ok((
            RationalPolytope {
                dim,
                halfspaces,
                vertices,
                edges,
            },
            warnings,
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[(IntVector, BigRational)] {
        &self.halfspaces
    }

    /// Vertices in lexicographic coordinate order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_simple(&self) -> bool {
        self.edges.is_some()
    }

    /// Edges of a simple polytope; vertices sharing dim - 1 tight halfspaces.
    pub fn edge_graph(&self) -> Result<&[Edge]> {
        match &self.edges {
            Some(edges) => Ok(edges),
            None => {
                let offender = self
                    .vertices
                    .iter()
                    .find(|v| v.active.len() != self.dim)
                    .expect("non-simple polytope has an offending vertex");
                Err(Error::NotSimple {
                    vertex: offender.render(),
                })
            }
        }
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(Vertex::is_integral)
    }

    /// Delzant test: simple, and the active normals at each vertex form a
    /// lattice basis (determinant +-1). Returns all violations.
    pub fn is_delzant(&self) -> (bool, Vec<DelzantViolation>) {
        let mut violations = Vec::new();
        for (idx, v) in self.vertices.iter().enumerate() {
            if v.active.len() != self.dim {
                violations.push(DelzantViolation {
                    vertex: idx,
                    active_count: v.active.len(),
                    determinant: None,
                });
                continue;
            }
            let rows: Vec<IntVector> = v
                .active
                .iter()
                .map(|&i| self.halfspaces[i].0.clone())
                .collect();
            let det = IntMatrix::from_rows_with_cols(&rows, self.dim)
                .det()
                .expect("active normal matrix is square");
            if !det.abs().is_one() {
                violations.push(DelzantViolation {
                    vertex: idx,
                    active_count: v.active.len(),
                    determinant: Some(det.abs()),
                });
            }
        }
        (violations.is_empty(), violations)
    }

    /// Deterministic generic functional: the first moment-curve vector
    /// X = (1, t, t^2, ...) with t = 1, 2, 3, ... that separates all vertex
    /// values. Each vertex pair excludes finitely many t, so this terminates.
    pub fn choose_generic_functional(&self) -> IntVector {
        self.generic_functional_on_curve(false)
    }

    /// Same search along the reversed moment curve (t^{n-1}, ..., t, 1).
    /// Exposed so independence of the Morse answer from the choice of generic
    /// functional can be exercised directly.
    pub fn choose_generic_functional_reversed(&self) -> IntVector {
        self.generic_functional_on_curve(true)
    }

    fn generic_functional_on_curve(&self, reversed: bool) -> IntVector {
        let n = self.dim;
        let mut t = BigInt::one();
        loop {
            let mut powers: Vec<BigInt> = Vec::with_capacity(n);
            let mut acc = BigInt::one();
            for _ in 0..n {
                powers.push(acc.clone());
                acc *= &t;
            }
            if reversed {
                powers.reverse();
            }
            let x = IntVector::new(powers);
            if self.functional_values(&x).is_ok() {
                return x;
            }
            t += 1;
        }
    }

    /// Exact vertex values of a linear functional; errors if two agree.
    fn functional_values(&self, x: &IntVector) -> Result<Vec<BigRational>> {
        let values: Vec<BigRational> = self
            .vertices
            .iter()
            .map(|v| {
                v.point
                    .iter()
                    .zip(x.entries())
                    .map(|(c, a)| c * BigRational::from(a.clone()))
                    .sum()
            })
            .collect();
        for (i, j) in (0..values.len()).tuple_combinations() {
            if values[i] == values[j] {
                return Err(Error::NotGeneric {
                    first: self.vertices[i].render(),
                    second: self.vertices[j].render(),
                });
            }
        }
        Ok(values)
    }

    /// Morse indices of a generic functional on a simple polytope:
    /// index(V) = 2 * #{edge neighbors W with <W,X> < <V,X>}. The minimum is
    /// the unique index-0 vertex and the maximum the unique index-2n vertex;
    /// each index-2 vertex records its unique descending edge.
    pub fn morse_indices(&self, x: &IntVector) -> Result<MorseData> {
        let edges = self.edge_graph()?;
        let values = self.functional_values(x)?;

        let mut down_edges: Vec<Vec<&Edge>> = vec![Vec::new(); self.vertices.len()];
        for e in edges {
            if values[e.tail] < values[e.head] {
                down_edges[e.head].push(e);
            } else {
                down_edges[e.tail].push(e);
            }
        }
        let indices: Vec<usize> = down_edges.iter().map(|d| 2 * d.len()).collect();

        debug_assert_eq!(indices.iter().filter(|&&i| i == 0).count(), 1);
        debug_assert_eq!(
            indices.iter().filter(|&&i| i == 2 * self.dim).count(),
            1,
            "unique maximum"
        );

        let index2_down_edges: Vec<(usize, Edge)> = indices
            .iter()
            .enumerate()
            .filter(|(_, &idx)| idx == 2)
            .map(|(v, _)| (v, down_edges[v][0].clone()))
            .collect();

        Ok(MorseData {
            functional: x.clone(),
            indices,
            index2_down_edges,
        })
    }

    /// Orders |det(active normals)| of the vertex stabilizer structure groups
    /// of a simple polytope, with their lcm.
    pub fn orbifold_vertex_orders(&self) -> Result<OrbifoldData> {
        self.edge_graph()?; // simplicity gate, same error payload
        let orders: Vec<BigInt> = self
            .vertices
            .iter()
            .map(|v| {
                let rows: Vec<IntVector> = v
                    .active
                    .iter()
                    .map(|&i| self.halfspaces[i].0.clone())
                    .collect();
                IntMatrix::from_rows_with_cols(&rows, self.dim)
                    .det()
                    .expect("simple vertex has a square active matrix")
                    .abs()
            })
            .collect();
        let m_lcm = orders.iter().fold(BigInt::one(), |acc, o| acc.lcm(o));
        Ok(OrbifoldData { orders, m_lcm })
    }

    /// The cone over the polytope placed at height one: halfspace
    /// (u_i, lambda_i) becomes the cone normal (u_i, -lambda_i) in one
    /// dimension higher. Offsets must be integers. Slicing the result at
    /// height one returns the original polytope.
    pub fn cone_over_polytope(&self) -> Result<MomentCone> {
        let mut normals = Vec::with_capacity(self.halfspaces.len());
        for (index, (u, lambda)) in self.halfspaces.iter().enumerate() {
            if !lambda.is_integer() {
                return Err(Error::NonIntegerOffset { index });
            }
            let mut entries = u.entries().to_vec();
            entries.push(-lambda.numer().clone());
            normals.push(IntVector::new(entries));
        }
        let (cone, warnings) = MomentCone::build(normals, self.dim + 1)?;
        debug_assert!(warnings.is_empty(), "cone-over normals are primitive");
        Ok(cone)
    }

    /// Scales the polytope by a positive integer factor (offsets scale,
    /// normals do not).
    pub fn dilate(&self, factor: &BigInt) -> Result<(RationalPolytope, Vec<String>)> {
        assert!(factor.is_positive(), "dilation factor must be positive");
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|(u, l)| (u.clone(), l * BigRational::from(factor.clone())))
            .collect();
        RationalPolytope::from_halfspaces(self.dim, halfspaces)
    }

    /// Cartesian product: halfspaces of each factor, zero-padded into the
    /// joint coordinates.
    pub fn product(&self, other: &RationalPolytope) -> Result<(RationalPolytope, Vec<String>)> {
        let dim = self.dim + other.dim;
        let mut halfspaces = Vec::with_capacity(self.halfspaces.len() + other.halfspaces.len());
        for (u, l) in &self.halfspaces {
            let mut entries = u.entries().to_vec();
            entries.extend(std::iter::repeat(BigInt::zero()).take(other.dim));
            halfspaces.push((IntVector::new(entries), l.clone()));
        }
        for (u, l) in &other.halfspaces {
            let mut entries = vec![BigInt::zero(); self.dim];
            entries.extend(u.entries().to_vec());
            halfspaces.push((IntVector::new(entries), l.clone()));
        }
        RationalPolytope::from_halfspaces(dim, halfspaces)
    }

    /// gcd of index-2 down-edge lattice lengths versus gcd of the absolute
    /// Euler coefficients of the cone over the polytope; the two agree for
    /// integral Delzant polytopes and this returns both sides plus the
    /// verdict.
    pub fn euler_gcd_consistency(&self) -> Result<(BigInt, BigInt, bool)> {
        let morse = self.morse_indices(&self.choose_generic_functional())?;
        let lengths: Vec<BigInt> = morse
            .index2_down_edges
            .iter()
            .map(|(_, e)| {
                e.lattice_length
                    .clone()
                    .ok_or_else(|| Error::NotIntegral {
                        vertex: self.vertices[e.tail].render(),
                    })
            })
            .collect::<Result<_>>()?;
        let gcd_lengths = gcd_all(&lengths);
        let cone = self.cone_over_polytope()?;
        let euler = crate::pi1::euler_coefficients(&cone)?;
        let gcd_dets = gcd_all(euler.coefficients.iter());
        let equal = gcd_lengths == gcd_dets;
        Ok((gcd_lengths, gcd_dets, equal))
    }
}

/// pi_1 of the Reeb-type manifold over an integral Delzant polytope: the
/// cyclic group of order gcd of the lattice lengths of the descending edges
/// at index-2 vertices of a generic functional.
pub fn pi1_edge_lengths(p: &RationalPolytope) -> Result<crate::lattice::AbelianGroup> {
    if !p.is_integral() {
        let offender = p
            .vertices()
            .iter()
            .find(|v| !v.is_integral())
            .expect("non-integral polytope has a witness");
        return Err(Error::NotIntegral {
            vertex: offender.render(),
        });
    }
    let (delzant, _) = p.is_delzant();
    if !delzant {
        return Err(Error::NotDelzant);
    }
    let morse = p.morse_indices(&p.choose_generic_functional())?;
    pi1_from_morse(&morse)
}

/// Same computation from precomputed Morse data (used to check independence
/// from the functional choice).
pub fn pi1_from_morse(morse: &MorseData) -> Result<crate::lattice::AbelianGroup> {
    let lengths: Vec<BigInt> = morse
        .index2_down_edges
        .iter()
        .map(|(_, e)| {
            e.lattice_length
                .clone()
                .expect("integral Delzant polytope has lattice lengths")
        })
        .collect();
    assert!(
        !lengths.is_empty(),
        "a bounded full-dimensional polytope has at least dim+1 facets, hence an index-2 vertex"
    );
    Ok(crate::lattice::AbelianGroup::cyclic(&gcd_all(&lengths)))
}

/// Standard unit simplex conv{0, e_1, ..., e_n}.
pub fn unit_simplex(n: usize) -> RationalPolytope {
    let mut halfspaces: Vec<(IntVector, BigRational)> = (0..n)
        .map(|i| (IntVector::unit(n, i), rational(0)))
        .collect();
    halfspaces.push((
        IntVector::new(vec![BigInt::from(-1); n]),
        rational(-1),
    ));
    RationalPolytope::from_halfspaces(n, halfspaces)
        .expect("unit simplex is valid")
        .0
}

/// Segment [0, p] in dimension 1.
pub fn segment(p: &BigInt) -> RationalPolytope {
    assert!(p.is_positive());
    let halfspaces = vec![
        (IntVector::from_i64(&[1]), rational(0)),
        (
            IntVector::from_i64(&[-1]),
            BigRational::from(-p.clone()),
        ),
    ];
    RationalPolytope::from_halfspaces(1, halfspaces)
        .expect("segment is valid")
        .0
}

/// Delzant trapezoid {x >= 0, 0 <= y <= height, x + twist * y <= width},
/// the moment polytope of a Hirzebruch-type surface. Requires
/// width > twist * height so the top edge is nonempty.
pub fn hirzebruch_trapezoid(twist: i64, height: i64, width: i64) -> Result<(RationalPolytope, Vec<String>)> {
    let halfspaces = vec![
        (IntVector::from_i64(&[1, 0]), rational(0)),
        (IntVector::from_i64(&[0, 1]), rational(0)),
        (IntVector::from_i64(&[0, -1]), rational(-height)),
        (IntVector::from_i64(&[-1, -twist]), rational(-width)),
    ];
    RationalPolytope::from_halfspaces(2, halfspaces)
}

impl fmt::Debug for RationalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolytope(dim {}, ", self.dim)?;
        write!(f, "halfspaces ")?;
        f.debug_list()
            .entries(
                self.halfspaces
                    .iter()
                    .map(|(u, l)| format!("<x,{u}> >= {l}")),
            )
            .finish()?;
        write!(f, ", vertices ")?;
        f.debug_list()
            .entries(self.vertices.iter().map(Vertex::render))
            .finish()?;
        write!(f, ")")
    }
}
