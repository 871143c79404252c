//! Moment cones: rational polyhedral cones presented by primitive inward
//! facet normals, with validation (strict convexity, goodness), ray
//! enumeration, Reeb-direction reparametrization and slicing to a polytope.
//!
//! Conventions. A cone in R^{n+1} is C = {x : <x, v_i> >= 0 for all i} with
//! integral normals v_i. Normals live on the Lie-algebra side, cone points on
//! the dual side; a reparametrization A acts on normals as v -> A v and on
//! cone points as the inverse transpose, so all pairings are preserved.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{
    complete_to_unimodular, kernel_basis, primitive_part, smith_normal_form, IntMatrix, IntVector,
};
use crate::polytope::RationalPolytope;

/// A validated moment cone. Construction goes through [`MomentCone::build`],
/// which primitivizes, deduplicates and rejects normals that do not support a
/// facet, so every instance satisfies the H-representation invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct MomentCone {
    ambient_dim: usize,
    normals: Vec<IntVector>,
}

/// An extreme ray of a strictly convex cone: the primitive generator together
/// with the indices of every facet it lies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub generator: IntVector,
    pub facet_indices: BTreeSet<usize>,
}

/// One face on which the goodness test fails, with enough data to see why:
/// the facets through the face, its codimension, and the Smith invariants of
/// the facet-normal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessFailure {
    pub facet_indices: Vec<usize>,
    pub codim: usize,
    pub smith_invariants: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeValidation {
    pub strictly_convex: bool,
    pub lineality_dim: usize,
    pub good: bool,
    pub failures: Vec<GoodnessFailure>,
}

/// Diffeomorphism type read off from the moment cone, following the standard
/// classification of compact connected contact toric manifolds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldClass {
    /// Strictly convex good cone: M carries a torus-invariant Reeb vector.
    ReebType,
    /// Strictly convex but not good: not the moment cone of any manifold.
    InvalidMomentCone,
    /// Lineality m with 0 < m <= n+1 (except n = 2 whole space): T^m x S^k.
    TorusTimesSphere { torus_rank: usize, sphere_dim: usize },
    /// Whole-space cone in dimension 3: a principal T^3-bundle over S^2.
    PrincipalT3BundleOverS2,
}

impl fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldClass::ReebType => write!(f, "ReebType"),
            ManifoldClass::InvalidMomentCone => write!(f, "InvalidMomentCone"),
            ManifoldClass::TorusTimesSphere {
                torus_rank,
                sphere_dim,
            } => write!(f, "T^{torus_rank} x S^{sphere_dim}"),
            ManifoldClass::PrincipalT3BundleOverS2 => write!(f, "PrincipalT3BundleOverS2"),
        }
    }
}

/// V-side description of {x : <x, v_i> >= 0}: a lattice basis of the lineality
/// space plus one representative per extreme-ray class of the pointed part.
/// Representatives are primitive; when the lineality is nonzero they are only
/// canonical modulo it, which is all the callers need (spans and pairings).
pub(crate) struct VDescription {
    pub lineality_basis: Vec<IntVector>,
    pub rays: Vec<RayClass>,
}

#[derive(Clone, Debug)]
pub(crate) struct RayClass {
    pub representative: IntVector,
    pub active: BTreeSet<usize>,
}

/// Enumerates the V-description by scanning subsets of normals of size
/// rank - 1. Every 1-dimensional face of the pointed quotient has an active
/// set of that rank, so each class is hit at least once; deduplication is on
/// the full active set. Desk-scale inputs keep the subset count small.
pub(crate) fn v_description(normals: &[IntVector], ambient_dim: usize) -> VDescription {
    let a = IntMatrix::from_rows_with_cols(normals, ambient_dim);
    let rank = a.rank();
    let lineality_basis = kernel_basis(&a);

    if rank == 0 {
        return VDescription {
            lineality_basis,
            rays: Vec::new(),
        };
    }

    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut rays: Vec<RayClass> = Vec::new();

    for subset in (0..normals.len()).combinations(rank - 1) {
        let rows: Vec<IntVector> = subset.iter().map(|&i| normals[i].clone()).collect();
        let sub = IntMatrix::from_rows_with_cols(&rows, ambient_dim);
        if sub.rank() != rank - 1 {
            continue;
        }
        // Kernel of the subset strictly contains the lineality space; any
        // basis vector outside it spans the quotient line of candidates.
        let candidate = kernel_basis(&sub)
            .into_iter()
            .find(|w| !a.mul_vec(w).is_zero());
        let Some(w) = candidate else { continue };

        let pairings: Vec<BigInt> = normals.iter().map(|v| v.dot(&w)).collect();
        let any_pos = pairings.iter().any(|p| p.is_positive());
        let any_neg = pairings.iter().any(|p| p.is_negative());
        let rep = match (any_pos, any_neg) {
            (true, true) => continue,
            (false, true) => w.neg(),
            _ => w,
        };
        let active: BTreeSet<usize> = pairings
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_zero())
            .map(|(i, _)| i)
            .collect();
        if seen.insert(active.clone()) {
            rays.push(RayClass {
                representative: rep,
                active,
            });
        }
    }

    rays.sort_by(|a, b| a.representative.cmp(&b.representative));
    VDescription {
        lineality_basis,
        rays,
    }
}

impl MomentCone {
    /// Validates and normalizes raw inward normals. Normals are primitivized
    /// (with a warning when the content exceeds 1), duplicates and zero
    /// vectors are rejected, and every normal must support a facet: its zero
    /// set has to meet the cone in dimension ambient_dim - 1.
    pub fn build(
        raw_normals: Vec<IntVector>,
        ambient_dim: usize,
    ) -> Result<(Self, Vec<String>)> {
        if ambient_dim < 2 {
            return Err(Error::AmbientTooSmall { dim: ambient_dim });
        }
        let mut warnings = Vec::new();
        let mut normals: Vec<IntVector> = Vec::with_capacity(raw_normals.len());
        for (index, raw) in raw_normals.into_iter().enumerate() {
            if raw.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    index,
                    got: raw.dim(),
                    expected: ambient_dim,
                });
            }
            if raw.is_zero() {
                return Err(Error::ZeroNormal { index });
            }
            let (prim, content) = primitive_part(&raw)?;
            if !content.is_one() {
                warnings.push(format!(
                    "normal {index} had content {content}; stored primitive part {prim}"
                ));
            }
            normals.push(prim);
        }
        for (i, j) in (0..normals.len()).tuple_combinations() {
            if normals[i] == normals[j] {
                return Err(Error::DuplicateNormal { first: i, second: j });
            }
        }

        let vdesc = v_description(&normals, ambient_dim);
        for i in 0..normals.len() {
            // The facet supported by normal i spans the lineality space plus
            // all ray classes on which normal i vanishes.
            let mut span_rows = vdesc.lineality_basis.clone();
            span_rows.extend(
                vdesc
                    .rays
                    .iter()
                    .filter(|r| r.active.contains(&i))
                    .map(|r| r.representative.clone()),
            );
            let dim = IntMatrix::from_rows_with_cols(&span_rows, ambient_dim).rank();
            if dim != ambient_dim - 1 {
                return Err(Error::RedundantFacet { index: i });
            }
        }

        Ok((
            MomentCone {
                ambient_dim,
                normals,
            },
            warnings,
        ))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn normals(&self) -> &[IntVector] {
        &self.normals
    }

    pub fn facet_count(&self) -> usize {
        self.normals.len()
    }

    /// Normals as rows of a matrix (facet_count x ambient_dim).
    pub fn normal_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows_with_cols(&self.normals, self.ambient_dim)
    }

    /// Dimension of the largest linear subspace contained in the cone.
    pub fn lineality_dim(&self) -> usize {
        self.ambient_dim - self.normal_matrix().rank()
    }

    /// Extreme rays of a strictly convex cone, sorted by generator.
    pub fn rays(&self) -> Result<Vec<Ray>> {
        if self.lineality_dim() != 0 {
            return Err(Error::NotStrictlyConvex);
        }
        let vdesc = v_description(&self.normals, self.ambient_dim);
        Ok(vdesc
            .rays
            .into_iter()
            .map(|c| Ray {
                generator: c.representative,
                facet_indices: c.active,
            })
            .collect())
    }

    /// Goodness check: for every nonempty proper face, the facets through it
    /// must number exactly its codimension and their normals must span a
    /// saturated sublattice (all Smith invariants 1).
    pub fn validate(&self) -> ConeValidation {
        let lineality_dim = self.lineality_dim();
        if lineality_dim != 0 {
            return ConeValidation {
                strictly_convex: false,
                lineality_dim,
                good: false,
                failures: Vec::new(),
            };
        }
        let rays = self.rays().expect("strictly convex cone has rays");

        // Faces of a pointed cone that contain at least one ray are exactly
        // the joins of rays; their active sets are the closures of the rays'
        // facet sets under intersection.
        let base: Vec<BTreeSet<usize>> = rays.iter().map(|r| r.facet_indices.clone()).collect();
        let mut faces: BTreeSet<BTreeSet<usize>> = base.iter().cloned().collect();
        loop {
            let mut grew = false;
            let snapshot: Vec<BTreeSet<usize>> = faces.iter().cloned().collect();
            for f in &snapshot {
                for b in &base {
                    let meet: BTreeSet<usize> = f.intersection(b).cloned().collect();
                    if !meet.is_empty() && faces.insert(meet) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }

        let mut failures = Vec::new();
        for active in &faces {
            let rows: Vec<IntVector> = active.iter().map(|&i| self.normals[i].clone()).collect();
            let mat = IntMatrix::from_rows_with_cols(&rows, self.ambient_dim);
            // The affine hull of a face is the common zero set of its active
            // normals, so the codimension is their rank.
            let codim = mat.rank();
            let invariants = smith_normal_form(&mat).invariant_factors();
            let saturated = invariants.iter().all(|d| d.is_one());
            if active.len() != codim || !saturated {
                failures.push(GoodnessFailure {
                    facet_indices: active.iter().cloned().collect(),
                    codim,
                    smith_invariants: invariants,
                });
            }
        }
        failures.sort_by(|a, b| a.facet_indices.cmp(&b.facet_indices));

        ConeValidation {
            strictly_convex: true,
            lineality_dim: 0,
            good: failures.is_empty(),
            failures,
        }
    }

    /// Canonical Reeb-type contact form direction: the primitivized sum of
    /// the facet normals, which lies in the interior of the dual cone and
    /// therefore pairs strictly positively with every ray.
    pub fn reeb_vector(&self) -> Result<IntVector> {
        let rays = self.rays()?;
        let sum = self
            .normals
            .iter()
            .fold(IntVector::zeros(self.ambient_dim), |acc, v| acc.add(v));
        if sum.is_zero() {
            return Err(Error::InteriorVectorNotFound);
        }
        let (reeb, _) = primitive_part(&sum)?;
        for ray in &rays {
            if !ray.generator.dot(&reeb).is_positive() {
                return Err(Error::InteriorVectorNotFound);
            }
        }
        Ok(reeb)
    }

    /// Change of torus coordinates taking the direction `reeb` to the last
    /// axis: returns the transformed cone and the unimodular A with
    /// A * reeb = e_{n+1}. Normals map to A * v; cone points transform by the
    /// inverse transpose, so all pairings (and ray heights against the new
    /// last axis) match the original pairings against `reeb`.
    pub fn reparametrize_to_last_axis(
        &self,
        reeb: &IntVector,
    ) -> Result<(MomentCone, IntMatrix)> {
        if reeb.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                index: 0,
                got: reeb.dim(),
                expected: self.ambient_dim,
            });
        }
        let a = complete_to_unimodular(reeb)?;
        let normals: Vec<IntVector> = self.normals.iter().map(|v| a.mul_vec(v)).collect();
        let (cone, warnings) = MomentCone::build(normals, self.ambient_dim)?;
        debug_assert!(warnings.is_empty(), "unimodular image of primitive normals");
        Ok((cone, a))
    }

    /// Slice at height one of a strictly convex cone whose rays all have
    /// positive last coordinate: {y in R^n : (y, 1) in C}. Halfspace i is
    /// <y, u_i> >= lambda_i with u_i the primitivized truncation of v_i and
    /// lambda_i = -v_{i,n+1} rescaled by the same content.
    pub fn slice_at_height_one(&self) -> Result<(RationalPolytope, Vec<String>)> {
        let rays = self.rays()?;
        let n = self.ambient_dim - 1;
        for ray in &rays {
            if !ray.generator.entries()[n].is_positive() {
                return Err(Error::ReebNotPositiveOnCone {
                    ray: ray.generator.to_string(),
                });
            }
        }

        let mut warnings = Vec::new();
        let mut halfspaces: Vec<(IntVector, BigRational)> = Vec::with_capacity(self.normals.len());
        for (i, v) in self.normals.iter().enumerate() {
            let u = IntVector::new(v.entries()[..n].to_vec());
            // A normal with zero truncation would be +-e_{n+1}; its facet
            // would miss every positive-height ray, so `build` has already
            // ruled it out.
            assert!(!u.is_zero(), "facet normal cannot be vertical here");
            let (u_prim, content) = primitive_part(&u)?;
            let lambda = BigRational::new(-v.entries()[n].clone(), content.clone());
            if !content.is_one() {
                warnings.push(format!(
                    "slice normal {i} had content {content}; halfspace rescaled to a rational offset"
                ));
            }
            halfspaces.push((u_prim, lambda));
        }

        let (polytope, mut poly_warnings) = RationalPolytope::from_halfspaces(n, halfspaces)?;
        warnings.append(&mut poly_warnings);

        debug_assert_eq!(
            polytope.vertices().len(),
            rays.len(),
            "slice vertices must biject with cone rays"
        );
        Ok((polytope, warnings))
    }

    /// Diffeomorphism class from the shape of the cone. Classification is by
    /// the lineality dimension m: m = 0 is the Reeb (good cone) case, the
    /// whole space in ambient dimension 3 is a principal T^3-bundle over S^2,
    /// and everything else is a torus times a sphere, T^m x S^{2n+1-m}.
    pub fn classify(&self) -> ManifoldClass {
        let m = self.lineality_dim();
        let n = self.ambient_dim - 1;
        if m == 0 {
            if self.validate().good {
                ManifoldClass::ReebType
            } else {
                ManifoldClass::InvalidMomentCone
            }
        } else if m == self.ambient_dim && n == 2 {
            ManifoldClass::PrincipalT3BundleOverS2
        } else {
            ManifoldClass::TorusTimesSphere {
                torus_rank: m,
                sphere_dim: 2 * n + 1 - m,
            }
        }
    }
}

impl fmt::Debug for MomentCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MomentCone(dim {}, normals ", self.ambient_dim)?;
        f.debug_list().entries(self.normals.iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(normals: &[&[i64]], dim: usize) -> MomentCone {
        let raw: Vec<IntVector> = normals.iter().map(|r| IntVector::from_i64(r)).collect();
        MomentCone::build(raw, dim).unwrap().0
    }

    fn iv(entries: &[i64]) -> IntVector {
        IntVector::from_i64(entries)
    }

    #[test]
    fn build_primitivizes_with_warning() {
        let (c, warnings) = MomentCone::build(vec![iv(&[2, 0]), iv(&[0, 3])], 2).unwrap();
        assert_eq!(c.normals(), &[iv(&[1, 0]), iv(&[0, 1])]);
        assert_eq!(warnings.len(), 2);
    }

    #[test]
    fn build_rejects_bad_inputs() {
        assert_eq!(
            MomentCone::build(vec![iv(&[1])], 1).unwrap_err(),
            Error::AmbientTooSmall { dim: 1 }
        );
        assert_eq!(
            MomentCone::build(vec![iv(&[0, 0])], 2).unwrap_err(),
            Error::ZeroNormal { index: 0 }
        );
        assert_eq!(
            MomentCone::build(vec![iv(&[1, 0]), iv(&[2, 0])], 2).unwrap_err(),
            Error::DuplicateNormal { first: 0, second: 1 }
        );
        assert_eq!(
            MomentCone::build(vec![iv(&[1, 0, 0]), iv(&[0, 1])], 3).unwrap_err(),
            Error::DimensionMismatch {
                index: 1,
                got: 2,
                expected: 3
            }
        );
    }

    #[test]
    fn build_rejects_redundant_halfspace() {
        // (1,1) is implied by (1,0) and (0,1): its zero set meets the first
        // quadrant only at the origin.
        let err =
            MomentCone::build(vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])], 2).unwrap_err();
        assert_eq!(err, Error::RedundantFacet { index: 2 });
    }

    #[test]
    fn whole_space_cone_has_full_lineality() {
        let (c, _) = MomentCone::build(vec![], 3).unwrap();
        assert_eq!(c.lineality_dim(), 3);
        assert_eq!(c.rays().unwrap_err(), Error::NotStrictlyConvex);
        assert_eq!(c.classify(), ManifoldClass::PrincipalT3BundleOverS2);
    }

    #[test]
    fn halfspace_cone_lineality_and_class() {
        let (c, _) = MomentCone::build(vec![iv(&[0, 1])], 2).unwrap();
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(
            c.classify(),
            ManifoldClass::TorusTimesSphere {
                torus_rank: 1,
                sphere_dim: 2
            }
        );
    }

    #[test]
    fn lens_cone_rays() {
        let c = cone(&[&[1, 0], &[-1, 3]], 2);
        let rays = c.rays().unwrap();
        let gens: Vec<IntVector> = rays.iter().map(|r| r.generator.clone()).collect();
        assert_eq!(gens, vec![iv(&[0, 1]), iv(&[3, 1])]);
        assert_eq!(
            rays[0].facet_indices.iter().cloned().collect::<Vec<_>>(),
            vec![0]
        );
        assert_eq!(
            rays[1].facet_indices.iter().cloned().collect::<Vec<_>>(),
            vec![1]
        );
    }

    #[test]
    fn square_cone_rays() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]], 3);
        let rays = c.rays().unwrap();
        let gens: Vec<IntVector> = rays.iter().map(|r| r.generator.clone()).collect();
        assert_eq!(
            gens,
            vec![iv(&[0, 0, 1]), iv(&[0, 1, 1]), iv(&[1, 0, 1]), iv(&[1, 1, 1])]
        );
        for ray in &rays {
            assert_eq!(ray.facet_indices.len(), 2, "simple 3-dim cone");
        }
    }

    /// Oracle for ray enumeration: scan a box of small integer vectors, keep
    /// the feasible primitive ones, and filter to those whose active sets
    /// have rank n (extreme rays). Entirely independent of `v_description`.
    fn rays_by_box_scan(c: &MomentCone, radius: i64) -> Vec<IntVector> {
        let dim = c.ambient_dim();
        let mut found: BTreeSet<IntVector> = BTreeSet::new();
        let mut point = vec![-radius; dim];
        loop {
            let v = IntVector::from_i64(&point.iter().map(|&x| x).collect::<Vec<_>>());
            if !v.is_zero() {
                let pairings: Vec<BigInt> =
                    c.normals().iter().map(|n| n.dot(&v)).collect();
                if pairings.iter().all(|p| !p.is_negative()) {
                    let active_rows: Vec<IntVector> = pairings
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| p.is_zero())
                        .map(|(i, _)| c.normals()[i].clone())
                        .collect();
                    let rank = IntMatrix::from_rows_with_cols(&active_rows, dim).rank();
                    if rank == dim - 1 {
                        found.insert(primitive_part(&v).unwrap().0);
                    }
                }
            }
            let mut k = 0;
            loop {
                if k == dim {
                    return found.into_iter().collect();
                }
                point[k] += 1;
                if point[k] <= radius {
                    break;
                }
                point[k] = -radius;
                k += 1;
            }
        }
    }

    #[test]
    fn ray_enumeration_matches_box_scan_oracle() {
        for (normals, dim, radius) in [
            (vec![iv(&[1, 0]), iv(&[-1, 3])], 2, 4i64),
            (vec![iv(&[1, 0]), iv(&[1, 2])], 2, 3),
            (
                vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[-1, 0, 1]), iv(&[0, -1, 1])],
                3,
                2,
            ),
            (
                vec![iv(&[1, 0, 0]), iv(&[1, 2, 0]), iv(&[-1, -1, 1])],
                3,
                3,
            ),
        ] {
            let c = MomentCone::build(normals, dim).unwrap().0;
            let got: Vec<IntVector> = c
                .rays()
                .unwrap()
                .into_iter()
                .map(|r| r.generator)
                .collect();
            let expected = rays_by_box_scan(&c, radius);
            assert_eq!(got, expected, "ray mismatch for {c:?}");
        }
    }

    #[test]
    fn orthant_is_good() {
        for dim in 2..=5 {
            let normals: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
            let c = MomentCone::build(normals, dim).unwrap().0;
            let v = c.validate();
            assert!(v.strictly_convex && v.good, "orthant dim {dim}");
            assert_eq!(c.classify(), ManifoldClass::ReebType);
        }
    }

    #[test]
    fn skew_cone_is_good() {
        let v = cone(&[&[1, 0], &[1, 2]], 2).validate();
        assert!(v.good);
    }

    #[test]
    fn non_good_cone_diagnostics() {
        let c = cone(&[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]], 3);
        let v = c.validate();
        assert!(v.strictly_convex);
        assert!(!v.good);
        assert_eq!(v.failures.len(), 1);
        let failure = &v.failures[0];
        assert_eq!(failure.facet_indices, vec![0, 1]);
        assert_eq!(failure.codim, 2);
        assert_eq!(
            failure.smith_invariants,
            vec![BigInt::from(1), BigInt::from(2)]
        );
        assert_eq!(c.classify(), ManifoldClass::InvalidMomentCone);
    }

    #[test]
    fn reeb_vector_of_lens_cone() {
        let c = cone(&[&[1, 0], &[-1, 3]], 2);
        assert_eq!(c.reeb_vector().unwrap(), iv(&[0, 1]));
    }

    #[test]
    fn reeb_vector_pairs_positively() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]], 3);
        let reeb = c.reeb_vector().unwrap();
        for ray in c.rays().unwrap() {
            assert!(ray.generator.dot(&reeb).is_positive());
        }
    }

    #[test]
    fn reparametrization_preserves_pairings_and_heights() {
        let c = cone(&[&[1, 0], &[-1, 3]], 2);
        let reeb = c.reeb_vector().unwrap();
        let (c2, a) = c.reparametrize_to_last_axis(&reeb).unwrap();
        assert_eq!(a.mul_vec(&reeb), IntVector::unit(2, 1));

        let inv_t = a.inverse_unimodular().unwrap().transpose();
        let rays = c.rays().unwrap();
        let rays2 = c2.rays().unwrap();
        assert_eq!(rays.len(), rays2.len());
        // Pairings of every original ray against every original normal agree
        // with the transformed pairings, and new heights equal Reeb pairings.
        for ray in &rays {
            let image = inv_t.mul_vec(&ray.generator);
            for (v, v2) in c.normals().iter().zip(c2.normals()) {
                assert_eq!(ray.generator.dot(v), image.dot(v2));
            }
            assert_eq!(
                image.entries()[1],
                ray.generator.dot(&reeb),
                "height = Reeb pairing"
            );
        }
    }

    #[test]
    fn slice_square_cone_is_unit_square() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]], 3);
        let (p, warnings) = c.slice_at_height_one().unwrap();
        assert!(warnings.is_empty());
        let verts = p.vertices();
        assert_eq!(verts.len(), 4);
        let expect: Vec<Vec<BigRational>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|q| q.iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
            .collect();
        let got: Vec<Vec<BigRational>> = verts.iter().map(|v| v.point.clone()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn slice_with_rational_vertex() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[-1, -2, 3]], 3);
        let (p, _) = c.slice_at_height_one().unwrap();
        let has_half = p
            .vertices()
            .iter()
            .any(|v| v.point == vec![
                BigRational::from(BigInt::zero()),
                BigRational::new(BigInt::from(3), BigInt::from(2)),
            ]);
        assert!(has_half, "vertex (0, 3/2) expected, got {:?}", p.vertices());
    }

    #[test]
    fn slice_requires_positive_heights() {
        // The orthant has rays at height zero relative to the last axis.
        let normals: Vec<IntVector> = (0..3).map(|i| IntVector::unit(3, i)).collect();
        let c = MomentCone::build(normals, 3).unwrap().0;
        assert!(matches!(
            c.slice_at_height_one().unwrap_err(),
            Error::ReebNotPositiveOnCone { .. }
        ));
    }

    #[test]
    fn classify_dispatch() {
        // dim 4, lineality 2.
        let (c, _) = MomentCone::build(vec![iv(&[1, 0, 0, 0]), iv(&[0, 1, 0, 0])], 4).unwrap();
        assert_eq!(
            c.classify(),
            ManifoldClass::TorusTimesSphere {
                torus_rank: 2,
                sphere_dim: 5
            }
        );

        // Whole space in dim 2: T^2 x S^1.
        let (c, _) = MomentCone::build(vec![], 2).unwrap();
        assert_eq!(
            c.classify(),
            ManifoldClass::TorusTimesSphere {
                torus_rank: 2,
                sphere_dim: 1
            }
        );

        // Whole space in dim 4 and up: T^{n+1} x S^n.
        let (c, _) = MomentCone::build(vec![], 4).unwrap();
        assert_eq!(
            c.classify(),
            ManifoldClass::TorusTimesSphere {
                torus_rank: 4,
                sphere_dim: 3
            }
        );
    }

    #[test]
    fn opposite_halfspaces_classify_as_torus_times_sphere() {
        let (c, _) = MomentCone::build(vec![iv(&[1, 0]), iv(&[-1, 0])], 2).unwrap();
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(
            c.classify(),
            ManifoldClass::TorusTimesSphere {
                torus_rank: 1,
                sphere_dim: 2
            }
        );
    }
}
