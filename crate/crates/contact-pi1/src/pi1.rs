//! Fundamental groups of compact contact toric manifolds, computed by
//! independent routes that are cross-checked against each other:
//!
//! - ray determinants: gcd of the (n+1)x(n+1) determinants built from the n
//!   facet normals through a base ray and each remaining normal ("thmB");
//! - lattice quotient: cokernel of the normal matrix, i.e. Z^{n+1} modulo
//!   the sublattice spanned by the facet normals ("lerman");
//! - edge lengths: gcd of the lattice lengths of the descending edges at
//!   index-2 vertices of an integral Delzant slice ("thmC").
//!
//! Manifolds that are not of Reeb type get their groups from the product
//! classification instead, including the principal T^3-bundle over S^2 case
//! where pi_1 is read off the bundle class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cone::{ConeValidation, ManifoldClass, MomentCone, Ray};
use crate::error::{Error, Result};
use crate::lattice::{cokernel, gcd_all, AbelianGroup, IntMatrix, IntVector};
use crate::polytope::{pi1_edge_lengths, OrbifoldData, RationalPolytope};

/// Euler-class data of the Boothby-Wang circle bundle hidden in a good cone:
/// the base ray, the indices of the n facets through it (ascending input
/// order), and the signed determinants det[v_1, ..., v_n, v_j] for every
/// remaining normal v_j in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCoefficients {
    pub base_ray: Ray,
    pub ordered_first_n: Vec<usize>,
    pub coefficients: Vec<BigInt>,
}

/// One of the pi_1 computation routes, named by its CLI token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    /// "thmB": gcd of ray determinants on the moment cone.
    RayDeterminants,
    /// "lerman": cokernel of the facet-normal matrix.
    LatticeQuotient,
    /// "thmC": descending-edge lattice lengths on a Delzant slice.
    EdgeLengths,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::RayDeterminants,
        Method::LatticeQuotient,
        Method::EdgeLengths,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Method::RayDeterminants => "thmB",
            Method::LatticeQuotient => "lerman",
            Method::EdgeLengths => "thmC",
        }
    }

    pub fn from_token(token: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.token() == token)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodOutcome {
    Computed(AbelianGroup),
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodReport {
    pub method: Method,
    pub outcome: MethodOutcome,
}

/// Verdict of comparing every computed method result pairwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCheck {
    Agree,
    Disagree(String),
}

/// Full answer of `compute_pi1_*`: the manifold class, the fundamental group
/// with every method's outcome, the cross-check verdict, and the validation
/// data the computation saw along the way. `polytope_integral` and
/// `polytope_delzant` refer to the input polytope or to the derived slice,
/// whichever the run touched; `orbifold` carries vertex orders whenever the
/// edge-length route was skipped on a simple non-Delzant or non-integral
/// polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Report {
    pub class: ManifoldClass,
    pub pi1: AbelianGroup,
    pub pi2: Option<AbelianGroup>,
    pub methods: Vec<MethodReport>,
    pub cross_check: CrossCheck,
    pub warnings: Vec<String>,
    pub cone_validation: Option<ConeValidation>,
    pub polytope_integral: Option<bool>,
    pub polytope_delzant: Option<bool>,
    pub orbifold: Option<OrbifoldData>,
}

fn good_cone_rays(cone: &MomentCone) -> Result<Vec<Ray>> {
    let validation = cone.validate();
    if !validation.strictly_convex {
        return Err(Error::NotStrictlyConvex);
    }
    if !validation.good {
        return Err(Error::NotGood);
    }
    cone.rays()
}

/// Euler coefficients with the base ray chosen by index into `cone.rays()`
/// (rays are sorted by generator, so index 0 is the lexicographic minimum).
pub fn euler_coefficients_with_base(
    cone: &MomentCone,
    base_index: usize,
) -> Result<EulerCoefficients> {
    let rays = good_cone_rays(cone)?;
    assert!(base_index < rays.len(), "base ray index out of range");
    let base_ray = rays[base_index].clone();
    let n = cone.ambient_dim() - 1;
    debug_assert_eq!(
        base_ray.facet_indices.len(),
        n,
        "rays of a good cone lie on exactly n facets"
    );

    let ordered_first_n: Vec<usize> = base_ray.facet_indices.iter().copied().collect();
    let mut columns: Vec<IntVector> = ordered_first_n
        .iter()
        .map(|&i| cone.normals()[i].clone())
        .collect();
    let mut coefficients = Vec::new();
    for (j, v) in cone.normals().iter().enumerate() {
        if base_ray.facet_indices.contains(&j) {
            continue;
        }
        columns.push(v.clone());
        coefficients.push(IntMatrix::from_cols(&columns, cone.ambient_dim()).det()?);
        columns.pop();
    }
    debug_assert!(
        !coefficients.is_empty(),
        "a full-rank cone has more normals than any single ray touches"
    );
    Ok(EulerCoefficients {
        base_ray,
        ordered_first_n,
        coefficients,
    })
}

/// Euler coefficients from the lexicographically smallest ray.
pub fn euler_coefficients(cone: &MomentCone) -> Result<EulerCoefficients> {
    euler_coefficients_with_base(cone, 0)
}

/// pi_1 by ray determinants: cyclic of order gcd |det[v_1,...,v_n,v_j]| over
/// the normals v_j away from the base ray. Requires a good strictly convex
/// cone; the order never vanishes because the normals span.
pub fn pi1_ray_determinants(cone: &MomentCone) -> Result<AbelianGroup> {
    pi1_ray_determinants_with_base(cone, 0)
}

/// Same with an explicit base ray; the result is independent of the choice.
pub fn pi1_ray_determinants_with_base(
    cone: &MomentCone,
    base_index: usize,
) -> Result<AbelianGroup> {
    let euler = euler_coefficients_with_base(cone, base_index)?;
    let k = gcd_all(euler.coefficients.iter());
    debug_assert!(!k.is_zero(), "normals span, so some determinant is nonzero");
    Ok(AbelianGroup::cyclic(&k))
}

/// pi_1 as the lattice quotient Z^{n+1} / (normal sublattice): the cokernel
/// of the matrix with the facet normals as columns. Pure lattice computation,
/// defined for any strictly convex cone; only good cones give it a
/// contact-geometric meaning.
pub fn pi1_lattice_quotient(cone: &MomentCone) -> Result<AbelianGroup> {
    if cone.lineality_dim() != 0 {
        return Err(Error::NotStrictlyConvex);
    }
    Ok(cokernel(&IntMatrix::from_cols(
        cone.normals(),
        cone.ambient_dim(),
    )))
}

/// pi_1 and pi_2 of the principal T^3-bundle over S^2 with bundle class
/// (a, b, c): pi_1 = Z_k + Z^2 with k = gcd(|a|,|b|,|c|) (Z^3 when k = 0),
/// pi_2 = Z exactly for the trivial bundle k = 0.
pub fn pi1_t3_bundle(class: &[BigInt; 3]) -> (AbelianGroup, AbelianGroup) {
    let k = gcd_all(class.iter());
    let pi1 = AbelianGroup::new(2, vec![k.clone()]);
    let pi2 = if k.is_zero() {
        AbelianGroup::free(1)
    } else {
        AbelianGroup::trivial()
    };
    (pi1, pi2)
}

fn canonical_selection(methods: &[Method]) -> Vec<Method> {
    let selected: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| methods.contains(m))
        .collect();
    assert!(!selected.is_empty(), "at least one method must be selected");
    selected
}

/// Assembles pi1 and the cross-check from per-method outcomes. Errors with
/// NoApplicableMethod when nothing was computed (only possible under a
/// restricted method selection).
fn assemble_report(
    class: ManifoldClass,
    methods: Vec<MethodReport>,
    warnings: Vec<String>,
    cone_validation: Option<ConeValidation>,
    polytope_integral: Option<bool>,
    polytope_delzant: Option<bool>,
    orbifold: Option<OrbifoldData>,
) -> Result<Pi1Report> {
    let computed: Vec<(Method, &AbelianGroup)> = methods
        .iter()
        .filter_map(|r| match &r.outcome {
            MethodOutcome::Computed(g) => Some((r.method, g)),
            MethodOutcome::Skipped { .. } => None,
        })
        .collect();
    let Some((_, first)) = computed.first() else {
        let reasons: Vec<String> = methods
            .iter()
            .map(|r| match &r.outcome {
                MethodOutcome::Skipped { reason } => format!("{}: {reason}", r.method),
                MethodOutcome::Computed(_) => unreachable!(),
            })
            .collect();
        return Err(Error::NoApplicableMethod {
            reason: reasons.join("; "),
        });
    };
    let pi1 = (*first).clone();
    let cross_check = if computed.iter().all(|(_, g)| *g == &pi1) {
        CrossCheck::Agree
    } else {
        let detail: Vec<String> = computed
            .iter()
            .map(|(m, g)| format!("{m} = {g}"))
            .collect();
        CrossCheck::Disagree(detail.join(", "))
    };
    Ok(Pi1Report {
        class,
        pi1,
        pi2: None,
        methods,
        cross_check,
        warnings,
        cone_validation,
        polytope_integral,
        polytope_delzant,
        orbifold,
    })
}

fn closed_form_report(
    class: ManifoldClass,
    pi1: AbelianGroup,
    pi2: AbelianGroup,
    selection: &[Method],
    reason: &str,
    cone_validation: Option<ConeValidation>,
) -> Pi1Report {
    let methods = selection
        .iter()
        .map(|&method| MethodReport {
            method,
            outcome: MethodOutcome::Skipped {
                reason: reason.to_string(),
            },
        })
        .collect();
    Pi1Report {
        class,
        pi1,
        pi2: Some(pi2),
        methods,
        cross_check: CrossCheck::Agree,
        warnings: Vec::new(),
        cone_validation,
        polytope_integral: None,
        polytope_delzant: None,
        orbifold: None,
    }
}

const NOT_GOOD_WARNING: &str = "cone is strictly convex but not good, so it is not the moment cone \
     of a compact contact toric manifold; the lattice quotient is reported \
     without its contact-geometric interpretation";

/// Classification dispatch for a moment cone. For Reeb-type cones the
/// selected methods run and must agree; the edge-length route slices at the
/// supplied Reeb vector (or the derived one) and is skipped with a recorded
/// reason and orbifold data when the slice is not integral Delzant. Non-Reeb
/// classes get closed-form groups and every method is marked skipped. A
/// whole-space cone in dimension 3 needs `bundle_class`.
pub fn compute_pi1_cone(
    cone: &MomentCone,
    bundle_class: Option<&[BigInt; 3]>,
    reeb: Option<&IntVector>,
    methods: &[Method],
) -> Result<Pi1Report> {
    let selection = canonical_selection(methods);
    let validation = cone.validate();
    let class = cone.classify();
    let not_reeb = "manifold is not of Reeb type; pi_1 follows from the manifold class";

    match class {
        ManifoldClass::ReebType => {
            let mut warnings = Vec::new();
            let mut reports = Vec::new();
            let mut orbifold = None;
            let mut slice_integral = None;
            let mut slice_delzant = None;
            for &method in &selection {
                let outcome = match method {
                    Method::RayDeterminants => {
                        MethodOutcome::Computed(pi1_ray_determinants(cone)?)
                    }
                    Method::LatticeQuotient => {
                        MethodOutcome::Computed(pi1_lattice_quotient(cone)?)
                    }
                    Method::EdgeLengths => {
                        let r = match reeb {
                            Some(r) => r.clone(),
                            None => cone.reeb_vector()?,
                        };
                        let (aligned, _) = cone.reparametrize_to_last_axis(&r)?;
                        let (slice, mut slice_warnings) = aligned.slice_at_height_one()?;
                        warnings.append(&mut slice_warnings);
                        slice_integral = Some(slice.is_integral());
                        slice_delzant = Some(slice.is_delzant().0);
                        if !slice.is_integral() {
                            orbifold = Some(slice.orbifold_vertex_orders()?);
                            MethodOutcome::Skipped {
                                reason: "slice at height one is not an integral lattice \
                                         polytope; orbifold vertex orders recorded"
                                    .to_string(),
                            }
                        } else if !slice.is_delzant().0 {
                            orbifold = Some(slice.orbifold_vertex_orders()?);
                            MethodOutcome::Skipped {
                                reason: "slice at height one is not Delzant; orbifold vertex \
                                         orders recorded"
                                    .to_string(),
                            }
                        } else {
                            MethodOutcome::Computed(pi1_edge_lengths(&slice)?)
                        }
                    }
                };
                reports.push(MethodReport { method, outcome });
            }
            assemble_report(
                class,
                reports,
                warnings,
                Some(validation),
                slice_integral,
                slice_delzant,
                orbifold,
            )
        }
        ManifoldClass::InvalidMomentCone => {
            let warnings = vec![NOT_GOOD_WARNING.to_string()];
            let reports = selection
                .iter()
                .map(|&method| {
                    let outcome = match method {
                        Method::LatticeQuotient => {
                            pi1_lattice_quotient(cone).map(MethodOutcome::Computed)
                        }
                        _ => Ok(MethodOutcome::Skipped {
                            reason: "requires a good cone".to_string(),
                        }),
                    };
                    outcome.map(|outcome| MethodReport { method, outcome })
                })
                .collect::<Result<Vec<_>>>()?;
            assemble_report(class, reports, warnings, Some(validation), None, None, None)
        }
        ManifoldClass::TorusTimesSphere {
            torus_rank,
            sphere_dim,
        } => {
            // T^m x S^1 is the torus T^{m+1}; spheres of dimension >= 2 are
            // simply connected and only S^2 contributes to pi_2.
            let pi1 = if sphere_dim == 1 {
                AbelianGroup::free(torus_rank + 1)
            } else {
                AbelianGroup::free(torus_rank)
            };
            let pi2 = if sphere_dim == 2 {
                AbelianGroup::free(1)
            } else {
                AbelianGroup::trivial()
            };
            Ok(closed_form_report(
                class,
                pi1,
                pi2,
                &selection,
                not_reeb,
                Some(validation),
            ))
        }
        ManifoldClass::PrincipalT3BundleOverS2 => {
            let coeffs = bundle_class.ok_or(Error::MissingBundleClass)?;
            let (pi1, pi2) = pi1_t3_bundle(coeffs);
            Ok(closed_form_report(
                class,
                pi1,
                pi2,
                &selection,
                not_reeb,
                Some(validation),
            ))
        }
    }
}

/// Classification dispatch for a polytope: the edge-length route runs on the
/// polytope itself, the cone routes on the cone over it. Fractional offsets
/// leave no applicable method (they force non-integral vertices and admit no
/// integral cone), which is reported as NoApplicableMethod.
pub fn compute_pi1_polytope(p: &RationalPolytope, methods: &[Method]) -> Result<Pi1Report> {
    let selection = canonical_selection(methods);
    let integral = p.is_integral();
    let delzant = p.is_delzant().0;

    let integer_offsets = p.halfspaces().iter().all(|(_, l)| l.is_integer());
    if !integer_offsets {
        debug_assert!(!integral, "a supporting facet with fractional offset has no lattice vertex");
        let mut reasons = vec![
            "cone methods: halfspace offsets are not all integers, so there is no cone over \
             the polytope"
                .to_string(),
        ];
        if selection.contains(&Method::EdgeLengths) {
            reasons.push("thmC: polytope is not an integral lattice polytope".to_string());
        }
        return Err(Error::NoApplicableMethod {
            reason: reasons.join("; "),
        });
    }

    let cone = p.cone_over_polytope()?;
    let validation = cone.validate();
    let class = cone.classify();
    let mut warnings = Vec::new();
    if class == ManifoldClass::InvalidMomentCone {
        warnings.push(NOT_GOOD_WARNING.to_string());
    }

    let mut orbifold = None;
    let mut reports = Vec::new();
    for &method in &selection {
        let outcome = match method {
            Method::RayDeterminants => match class {
                ManifoldClass::ReebType => {
                    MethodOutcome::Computed(pi1_ray_determinants(&cone)?)
                }
                ManifoldClass::InvalidMomentCone => MethodOutcome::Skipped {
                    reason: "requires a good cone".to_string(),
                },
                _ => MethodOutcome::Skipped {
                    reason: "cone over the polytope is not strictly convex".to_string(),
                },
            },
            Method::LatticeQuotient => match class {
                ManifoldClass::ReebType | ManifoldClass::InvalidMomentCone => {
                    MethodOutcome::Computed(pi1_lattice_quotient(&cone)?)
                }
                _ => MethodOutcome::Skipped {
                    reason: "cone over the polytope is not strictly convex".to_string(),
                },
            },
            Method::EdgeLengths => {
                if !integral {
                    if p.is_simple() {
                        orbifold = Some(p.orbifold_vertex_orders()?);
                    }
                    MethodOutcome::Skipped {
                        reason: "polytope is not an integral lattice polytope; orbifold \
                                 vertex orders recorded when simple"
                            .to_string(),
                    }
                } else if !delzant {
                    if p.is_simple() {
                        orbifold = Some(p.orbifold_vertex_orders()?);
                    }
                    MethodOutcome::Skipped {
                        reason: "polytope is not Delzant; orbifold vertex orders recorded \
                                 when simple"
                            .to_string(),
                    }
                } else {
                    MethodOutcome::Computed(pi1_edge_lengths(p)?)
                }
            }
        };
        reports.push(MethodReport { method, outcome });
    }

    assemble_report(
        class,
        reports,
        warnings,
        Some(validation),
        Some(integral),
        Some(delzant),
        orbifold,
    )
}

/// Report for a bare T^3-bundle class: no cone, no polytope, closed formula.
pub fn compute_pi1_bundle(class: &[BigInt; 3], methods: &[Method]) -> Result<Pi1Report> {
    let selection = canonical_selection(methods);
    let (pi1, pi2) = pi1_t3_bundle(class);
    Ok(closed_form_report(
        ManifoldClass::PrincipalT3BundleOverS2,
        pi1,
        pi2,
        &selection,
        "input is a bundle class; pi_1 is the closed formula gcd(a, b, c)",
        None,
    ))
}
