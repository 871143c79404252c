//! Acceptance gate: one test per criterion, each printing a single PASS line
//! (visible with --nocapture) and enforcing the stated time bound where one
//! applies. Every check is exact integer/rational arithmetic.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use contact_pi1::cli::corpus::{delzant_polytope_pool, good_cone_pool};
use contact_pi1::cli::crossval::random_unimodular;
use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::{
    minor_gcd, smith_normal_form, AbelianGroup, IntMatrix, IntVector,
};
use contact_pi1::pi1::{
    compute_pi1_bundle, compute_pi1_cone, pi1_lattice_quotient, pi1_ray_determinants,
    pi1_ray_determinants_with_base, CrossCheck, Method, MethodOutcome,
};
use contact_pi1::polytope::{pi1_edge_lengths, segment, unit_simplex, RationalPolytope};
use contact_pi1::Error;

fn pass(criterion: usize, what: &str) {
    println!("PASS  criterion {criterion:>2}: {what}");
}

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

fn cone(normals: &[&[i64]], dim: usize) -> MomentCone {
    let vs: Vec<IntVector> = normals.iter().map(|r| IntVector::from_i64(r)).collect();
    MomentCone::build(vs, dim).expect("test cone builds").0
}

fn orthant(dim: usize) -> MomentCone {
    let rows: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
    MomentCone::build(rows, dim).expect("orthant builds").0
}

fn lens_cone(p: i64, q: i64) -> MomentCone {
    cone(&[&[1, 0], &[-q, p]], 2)
}

#[test]
fn criterion_01_sphere_cones_are_simply_connected() {
    let start = Instant::now();
    for dim in 2..=6usize {
        let c = orthant(dim);
        let report = compute_pi1_cone(&c, None, None, &Method::ALL).expect("orthant computes");
        assert!(report.pi1.is_trivial(), "dim {dim}: pi1 = {}", report.pi1);
        assert_eq!(report.cross_check, CrossCheck::Agree);
        let mut computed = 0;
        for m in &report.methods {
            match &m.outcome {
                MethodOutcome::Computed(g) => {
                    computed += 1;
                    assert!(g.is_trivial(), "dim {dim}, {}: got {g}", m.method);
                }
                MethodOutcome::Skipped { reason } => {
                    panic!("dim {dim}, {} skipped: {reason}", m.method)
                }
            }
        }
        assert_eq!(computed, 3, "all three methods must run on the orthant");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(1, "orthant cones in dims 2..6 give trivial pi1 under thmB, lerman and thmC");
}

#[test]
fn criterion_02_lens_spaces_for_all_p_up_to_50() {
    let start = Instant::now();
    for p in 1i64..=50 {
        for q in 1..=p.max(1) {
            if bi(p).gcd(&bi(q)) != bi(1) {
                continue;
            }
            let c = lens_cone(p, q);
            let b = pi1_ray_determinants(&c).expect("lens cone is good");
            let l = pi1_lattice_quotient(&c).expect("lens cone is strictly convex");
            assert!(l.is_cyclic(), "p={p} q={q}: lerman not cyclic: {l}");
            assert_eq!(b.order(), Some(bi(p)), "p={p} q={q}: thmB order");
            assert_eq!(l.order(), Some(bi(p)), "p={p} q={q}: lerman order");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(2, "lens cones {(1,0),(-q,p)} give order p under thmB and lerman for all coprime q, p <= 50");
}

#[test]
fn criterion_03_unimodular_images_match_cokernel() {
    let start = Instant::now();
    let pool = good_cone_pool();
    let trials = 200usize;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(20260816);
        rng.set_stream(trial as u64);
        let (label, base) = &pool[trial % pool.len()];
        let u = random_unimodular(&mut rng, base.ambient_dim());
        let normals: Vec<IntVector> = base.normals().iter().map(|v| u.mul_vec(v)).collect();
        let (image, warnings) =
            MomentCone::build(normals, base.ambient_dim()).expect("image cone builds");
        assert!(warnings.is_empty(), "{label} trial {trial}: {warnings:?}");
        let b = pi1_ray_determinants(&image).expect("image stays good");
        let l = pi1_lattice_quotient(&image).expect("image stays strictly convex");
        assert!(l.is_cyclic(), "{label} trial {trial}: cokernel not cyclic: {l}");
        assert_eq!(b.order(), l.order(), "{label} trial {trial}: orders differ");
        assert_eq!(b, l, "{label} trial {trial}: groups differ");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(3, "200 seeded unimodular images: thmB order equals |cokernel| and the cokernel is cyclic");
}

#[test]
fn criterion_04_edge_lengths_match_cone_route_on_seeded_delzant_polytopes() {
    let start = Instant::now();
    let mut checked = 0usize;

    let check = |p: &RationalPolytope, context: &str| {
        let (delzant, violations) = p.is_delzant();
        assert!(delzant, "{context}: not Delzant: {violations:?}");
        let via_edges = pi1_edge_lengths(p).expect("edge-length route");
        let c = p.cone_over_polytope().expect("cone over integral polytope");
        let via_cone = pi1_ray_determinants(&c).expect("cone over Delzant polytope is good");
        assert_eq!(via_edges, via_cone, "{context}: routes disagree");
        via_edges
    };

    // Named families with known answers.
    for n in 1..=3usize {
        for k in 1i64..=5 {
            let (p, _) = unit_simplex(n).dilate(&bi(k)).expect("dilation");
            let g = check(&p, &format!("{k} Delta^{n}"));
            assert_eq!(g, AbelianGroup::cyclic(&bi(k)), "{k} Delta^{n}");
            checked += 1;
        }
    }
    for len in 1i64..=10 {
        let g = check(&segment(&bi(len)), &format!("[0,{len}]"));
        assert_eq!(g, AbelianGroup::cyclic(&bi(len)), "[0,{len}]");
        checked += 1;
    }

    // Seeded random dilations and products over the corpus pool.
    let pool = delzant_polytope_pool();
    for trial in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        rng.set_stream(trial);
        let (label, base) = &pool[rng.gen_range(0..pool.len())];
        let p = match rng.gen_range(0..3u32) {
            0 => {
                let k = rng.gen_range(2..=5i64);
                base.dilate(&bi(k)).expect("dilation").0
            }
            1 => {
                let s = rng.gen_range(1..=4i64);
                base.product(&segment(&bi(s))).expect("product").0
            }
            _ => base.clone(),
        };
        check(&p, &format!("{label} trial {trial}"));
        checked += 1;
    }

    assert!(checked >= 100, "only {checked} polytopes checked");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(4, "thmC equals thmB-of-the-cone on 125 Delzant polytopes; k Delta^n -> Z/k, [0,p] -> Z/p");
}

#[test]
fn criterion_05_morse_counts_on_corpus_polytopes() {
    for (label, p) in delzant_polytope_pool() {
        let x = p.choose_generic_functional();
        let morse = p.morse_indices(&x).expect("generic functional works");
        let d = p.halfspaces().len();
        let n = p.dim();
        let index2 = morse.indices.iter().filter(|&&i| i == 2).count();
        assert_eq!(index2, d - n, "{label}: index-2 count");
        let minima = morse.indices.iter().filter(|&&i| i == 0).count();
        let maxima = morse.indices.iter().filter(|&&i| i == 2 * n).count();
        assert_eq!(minima, 1, "{label}: unique minimum");
        assert_eq!(maxima, 1, "{label}: unique maximum");
    }
    pass(5, "every corpus polytope has d - n index-2 vertices and unique extrema");
}

#[test]
fn criterion_06_edge_length_gcd_equals_euler_gcd() {
    for (label, p) in delzant_polytope_pool() {
        assert!(p.is_integral(), "{label}: corpus polytope must be integral");
        let (lengths, dets, equal) = p.euler_gcd_consistency().expect("consistency check runs");
        assert!(equal, "{label}: edge-length gcd {lengths} != euler gcd {dets}");
    }
    pass(6, "gcd of down-edge lengths equals gcd of |euler coefficients| on every corpus polytope");
}

#[test]
fn criterion_07_ray_independence_of_thm_b() {
    for (label, c) in good_cone_pool() {
        let reference = pi1_ray_determinants(&c).expect("pool cone is good");
        let rays = c.rays().expect("pool cone is strictly convex");
        for base in 0..rays.len() {
            let g = pi1_ray_determinants_with_base(&c, base).expect("any base ray works");
            assert_eq!(g, reference, "{label}: base ray {base} gives {g}");
        }
    }
    pass(7, "thmB gives the same group from every base ray on every good corpus cone");
}

#[test]
fn criterion_08_non_reeb_closed_forms() {
    // Half-space cone in dim 2: T^1 x S^2, pi1 = Z.
    let half = cone(&[&[1, 0]], 2);
    let report = compute_pi1_cone(&half, None, None, &Method::ALL).expect("computes");
    assert_eq!(report.pi1, AbelianGroup::free(1));

    // Dim-4 cone with lineality 2: T^2 x S^5, pi1 = Z^2.
    let lin2 = cone(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
    let report = compute_pi1_cone(&lin2, None, None, &Method::ALL).expect("computes");
    assert_eq!(report.pi1, AbelianGroup::free(2));

    // Principal T^3-bundles over S^2 by Euler class.
    let class = |a: i64, b: i64, c: i64| [bi(a), bi(b), bi(c)];
    let report = compute_pi1_bundle(&class(2, 4, 6), &Method::ALL).expect("computes");
    assert_eq!(report.pi1, AbelianGroup::new(2, vec![bi(2)]));
    assert_eq!(report.pi1.to_string(), "Z/2 + Z^2");

    let report = compute_pi1_bundle(&class(0, 0, 0), &Method::ALL).expect("computes");
    assert_eq!(report.pi1, AbelianGroup::free(3));
    assert_eq!(report.pi2, Some(AbelianGroup::free(1)), "trivial class has pi2 = Z");

    let report = compute_pi1_bundle(&class(1, 5, 7), &Method::ALL).expect("computes");
    assert_eq!(report.pi1, AbelianGroup::free(2));

    pass(8, "half-space -> Z, lineality-2 -> Z^2, bundle classes (2,4,6), (0,0,0), (1,5,7) as expected");
}

#[test]
fn criterion_09_non_good_cone_is_rejected_with_witness() {
    let c = cone(&[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]], 3);
    let v = c.validate();
    assert!(v.strictly_convex);
    assert!(!v.good);
    assert!(!v.failures.is_empty());
    let f = &v.failures[0];
    assert_eq!(f.smith_invariants, vec![bi(1), bi(2)]);

    // The failing face is the ray spanned by (0,0,1).
    let rays = c.rays().expect("strictly convex");
    let failing = rays
        .iter()
        .find(|r| f.facet_indices.iter().all(|i| r.facet_indices.contains(i)))
        .expect("failing face contains a ray of the cone");
    assert_eq!(failing.generator, IntVector::from_i64(&[0, 0, 1]));

    assert!(matches!(pi1_ray_determinants(&c), Err(Error::NotGood)));
    pass(9, "non-good cone is flagged with the failing ray and Smith invariants (1,2); thmB refuses");
}

#[test]
fn criterion_10_orbifold_triangle_orders() {
    let halfspaces = vec![
        (IntVector::from_i64(&[1, 0]), num_rational::BigRational::from_integer(bi(0))),
        (IntVector::from_i64(&[0, 1]), num_rational::BigRational::from_integer(bi(0))),
        (IntVector::from_i64(&[-1, -2]), num_rational::BigRational::from_integer(bi(-3))),
    ];
    let (p, _) = RationalPolytope::from_halfspaces(2, halfspaces).expect("triangle builds");
    let orb = p.orbifold_vertex_orders().expect("orders are defined");
    let mut orders = orb.orders.clone();
    orders.sort();
    assert_eq!(orders, vec![bi(1), bi(1), bi(2)]);
    assert_eq!(orb.m_lcm, bi(2));
    pass(10, "triangle (0,0),(3,0),(0,3/2) has vertex orders (1,1,2) and m_lcm = 2");
}

#[test]
fn criterion_11_kernel_algebra_against_oracles() {
    fn cofactor_det(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if a.get(0, j).is_zero() {
                continue;
            }
            let minor = cofactor_det(&a.delete_row_col(0, j));
            let term = a.get(0, j) * minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    for case in 0..1000usize {
        let rows = rng.gen_range(1..=4usize);
        let cols = rng.gen_range(1..=4usize);
        let mut a = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                a.set(i, j, bi(rng.gen_range(-9..=9i64)));
            }
        }

        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.det().unwrap().abs(), bi(1), "case {case}: U unimodular");
        assert_eq!(snf.v.det().unwrap().abs(), bi(1), "case {case}: V unimodular");
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s, "case {case}: U*A*V = S");
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(snf.s.get(i, j).is_zero(), "case {case}: S diagonal");
                }
            }
        }
        let d = snf.invariant_factors();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "case {case}: divisibility {d:?}");
        }
        let mut product = BigInt::one();
        for (k, dk) in d.iter().enumerate() {
            assert!(dk.is_positive(), "case {case}: invariant factors positive");
            product *= dk;
            assert_eq!(product, minor_gcd(&a, k + 1), "case {case}: minor-gcd identity");
        }
        if rows == cols {
            assert_eq!(a.det().unwrap(), cofactor_det(&a), "case {case}: determinant oracle");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(11, "1000 seeded matrices pass SNF, minor-gcd and cofactor determinant oracles");
}
