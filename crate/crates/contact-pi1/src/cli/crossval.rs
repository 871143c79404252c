//! Seeded randomized cross-validation: unimodular images of corpus cones and
//! dilations/products of corpus polytopes, with every independent method run
//! and compared on each instance. Each trial derives its RNG from
//! (seed, trial index), so results are independent of sharding or order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use log::debug;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::MomentCone;
use crate::lattice::{IntMatrix, IntVector};
use crate::pi1::{
    compute_pi1_polytope, pi1_lattice_quotient, pi1_ray_determinants, CrossCheck, Method,
    MethodOutcome,
};
use crate::polytope::{pi1_edge_lengths, segment, RationalPolytope};

use super::corpus::{delzant_polytope_pool, good_cone_pool, run_corpus};
use super::{to_json, InputDocument};

#[derive(Clone, Copy, Debug)]
pub struct CrossvalOptions {
    pub count: u64,
    pub seed: u64,
    /// Inclusive ambient-dimension bounds (polytopes count as dim + 1).
    pub dim: (usize, usize),
    /// Inclusive facet/halfspace-count bounds.
    pub facets: (usize, usize),
}

impl CrossvalOptions {
    pub fn new(count: u64, seed: u64) -> CrossvalOptions {
        CrossvalOptions {
            count,
            seed,
            dim: (2, 6),
            facets: (2, 24),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FailureRepro {
    pub trial: u64,
    pub seed: u64,
    pub details: String,
    pub document: InputDocument,
}

#[derive(Clone, Debug)]
pub struct CrossvalSummary {
    pub seed: u64,
    pub corpus_passed: usize,
    pub corpus_failed: usize,
    pub trials: u64,
    pub passes: u64,
    pub skips: BTreeMap<String, u64>,
    pub failures: Vec<FailureRepro>,
}

impl CrossvalSummary {
    pub fn ok(&self) -> bool {
        self.corpus_failed == 0 && self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus goldens: {} pass, {} fail",
            self.corpus_passed, self.corpus_failed
        );
        let skipped: u64 = self.skips.values().sum();
        let _ = writeln!(
            out,
            "random trials (seed {}): {} run, {} pass, {} skipped, {} disagreements",
            self.seed,
            self.trials,
            self.passes,
            skipped,
            self.failures.len()
        );
        for (reason, count) in &self.skips {
            let _ = writeln!(out, "  skipped {count}: {reason}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL trial {} (seed {}): {}", f.trial, f.seed, f.details);
            let _ = writeln!(out, "reproduction document:");
            let _ = write!(out, "{}", to_json(&f.document));
        }
        out
    }
}

enum TrialOutcome {
    Pass,
    Skip(String),
    Fail(String, InputDocument),
}

fn within(value: usize, bounds: (usize, usize)) -> bool {
    bounds.0 <= value && value <= bounds.1
}

/// A random unimodular matrix: a bounded product of elementary operations
/// (row additions with coefficients in [-3, 3], swaps, negations), keeping
/// entries at desk scale.
pub fn random_unimodular<R: Rng>(rng: &mut R, dim: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(dim);
    if dim < 2 {
        return m;
    }
    for _ in 0..12 {
        let op = rng.gen_range(0..8u32);
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim);
        if i == j {
            j = (j + 1) % dim;
        }
        match op {
            6 => m.swap_rows(i, j),
            7 => m.negate_row(i),
            _ => {
                let mut c = rng.gen_range(-3i64..=3);
                if c == 0 {
                    c = 1;
                }
                let c = BigInt::from(c);
                for k in 0..dim {
                    let delta = &c * m.get(i, k);
                    let updated = m.get(j, k) + delta;
                    m.set(j, k, updated);
                }
            }
        }
    }
    debug_assert_eq!(m.det().expect("square").abs(), BigInt::from(1));
    m
}

fn cone_doc(label: &str, dim: usize, normals: &[IntVector]) -> Option<InputDocument> {
    let rows: Option<Vec<Vec<i64>>> = normals
        .iter()
        .map(|v| v.entries().iter().map(|x| x.to_i64()).collect())
        .collect();
    let rows = rows?;
    let borrowed: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Some(InputDocument::cone(label, dim, &borrowed))
}

fn polytope_doc(label: &str, p: &RationalPolytope) -> Option<InputDocument> {
    let halfspaces: Option<Vec<(Vec<i64>, BigRational)>> = p
        .halfspaces()
        .iter()
        .map(|(u, l)| {
            let row: Option<Vec<i64>> = u.entries().iter().map(|x| x.to_i64()).collect();
            row.map(|r| (r, l.clone()))
        })
        .collect();
    let halfspaces = halfspaces?;
    let borrowed: Vec<(&[i64], BigRational)> = halfspaces
        .iter()
        .map(|(r, l)| (r.as_slice(), l.clone()))
        .collect();
    Some(InputDocument::polytope(label, p.dim(), &borrowed))
}

fn cone_trial(
    rng: &mut ChaCha8Rng,
    cones: &[(String, MomentCone)],
    opts: &CrossvalOptions,
    trial: u64,
) -> TrialOutcome {
    let pool: Vec<&(String, MomentCone)> = cones
        .iter()
        .filter(|(_, c)| within(c.ambient_dim(), opts.dim) && within(c.facet_count(), opts.facets))
        .collect();
    if pool.is_empty() {
        return TrialOutcome::Skip(
            "no corpus cone within the requested dim/facet ranges".to_string(),
        );
    }
    let (label, cone) = pool[rng.gen_range(0..pool.len())];
    let u = random_unimodular(rng, cone.ambient_dim());
    let normals: Vec<IntVector> = cone.normals().iter().map(|v| u.mul_vec(v)).collect();
    let Some(doc) = cone_doc(&format!("{label}-image-{trial}"), cone.ambient_dim(), &normals)
    else {
        return TrialOutcome::Skip("transformed entries exceed the document range".to_string());
    };
    debug!("trial {trial}: unimodular image of {label}");

    let (tcone, warnings) = match MomentCone::build(normals, cone.ambient_dim()) {
        Ok(x) => x,
        Err(e) => return TrialOutcome::Fail(format!("transformed cone failed to build: {e}"), doc),
    };
    if !warnings.is_empty() {
        return TrialOutcome::Fail(
            "unimodular image of primitive normals produced warnings".to_string(),
            doc,
        );
    }

    let validation = tcone.validate();
    if !(validation.strictly_convex && validation.good) {
        return TrialOutcome::Fail(
            "goodness is not invariant under this unimodular transform".to_string(),
            doc,
        );
    }

    // Normals transform by U, so cone points (hence rays) transform by the
    // inverse transpose.
    let w = u
        .inverse_unimodular()
        .expect("random unimodular matrix")
        .transpose();
    let mut expected: Vec<IntVector> = cone
        .rays()
        .expect("pool cone is strictly convex")
        .iter()
        .map(|r| w.mul_vec(&r.generator))
        .collect();
    expected.sort();
    let mut actual: Vec<IntVector> = tcone
        .rays()
        .expect("transformed cone is strictly convex")
        .iter()
        .map(|r| r.generator.clone())
        .collect();
    actual.sort();
    if expected != actual {
        return TrialOutcome::Fail(
            "rays of the image cone are not the images of the rays".to_string(),
            doc,
        );
    }

    let original = match pi1_ray_determinants(cone) {
        Ok(g) => g,
        Err(e) => return TrialOutcome::Fail(format!("ray determinants on original: {e}"), doc),
    };
    let transformed = match pi1_ray_determinants(&tcone) {
        Ok(g) => g,
        Err(e) => return TrialOutcome::Fail(format!("ray determinants on image: {e}"), doc),
    };
    let quotient = match pi1_lattice_quotient(&tcone) {
        Ok(g) => g,
        Err(e) => return TrialOutcome::Fail(format!("lattice quotient on image: {e}"), doc),
    };
    if transformed != original {
        return TrialOutcome::Fail(
            format!("ray determinants changed under the transform: {original} vs {transformed}"),
            doc,
        );
    }
    if quotient != transformed {
        return TrialOutcome::Fail(
            format!("methods disagree on the image: thmB {transformed}, lerman {quotient}"),
            doc,
        );
    }
    if !quotient.is_cyclic() {
        return TrialOutcome::Fail(format!("lattice quotient is not cyclic: {quotient}"), doc);
    }
    TrialOutcome::Pass
}

fn polytope_trial(
    rng: &mut ChaCha8Rng,
    polys: &[(String, RationalPolytope)],
    opts: &CrossvalOptions,
    trial: u64,
) -> TrialOutcome {
    let pool: Vec<&(String, RationalPolytope)> = polys
        .iter()
        .filter(|(_, p)| {
            within(p.dim() + 1, opts.dim) && within(p.halfspaces().len(), opts.facets)
        })
        .collect();
    if pool.is_empty() {
        return TrialOutcome::Skip(
            "no corpus polytope within the requested dim/facet ranges".to_string(),
        );
    }
    let (base_label, base) = pool[rng.gen_range(0..pool.len())];
    let op = rng.gen_range(0..3u32);
    let (p, label) = match op {
        0 => {
            let k = rng.gen_range(2..=5i64);
            let (p, _) = base.dilate(&BigInt::from(k)).expect("dilation of pool polytope");
            (p, format!("{base_label}-dilated-{k}-{trial}"))
        }
        1 if base.dim() + 2 <= opts.dim.1 => {
            let s = rng.gen_range(1..=4i64);
            let (p, _) = base
                .product(&segment(&BigInt::from(s)))
                .expect("product with a segment");
            (p, format!("{base_label}-x-segment-{s}-{trial}"))
        }
        _ => (base.clone(), format!("{base_label}-asis-{trial}")),
    };
    let Some(doc) = polytope_doc(&label, &p) else {
        return TrialOutcome::Skip("polytope entries exceed the document range".to_string());
    };
    debug!("trial {trial}: polytope {label}");

    let report = match compute_pi1_polytope(&p, &Method::ALL) {
        Ok(r) => r,
        Err(e) => return TrialOutcome::Fail(format!("compute failed: {e}"), doc),
    };
    if let CrossCheck::Disagree(details) = &report.cross_check {
        return TrialOutcome::Fail(format!("methods disagree: {details}"), doc);
    }
    let computed = report
        .methods
        .iter()
        .filter(|r| matches!(r.outcome, MethodOutcome::Computed(_)))
        .count();
    if computed != 3 {
        return TrialOutcome::Fail(
            format!("expected all three methods on an integral Delzant polytope, got {computed}"),
            doc,
        );
    }
    if !report.pi1.is_cyclic() {
        return TrialOutcome::Fail(format!("pi1 is not cyclic: {}", report.pi1), doc);
    }

    let morse = match p.morse_indices(&p.choose_generic_functional()) {
        Ok(m) => m,
        Err(e) => return TrialOutcome::Fail(format!("morse data failed: {e}"), doc),
    };
    let index2 = morse.indices.iter().filter(|&&i| i == 2).count();
    if index2 != p.halfspaces().len() - p.dim() {
        return TrialOutcome::Fail(
            format!(
                "index-2 count {} differs from facets - dim = {}",
                index2,
                p.halfspaces().len() - p.dim()
            ),
            doc,
        );
    }

    match p.euler_gcd_consistency() {
        Ok((_, _, true)) => {}
        Ok((lengths, dets, false)) => {
            return TrialOutcome::Fail(
                format!("edge-length gcd {lengths} differs from euler gcd {dets}"),
                doc,
            )
        }
        Err(e) => return TrialOutcome::Fail(format!("euler consistency failed: {e}"), doc),
    }

    let cone = match p.cone_over_polytope() {
        Ok(c) => c,
        Err(e) => return TrialOutcome::Fail(format!("cone over polytope failed: {e}"), doc),
    };
    let via_cone = match pi1_ray_determinants(&cone) {
        Ok(g) => g,
        Err(e) => return TrialOutcome::Fail(format!("ray determinants failed: {e}"), doc),
    };
    let via_edges = match pi1_edge_lengths(&p) {
        Ok(g) => g,
        Err(e) => return TrialOutcome::Fail(format!("edge lengths failed: {e}"), doc),
    };
    if via_cone != via_edges {
        return TrialOutcome::Fail(
            format!("edge-length route {via_edges} differs from cone route {via_cone}"),
            doc,
        );
    }
    TrialOutcome::Pass
}

/// Runs the corpus goldens plus `count` random trials. Any failure carries a
/// reproduction document; the caller decides the exit code.
pub fn run_crossval(opts: &CrossvalOptions) -> CrossvalSummary {
    let corpus_run = run_corpus(None).expect("corpus run does not touch the filesystem");
    let cones = good_cone_pool();
    let polys = delzant_polytope_pool();

    let mut summary = CrossvalSummary {
        seed: opts.seed,
        corpus_passed: corpus_run.passed,
        corpus_failed: corpus_run.failed,
        trials: opts.count,
        passes: 0,
        skips: BTreeMap::new(),
        failures: Vec::new(),
    };

    for trial in 0..opts.count {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(trial);
        let outcome = if rng.gen_range(0..2u32) == 0 {
            cone_trial(&mut rng, &cones, opts, trial)
        } else {
            polytope_trial(&mut rng, &polys, opts, trial)
        };
        match outcome {
            TrialOutcome::Pass => summary.passes += 1,
            TrialOutcome::Skip(reason) => {
                *summary.skips.entry(reason).or_insert(0) += 1;
            }
            TrialOutcome::Fail(details, document) => summary.failures.push(FailureRepro {
                trial,
                seed: opts.seed,
                details,
                document,
            }),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_unimodular_has_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in 2..=5 {
            for _ in 0..20 {
                let m = random_unimodular(&mut rng, dim);
                assert_eq!(m.det().unwrap().abs(), BigInt::from(1));
            }
        }
    }

    #[test]
    fn crossval_passes_and_is_deterministic() {
        let opts = CrossvalOptions::new(24, 7);
        let a = run_crossval(&opts);
        assert!(a.ok(), "unexpected failures:\n{}", a.render());
        assert_eq!(a.corpus_failed, 0);
        let b = run_crossval(&opts);
        assert_eq!(a.passes, b.passes);
        assert_eq!(a.skips, b.skips);
        assert_eq!(a.render(), b.render());
    }

    #[test]
    fn narrow_ranges_skip_without_crashing() {
        let mut opts = CrossvalOptions::new(6, 3);
        opts.dim = (6, 6);
        let summary = run_crossval(&opts);
        assert!(summary.ok(), "{}", summary.render());
        let handled: u64 = summary.passes + summary.skips.values().sum::<u64>();
        assert_eq!(handled, 6);
    }
}
