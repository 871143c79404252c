//! Built-in example corpus: documents with expected class and fundamental
//! group, plus the pools of good cones and Delzant polytopes that the
//! cross-validation harness perturbs.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cone::MomentCone;
use crate::error::Result;
use crate::lattice::IntVector;
use crate::pi1::Method;
use crate::polytope::{hirzebruch_trapezoid, segment, unit_simplex, RationalPolytope};

use super::{compute_document, to_json, InputDocument};

pub struct CorpusEntry {
    pub label: String,
    pub document: InputDocument,
    pub expected_class: String,
    pub expected_pi1: String,
}

fn rational(x: i64) -> BigRational {
    BigRational::from(BigInt::from(x))
}

fn cyclic_label(k: i64) -> String {
    if k == 1 {
        "0".to_string()
    } else {
        format!("Z/{k}")
    }
}

fn entry(document: InputDocument, expected_class: &str, expected_pi1: String) -> CorpusEntry {
    CorpusEntry {
        label: document.label.clone().expect("corpus documents are labeled"),
        document,
        expected_class: expected_class.to_string(),
        expected_pi1,
    }
}

fn orthant_doc(ambient: usize) -> InputDocument {
    let normals: Vec<Vec<i64>> = (0..ambient)
        .map(|i| {
            let mut row = vec![0; ambient];
            row[i] = 1;
            row
        })
        .collect();
    let rows: Vec<&[i64]> = normals.iter().map(|r| r.as_slice()).collect();
    InputDocument::cone(&format!("orthant-{ambient}"), ambient, &rows)
}

fn simplex_doc(n: usize, k: i64) -> InputDocument {
    let mut halfspaces: Vec<(Vec<i64>, BigRational)> = (0..n)
        .map(|i| {
            let mut row = vec![0; n];
            row[i] = 1;
            (row, rational(0))
        })
        .collect();
    halfspaces.push((vec![-1; n], rational(-k)));
    let borrowed: Vec<(&[i64], BigRational)> = halfspaces
        .iter()
        .map(|(r, l)| (r.as_slice(), l.clone()))
        .collect();
    InputDocument::polytope(&format!("simplex-{n}-dilation-{k}"), n, &borrowed)
}

/// Every built-in example with its expected classification and group.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut entries = Vec::new();

    // Spheres S^3 ... S^11: orthant cones in ambient dimensions 2..6.
    for ambient in 2..=6 {
        entries.push(entry(orthant_doc(ambient), "ReebType", "0".to_string()));
    }

    // Lens spaces: pi_1 = Z/p.
    for p in 1..=10 {
        entries.push(entry(
            InputDocument::cone(&format!("lens-{p}"), 2, &[&[1, 0], &[-1, p]]),
            "ReebType",
            cyclic_label(p),
        ));
    }

    // Square cones: two parallel tilted facets, pi_1 = Z/p.
    for p in 1..=5 {
        entries.push(entry(
            InputDocument::cone(
                &format!("square-cone-{p}"),
                3,
                &[&[1, 0, 0], &[0, 1, 0], &[-1, 0, p], &[0, -1, p]],
            ),
            "ReebType",
            cyclic_label(p),
        ));
    }

    // Dilated simplices k * Delta^n: pi_1 = Z/k.
    for n in 1..=3usize {
        for k in 1..=3i64 {
            entries.push(entry(simplex_doc(n, k), "ReebType", cyclic_label(k)));
        }
    }

    // A Delzant trapezoid (Hirzebruch-type surface): simply connected.
    entries.push(entry(
        InputDocument::polytope(
            "hirzebruch-1-2-5",
            2,
            &[
                (&[1, 0], rational(0)),
                (&[0, 1], rational(0)),
                (&[0, -1], rational(-2)),
                (&[-1, -1], rational(-5)),
            ],
        ),
        "ReebType",
        "0".to_string(),
    ));

    // Strictly convex but not good: rejected as a moment cone, with the
    // lattice quotient still reported.
    entries.push(entry(
        InputDocument::cone("non-good-cone", 3, &[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]]),
        "InvalidMomentCone",
        "Z/2".to_string(),
    ));

    // Non-Reeb classes: torus times sphere.
    entries.push(entry(
        InputDocument::cone("half-space-dim2", 2, &[&[0, 1]]),
        "T^1 x S^2",
        "Z".to_string(),
    ));
    entries.push(entry(
        InputDocument::cone("lineality-2-dim4", 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        "T^2 x S^5",
        "Z^2".to_string(),
    ));
    entries.push(entry(
        InputDocument::cone("whole-space-dim2", 2, &[]),
        "T^2 x S^1",
        "Z^3".to_string(),
    ));
    entries.push(entry(
        InputDocument::cone("whole-space-dim4", 4, &[]),
        "T^4 x S^3",
        "Z^4".to_string(),
    ));

    // Principal T^3-bundles over S^2.
    entries.push(entry(
        InputDocument::bundle("t3-bundle-2-4-6", [2, 4, 6]),
        "PrincipalT3BundleOverS2",
        "Z/2 + Z^2".to_string(),
    ));
    entries.push(entry(
        InputDocument::bundle("t3-bundle-0-0-0", [0, 0, 0]),
        "PrincipalT3BundleOverS2",
        "Z^3".to_string(),
    ));
    entries.push(entry(
        InputDocument::bundle("t3-bundle-1-5-7", [1, 5, 7]),
        "PrincipalT3BundleOverS2",
        "Z^2".to_string(),
    ));

    // Orbifold slice: good cone over a non-Delzant triangle.
    entries.push(entry(
        InputDocument::polytope(
            "orbifold-triangle",
            2,
            &[
                (&[1, 0], rational(0)),
                (&[0, 1], rational(0)),
                (&[-1, -2], rational(-3)),
            ],
        ),
        "ReebType",
        "Z/3".to_string(),
    ));

    entries
}

/// Good strictly convex cones the cross-validation harness transforms.
pub fn good_cone_pool() -> Vec<(String, MomentCone)> {
    let mut pool = Vec::new();
    let mut push = |label: String, normals: Vec<IntVector>, dim: usize| {
        let (cone, warnings) = MomentCone::build(normals, dim).expect("pool cones are valid");
        assert!(warnings.is_empty());
        pool.push((label, cone));
    };

    for ambient in 2..=6usize {
        let normals: Vec<IntVector> = (0..ambient).map(|i| IntVector::unit(ambient, i)).collect();
        push(format!("orthant-{ambient}"), normals, ambient);
    }
    for (p, q) in [(1, 0), (2, 1), (3, 1), (5, 2), (7, 3), (8, 3), (9, 4), (10, 1)] {
        push(
            format!("lens-{p}-{q}"),
            vec![IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[-q, p])],
            2,
        );
    }
    for p in 1..=5i64 {
        push(
            format!("square-cone-{p}"),
            vec![
                IntVector::from_i64(&[1, 0, 0]),
                IntVector::from_i64(&[0, 1, 0]),
                IntVector::from_i64(&[-1, 0, p]),
                IntVector::from_i64(&[0, -1, p]),
            ],
            3,
        );
    }
    push(
        "triangle-cone".to_string(),
        vec![
            IntVector::from_i64(&[1, 0, 0]),
            IntVector::from_i64(&[0, 1, 0]),
            IntVector::from_i64(&[-1, -2, 3]),
        ],
        3,
    );
    push(
        "cone-over-2-simplex".to_string(),
        vec![
            IntVector::from_i64(&[1, 0, 0]),
            IntVector::from_i64(&[0, 1, 0]),
            IntVector::from_i64(&[-1, -1, 2]),
        ],
        3,
    );
    push(
        "cone-over-hirzebruch".to_string(),
        vec![
            IntVector::from_i64(&[1, 0, 0]),
            IntVector::from_i64(&[0, 1, 0]),
            IntVector::from_i64(&[0, -1, 2]),
            IntVector::from_i64(&[-1, -1, 5]),
        ],
        3,
    );
    pool
}

/// Integral Delzant polytopes the cross-validation harness dilates and
/// multiplies.
pub fn delzant_polytope_pool() -> Vec<(String, RationalPolytope)> {
    let mut pool: Vec<(String, RationalPolytope)> = Vec::new();

    for n in 1..=3usize {
        for k in 1..=5i64 {
            let (p, _) = unit_simplex(n).dilate(&BigInt::from(k)).expect("dilation");
            pool.push((format!("simplex-{n}-dilation-{k}"), p));
        }
    }
    for p in [2i64, 3, 5] {
        pool.push((format!("segment-{p}"), segment(&BigInt::from(p))));
    }
    for (a, b) in [(2i64, 3i64), (2, 4), (3, 3)] {
        let (prod, _) = segment(&BigInt::from(a))
            .product(&segment(&BigInt::from(b)))
            .expect("product");
        pool.push((format!("rectangle-{a}x{b}"), prod));
    }
    let (prism, _) = unit_simplex(2)
        .dilate(&BigInt::from(2))
        .expect("dilation")
        .0
        .product(&segment(&BigInt::from(2)))
        .expect("product");
    pool.push(("prism-2simplex-x-segment".to_string(), prism));
    for (twist, height, width) in [(1i64, 2i64, 5i64), (2, 1, 4), (1, 3, 7), (3, 2, 8)] {
        let (p, _) = hirzebruch_trapezoid(twist, height, width).expect("trapezoid");
        pool.push((format!("hirzebruch-{twist}-{height}-{width}"), p));
    }
    pool
}

pub struct CorpusRun {
    pub text: String,
    pub passed: usize,
    pub failed: usize,
}

/// Recomputes every corpus entry and compares against expectations; with
/// `emit`, also writes each document to `<dir>/<label>.json`.
pub fn run_corpus(emit: Option<&Path>) -> Result<CorpusRun> {
    let entries = corpus();
    let mut text = String::new();
    let mut passed = 0;
    let mut failed = 0;
    for e in &entries {
        match compute_document(&e.document, &Method::ALL) {
            Ok(report) => {
                let ok = report.class_label == e.expected_class
                    && report.pi1 == e.expected_pi1
                    && report.agrees();
                if ok {
                    passed += 1;
                } else {
                    failed += 1;
                }
                let _ = writeln!(
                    text,
                    "{} {:<24} class {:<24} pi1 {}",
                    if ok { "PASS" } else { "FAIL" },
                    e.label,
                    report.class_label,
                    report.pi1
                );
                if !ok {
                    let _ = writeln!(
                        text,
                        "     expected class {} pi1 {}",
                        e.expected_class, e.expected_pi1
                    );
                }
            }
            Err(err) => {
                failed += 1;
                let _ = writeln!(text, "FAIL {:<24} error: {err}", e.label);
            }
        }
    }
    let _ = writeln!(text, "corpus: {passed} pass, {failed} fail");

    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        for e in &entries {
            fs::write(dir.join(format!("{}.json", e.label)), to_json(&e.document))?;
        }
        let _ = writeln!(text, "wrote {} documents to {}", entries.len(), dir.display());
    }

    Ok(CorpusRun {
        text,
        passed,
        failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_corpus_entry_passes() {
        let run = run_corpus(None).unwrap();
        assert_eq!(run.failed, 0, "corpus failures:\n{}", run.text);
        assert_eq!(run.passed, corpus().len());
    }

    #[test]
    fn corpus_labels_are_unique() {
        let entries = corpus();
        let mut labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), entries.len());
    }

    #[test]
    fn cone_pool_is_good_and_polytope_pool_is_delzant() {
        for (label, cone) in good_cone_pool() {
            let v = cone.validate();
            assert!(v.strictly_convex && v.good, "pool cone {label} must be good");
        }
        for (label, p) in delzant_polytope_pool() {
            assert!(p.is_integral(), "pool polytope {label} must be integral");
            assert!(p.is_delzant().0, "pool polytope {label} must be Delzant");
        }
    }
}
