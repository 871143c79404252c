//! JSON input documents, report rendering, the built-in corpus, and the
//! randomized cross-validation harness behind the `contact-pi1` binary.
//!
//! Documents are strict: unknown fields are rejected and every number is
//! exact (integers, or fraction strings like "-3/2" for polytope offsets).
//! Reports use stable field names and deterministic ordering so identical
//! inputs produce byte-identical output.

pub mod corpus;
pub mod crossval;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{ConeValidation, MomentCone};
use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::pi1::{
    compute_pi1_bundle, compute_pi1_cone, compute_pi1_polytope, CrossCheck, Method,
    MethodOutcome, Pi1Report,
};
use crate::polytope::RationalPolytope;

/// Exact rational that serializes as a JSON integer when possible and as a
/// fraction string "p/q" otherwise. Floats are rejected on input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction(pub BigRational);

pub fn parse_fraction(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (text, None),
    };
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("invalid integer {t:?}: {e}")))
    };
    let numer = parse_int(numer_text)?;
    match denom_text {
        None => Ok(BigRational::from(numer)),
        Some(d) => {
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(n) = self.0.numer().to_i64() {
                return s.serialize_i64(n);
            }
        }
        if self.0.is_integer() {
            s.serialize_str(&self.0.numer().to_string())
        } else {
            s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
        }
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct FractionVisitor;
        impl serde::de::Visitor<'_> for FractionVisitor {
            type Value = Fraction;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("an integer or an exact fraction string like \"-3/2\"")
            }

            fn visit_i64<E: serde::de::Error>(
                self,
                v: i64,
            ) -> std::result::Result<Fraction, E> {
                Ok(Fraction(BigRational::from(BigInt::from(v))))
            }

            fn visit_u64<E: serde::de::Error>(
                self,
                v: u64,
            ) -> std::result::Result<Fraction, E> {
                Ok(Fraction(BigRational::from(BigInt::from(v))))
            }

            fn visit_str<E: serde::de::Error>(
                self,
                v: &str,
            ) -> std::result::Result<Fraction, E> {
                parse_fraction(v)
                    .map(Fraction)
                    .map_err(|e| E::custom(e.to_string()))
            }
        }
        d.deserialize_any(FractionVisitor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Cone,
    Polytope,
    T3Bundle,
}

impl Kind {
    pub fn token(self) -> &'static str {
        match self {
            Kind::Cone => "cone",
            Kind::Polytope => "polytope",
            Kind::T3Bundle => "t3_bundle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceDoc {
    pub normal: Vec<i64>,
    pub offset: Fraction,
}

/// One problem instance. `kind` decides which fields are required: cones
/// take `ambient_dim` + `normals` (plus `bundle_class` for the whole-space
/// dimension-3 cone and an optional `reeb` vector for slicing), polytopes
/// take `ambient_dim` + `halfspaces`, bundles take `bundle_class` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normals: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfspaceDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bundle_class: Option<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reeb: Option<Vec<i64>>,
}

impl InputDocument {
    pub fn cone(label: &str, ambient_dim: usize, normals: &[&[i64]]) -> InputDocument {
        InputDocument {
            kind: Kind::Cone,
            label: Some(label.to_string()),
            ambient_dim: Some(ambient_dim),
            normals: Some(normals.iter().map(|r| r.to_vec()).collect()),
            halfspaces: None,
            bundle_class: None,
            reeb: None,
        }
    }

    pub fn polytope(
        label: &str,
        ambient_dim: usize,
        halfspaces: &[(&[i64], BigRational)],
    ) -> InputDocument {
        InputDocument {
            kind: Kind::Polytope,
            label: Some(label.to_string()),
            ambient_dim: Some(ambient_dim),
            normals: None,
            halfspaces: Some(
                halfspaces
                    .iter()
                    .map(|(normal, offset)| HalfspaceDoc {
                        normal: normal.to_vec(),
                        offset: Fraction(offset.clone()),
                    })
                    .collect(),
            ),
            bundle_class: None,
            reeb: None,
        }
    }

    pub fn bundle(label: &str, class: [i64; 3]) -> InputDocument {
        InputDocument {
            kind: Kind::T3Bundle,
            label: Some(label.to_string()),
            ambient_dim: None,
            normals: None,
            halfspaces: None,
            bundle_class: Some(class),
            reeb: None,
        }
    }
}

/// Parses one document or a batch array; returns the documents plus whether
/// the input was an array (batch output mirrors the input shape).
pub fn parse_documents(text: &str) -> Result<(Vec<InputDocument>, bool)> {
    let trimmed = text.trim_start();
    let map_err = |e: serde_json::Error| Error::Parse(e.to_string());
    if trimmed.starts_with('[') {
        let docs: Vec<InputDocument> = serde_json::from_str(text).map_err(map_err)?;
        for doc in &docs {
            check_document_shape(doc)?;
        }
        Ok((docs, true))
    } else {
        let doc: InputDocument = serde_json::from_str(text).map_err(map_err)?;
        check_document_shape(&doc)?;
        Ok((vec![doc], false))
    }
}

/// Field/kind consistency beyond what serde enforces.
pub fn check_document_shape(doc: &InputDocument) -> Result<()> {
    let missing = |field: &str| {
        Error::Parse(format!(
            "{} document requires the {field} field",
            doc.kind.token()
        ))
    };
    let forbidden = |field: &str| {
        Error::Parse(format!(
            "{} document does not take the {field} field",
            doc.kind.token()
        ))
    };
    match doc.kind {
        Kind::Cone => {
            if doc.ambient_dim.is_none() {
                return Err(missing("ambient_dim"));
            }
            if doc.normals.is_none() {
                return Err(missing("normals"));
            }
            if doc.halfspaces.is_some() {
                return Err(forbidden("halfspaces"));
            }
        }
        Kind::Polytope => {
            if doc.ambient_dim.is_none() {
                return Err(missing("ambient_dim"));
            }
            if doc.halfspaces.is_none() {
                return Err(missing("halfspaces"));
            }
            if doc.normals.is_some() {
                return Err(forbidden("normals"));
            }
            if doc.bundle_class.is_some() {
                return Err(forbidden("bundle_class"));
            }
            if doc.reeb.is_some() {
                return Err(forbidden("reeb"));
            }
        }
        Kind::T3Bundle => {
            if doc.bundle_class.is_none() {
                return Err(missing("bundle_class"));
            }
            for (name, present) in [
                ("ambient_dim", doc.ambient_dim.is_some()),
                ("normals", doc.normals.is_some()),
                ("halfspaces", doc.halfspaces.is_some()),
                ("reeb", doc.reeb.is_some()),
            ] {
                if present {
                    return Err(forbidden(name));
                }
            }
        }
    }
    Ok(())
}

/// A document lifted into domain values, plus construction warnings.
pub enum BuiltInput {
    Cone {
        cone: MomentCone,
        bundle_class: Option<[BigInt; 3]>,
        reeb: Option<IntVector>,
    },
    Polytope(RationalPolytope),
    Bundle([BigInt; 3]),
}

pub fn build_input(doc: &InputDocument) -> Result<(BuiltInput, Vec<String>)> {
    check_document_shape(doc)?;
    match doc.kind {
        Kind::Cone => {
            let dim = doc.ambient_dim.expect("shape checked");
            let normals: Vec<IntVector> = doc
                .normals
                .as_ref()
                .expect("shape checked")
                .iter()
                .map(|row| IntVector::from_i64(row))
                .collect();
            let (cone, warnings) = MomentCone::build(normals, dim)?;
            let reeb = match &doc.reeb {
                None => None,
                Some(entries) => {
                    if entries.len() != dim {
                        return Err(Error::Parse(format!(
                            "reeb vector has {} entries, expected {dim}",
                            entries.len()
                        )));
                    }
                    Some(IntVector::from_i64(entries))
                }
            };
            let bundle_class = doc.bundle_class.map(|c| c.map(BigInt::from));
            Ok((
                BuiltInput::Cone {
                    cone,
                    bundle_class,
                    reeb,
                },
                warnings,
            ))
        }
        Kind::Polytope => {
            let dim = doc.ambient_dim.expect("shape checked");
            let halfspaces: Vec<(IntVector, BigRational)> = doc
                .halfspaces
                .as_ref()
                .expect("shape checked")
                .iter()
                .map(|h| (IntVector::from_i64(&h.normal), h.offset.0.clone()))
                .collect();
            let (polytope, warnings) = RationalPolytope::from_halfspaces(dim, halfspaces)?;
            Ok((BuiltInput::Polytope(polytope), warnings))
        }
        Kind::T3Bundle => {
            let class = doc.bundle_class.expect("shape checked").map(BigInt::from);
            Ok((BuiltInput::Bundle(class), Vec::new()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessFailureOut {
    pub facet_indices: Vec<usize>,
    pub codim: usize,
    pub smith_invariants: Vec<String>,
}

/// The validation block of every report: cone fields when a cone was seen,
/// polytope fields when a polytope (input or derived slice) was seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationOut {
    pub strictly_convex: Option<bool>,
    pub good: Option<bool>,
    pub lineality_dim: Option<usize>,
    pub delzant: Option<bool>,
    pub integral: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub goodness_failures: Vec<GoodnessFailureOut>,
}

impl ValidationOut {
    fn empty() -> ValidationOut {
        ValidationOut {
            strictly_convex: None,
            good: None,
            lineality_dim: None,
            delzant: None,
            integral: None,
            goodness_failures: Vec::new(),
        }
    }

    fn from_parts(
        cone: Option<&ConeValidation>,
        integral: Option<bool>,
        delzant: Option<bool>,
    ) -> ValidationOut {
        let mut out = ValidationOut::empty();
        if let Some(v) = cone {
            out.strictly_convex = Some(v.strictly_convex);
            out.good = Some(v.good);
            out.lineality_dim = Some(v.lineality_dim);
            out.goodness_failures = v
                .failures
                .iter()
                .map(|f| GoodnessFailureOut {
                    facet_indices: f.facet_indices.clone(),
                    codim: f.codim,
                    smith_invariants: f
                        .smith_invariants
                        .iter()
                        .map(|x| x.to_string())
                        .collect(),
                })
                .collect();
        }
        out.integral = integral;
        out.delzant = delzant;
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodOut {
    Result(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CrossCheckOut {
    Agree,
    Disagree(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbifoldOut {
    pub orders: Vec<String>,
    pub m_lcm: String,
}

/// Full compute report: input echo, validation, class, rendered groups,
/// per-method outcomes (keyed by method token), cross-check and warnings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputReport {
    pub input: InputDocument,
    pub validation: ValidationOut,
    pub class_label: String,
    pub pi1: String,
    pub pi2: Option<String>,
    pub methods: BTreeMap<String, MethodOut>,
    pub cross_check: CrossCheckOut,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbifold: Option<OrbifoldOut>,
}

impl OutputReport {
    fn new(doc: &InputDocument, report: &Pi1Report, build_warnings: Vec<String>) -> OutputReport {
        let mut warnings = build_warnings;
        warnings.extend(report.warnings.iter().cloned());
        let methods = report
            .methods
            .iter()
            .map(|r| {
                let out = match &r.outcome {
                    MethodOutcome::Computed(g) => MethodOut::Result(g.to_string()),
                    MethodOutcome::Skipped { reason } => MethodOut::Skipped(reason.clone()),
                };
                (r.method.token().to_string(), out)
            })
            .collect();
        OutputReport {
            input: doc.clone(),
            validation: ValidationOut::from_parts(
                report.cone_validation.as_ref(),
                report.polytope_integral,
                report.polytope_delzant,
            ),
            class_label: report.class.to_string(),
            pi1: report.pi1.to_string(),
            pi2: report.pi2.as_ref().map(|g| g.to_string()),
            methods,
            cross_check: match &report.cross_check {
                CrossCheck::Agree => CrossCheckOut::Agree,
                CrossCheck::Disagree(d) => CrossCheckOut::Disagree(d.clone()),
            },
            warnings,
            orbifold: report.orbifold.as_ref().map(|o| OrbifoldOut {
                orders: o.orders.iter().map(|x| x.to_string()).collect(),
                m_lcm: o.m_lcm.to_string(),
            }),
        }
    }

    pub fn agrees(&self) -> bool {
        self.cross_check == CrossCheckOut::Agree
    }
}

/// Runs the full pipeline on one document.
pub fn compute_document(doc: &InputDocument, methods: &[Method]) -> Result<OutputReport> {
    let (built, build_warnings) = build_input(doc)?;
    let report = match &built {
        BuiltInput::Cone {
            cone,
            bundle_class,
            reeb,
        } => compute_pi1_cone(cone, bundle_class.as_ref(), reeb.as_ref(), methods)?,
        BuiltInput::Polytope(p) => compute_pi1_polytope(p, methods)?,
        BuiltInput::Bundle(class) => compute_pi1_bundle(class, methods)?,
    };
    Ok(OutputReport::new(doc, &report, build_warnings))
}

/// Validation-only report: construction verdicts without any pi_1 run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub input: InputDocument,
    pub validation: ValidationOut,
    pub class_label: Option<String>,
    pub warnings: Vec<String>,
    pub ok: bool,
}

pub fn validate_document(doc: &InputDocument) -> Result<ValidationReport> {
    let (built, warnings) = build_input(doc)?;
    let (validation, class_label) = match &built {
        BuiltInput::Cone { cone, .. } => (
            ValidationOut::from_parts(Some(&cone.validate()), None, None),
            Some(cone.classify().to_string()),
        ),
        BuiltInput::Polytope(p) => {
            let integer_offsets = p.halfspaces().iter().all(|(_, l)| l.is_integer());
            let class = if integer_offsets {
                Some(p.cone_over_polytope()?.classify().to_string())
            } else {
                None
            };
            (
                ValidationOut::from_parts(None, Some(p.is_integral()), Some(p.is_delzant().0)),
                class,
            )
        }
        BuiltInput::Bundle(_) => (
            ValidationOut::empty(),
            Some(crate::cone::ManifoldClass::PrincipalT3BundleOverS2.to_string()),
        ),
    };
    Ok(ValidationReport {
        input: doc.clone(),
        validation,
        class_label,
        warnings,
        ok: true,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn push_validation_line(out: &mut String, v: &ValidationOut) {
    let mut parts = Vec::new();
    if let Some(x) = v.strictly_convex {
        parts.push(format!("strictly_convex={x}"));
    }
    if let Some(x) = v.good {
        parts.push(format!("good={x}"));
    }
    if let Some(x) = v.lineality_dim {
        parts.push(format!("lineality_dim={x}"));
    }
    if let Some(x) = v.integral {
        parts.push(format!("integral={x}"));
    }
    if let Some(x) = v.delzant {
        parts.push(format!("delzant={x}"));
    }
    if !parts.is_empty() {
        let _ = writeln!(out, "validation:  {}", parts.join(" "));
    }
    for f in &v.goodness_failures {
        let _ = writeln!(
            out,
            "  goodness failure: facets {:?}, codim {}, smith invariants [{}]",
            f.facet_indices,
            f.codim,
            f.smith_invariants.join(", ")
        );
    }
}

pub fn render_text(report: &OutputReport) -> String {
    let mut out = String::new();
    if let Some(label) = &report.input.label {
        let _ = writeln!(out, "label:       {label}");
    }
    let _ = writeln!(out, "kind:        {}", report.input.kind.token());
    let _ = writeln!(out, "class:       {}", report.class_label);
    let _ = writeln!(out, "pi1:         {}", report.pi1);
    if let Some(pi2) = &report.pi2 {
        let _ = writeln!(out, "pi2:         {pi2}");
    }
    push_validation_line(&mut out, &report.validation);
    let _ = writeln!(out, "methods:");
    for (token, outcome) in &report.methods {
        match outcome {
            MethodOut::Result(g) => {
                let _ = writeln!(out, "  {token:<8} {g}");
            }
            MethodOut::Skipped(reason) => {
                let _ = writeln!(out, "  {token:<8} skipped: {reason}");
            }
        }
    }
    match &report.cross_check {
        CrossCheckOut::Agree => {
            let _ = writeln!(out, "cross-check: Agree");
        }
        CrossCheckOut::Disagree(details) => {
            let _ = writeln!(out, "cross-check: DISAGREE ({details})");
        }
    }
    if let Some(orbifold) = &report.orbifold {
        let _ = writeln!(
            out,
            "orbifold:    orders [{}], m_lcm {}",
            orbifold.orders.join(", "),
            orbifold.m_lcm
        );
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning:     {w}");
    }
    out
}

pub fn render_validation_text(report: &ValidationReport) -> String {
    let mut out = String::new();
    if let Some(label) = &report.input.label {
        let _ = writeln!(out, "label:       {label}");
    }
    let _ = writeln!(out, "kind:        {}", report.input.kind.token());
    if let Some(class) = &report.class_label {
        let _ = writeln!(out, "class:       {class}");
    }
    push_validation_line(&mut out, &report.validation);
    for w in &report.warnings {
        let _ = writeln!(out, "warning:     {w}");
    }
    let _ = writeln!(out, "ok:          {}", report.ok);
    out
}

/// Parses the --method flag: a single token or "all".
pub fn parse_method_selection(text: &str) -> Result<Vec<Method>> {
    if text == "all" {
        return Ok(Method::ALL.to_vec());
    }
    Method::from_token(text).map(|m| vec![m]).ok_or_else(|| {
        Error::Parse(format!(
            "unknown method {text:?}; expected thmB, lerman, thmC or all"
        ))
    })
}
