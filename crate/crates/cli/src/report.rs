//! JSON and text renderings of the reports.
//!
//! JSON goes through `serde_json::Value`, whose maps are key-sorted, so the
//! output is stable regardless of struct field order.

use std::fmt::Write;

use edgering::lattice::FacetCheck;
use edgering::{ClassificationReport, FacetDescriptor, Graph, OddCycle, SupportForm};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
}

impl From<FacetDescriptor> for FacetJson {
    fn from(f: FacetDescriptor) -> Self {
        match f {
            FacetDescriptor::RegularVertex(i) => {
                FacetJson { kind: "regular_vertex".into(), vertex: Some(i + 1), set: None }
            }
            FacetDescriptor::Fundamental(t) => {
                FacetJson { kind: "fundamental".into(), vertex: None, set: Some(t.labels()) }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub input: String,
    pub d: usize,
    pub n: usize,
    pub bipartite: bool,
    pub normal: bool,
    pub r1: bool,
    pub r1_violations: Vec<FacetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub occ_violation: Option<[Vec<usize>; 2]>,
    pub notes: String,
}

impl ClassifyJson {
    pub fn new(input: &str, g: &Graph, r: &ClassificationReport) -> Self {
        ClassifyJson {
            input: input.to_string(),
            d: g.order(),
            n: g.size(),
            bipartite: r.bipartite,
            normal: r.normal,
            r1: r.r1,
            r1_violations: r.r1_violations.iter().copied().map(FacetJson::from).collect(),
            occ_violation: r.occ_violation.as_ref().map(|(a, b)| [a.labels(), b.labels()]),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub facet: FacetJson,
    pub coeffs: Vec<i64>,
    pub denom: i64,
}

impl FormJson {
    pub fn new(facet: FacetDescriptor, form: &SupportForm) -> Self {
        FormJson { facet: facet.into(), coeffs: form.coeffs().to_vec(), denom: form.denom() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetsJson {
    pub input: String,
    pub d: usize,
    pub n: usize,
    pub facets: Vec<FormJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFacetJson {
    pub facet: FacetJson,
    pub coeffs: Vec<i64>,
    pub denom: i64,
    pub condition_one: bool,
    pub condition_two: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub input: String,
    pub d: usize,
    pub n: usize,
    pub facets: Vec<OracleFacetJson>,
    pub r1: bool,
    pub r1_violations: Vec<FacetJson>,
    pub criterion_r1: bool,
    pub criterion_violations: Vec<FacetJson>,
    pub agreement: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports are plain data");
    serde_json::to_string_pretty(&value).expect("values always render")
}

fn cycle_text(c: &OddCycle) -> String {
    c.to_string()
}

fn facet_list(fs: &[FacetDescriptor]) -> String {
    if fs.is_empty() {
        "none".to_string()
    } else {
        fs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn coeff_text(form: &SupportForm) -> String {
    let parts: Vec<String> = form.coeffs().iter().map(ToString::to_string).collect();
    format!("coeffs=[{}] denom={}", parts.join(","), form.denom())
}

pub fn classify_text(input: &str, g: &Graph, r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "d: {}", g.order());
    let _ = writeln!(out, "n: {}", g.size());
    let _ = writeln!(out, "bipartite: {}", r.bipartite);
    let _ = writeln!(out, "normal: {}", r.normal);
    let _ = writeln!(out, "R1: {}", r.r1);
    let _ = writeln!(out, "r1_violations: {}", facet_list(&r.r1_violations));
    match &r.occ_violation {
        Some((a, b)) => {
            let _ = writeln!(out, "occ_violation: {} {}", cycle_text(a), cycle_text(b));
        }
        None => {
            let _ = writeln!(out, "occ_violation: none");
        }
    }
    let _ = writeln!(out, "notes: {}", r.notes);
    out
}

pub fn facets_text(input: &str, rows: &[(FacetDescriptor, SupportForm)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "facets: {}", rows.len());
    let width = rows.iter().map(|(f, _)| f.to_string().len()).max().unwrap_or(0);
    for (f, form) in rows {
        let _ = writeln!(out, "{:<width$}  {}", f.to_string(), coeff_text(form));
    }
    out
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

pub fn oracle_text(
    input: &str,
    checks: &[FacetCheck],
    oracle_violations: &[FacetDescriptor],
    criterion_holds: bool,
    agreement: bool,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    let width = checks.iter().map(|c| c.facet.to_string().len()).max().unwrap_or(0);
    for c in checks {
        let _ = writeln!(
            out,
            "{:<width$}  (i): {}  (ii): {}",
            c.facet.to_string(),
            pass(c.condition_one),
            pass(c.condition_two)
        );
    }
    let _ = writeln!(out, "verdict: R1 {}", oracle_violations.is_empty());
    let _ = writeln!(out, "violations: {}", facet_list(oracle_violations));
    let _ = writeln!(out, "criterion: R1 {criterion_holds}");
    let _ = writeln!(out, "agreement: {}", if agreement { "OK" } else { "MISMATCH" });
    out
}

pub fn oracle_json(
    input: &str,
    g: &Graph,
    checks: &[FacetCheck],
    criterion: &edgering::R1Verdict,
) -> OracleJson {
    let violations: Vec<FacetDescriptor> =
        checks.iter().filter(|c| !c.passes()).map(|c| c.facet).collect();
    OracleJson {
        input: input.to_string(),
        d: g.order(),
        n: g.size(),
        facets: checks
            .iter()
            .map(|c| OracleFacetJson {
                facet: c.facet.into(),
                coeffs: c.form.coeffs().to_vec(),
                denom: c.form.denom(),
                condition_one: c.condition_one,
                condition_two: c.condition_two,
            })
            .collect(),
        r1: violations.is_empty(),
        agreement: violations == criterion.violations,
        r1_violations: violations.into_iter().map(FacetJson::from).collect(),
        criterion_r1: criterion.holds,
        criterion_violations: criterion.violations.iter().copied().map(FacetJson::from).collect(),
    }
}
