//! Analysis pipeline behind the command-line tool: parse a JSON instance,
//! validate it, build the pair ring, run the spectral analysis and the
//! oracle cross-check, and emit a deterministic JSON report.
//!
//! Input schema:
//!
//! ```text
//! {"group": [n1, ...], "c": [{"exp": [a1, ...], "coeff": int}, ...], "name": "optional"}
//! {"group": [n1, ...], "semisimple": true}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, GroupRingElem};
use crate::instances::{self, group_ring_name, InstanceDescriptor};
use crate::json::{self, cyclo_display_json, element_json, group_ring_json_with, ToJson};
use crate::oracle;
use crate::pcr::PairElem;
use crate::spectral::{self, FourierPair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

const CONVENTION: &str = "characters and group elements are both labelled by exponent tuples; \
the character b sends K^a to zeta_N^(sum_i (N/n_i) a_i b_i) with zeta_N = exp(2 pi i/N), N = lcm(n_i); \
support_F lists the labels where the transform of c is nonzero, which is also B_c";

#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub instance: InstanceDescriptor,
    pub verify: bool,
    pub emit_idempotents: bool,
    pub emit_nilradical: bool,
    pub output: Option<PathBuf>,
}

impl AnalysisRequest {
    pub fn new(instance: InstanceDescriptor) -> Self {
        AnalysisRequest {
            instance,
            verify: true,
            emit_idempotents: false,
            emit_nilradical: false,
            output: None,
        }
    }
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// Parses and validates an instance document. Terms with repeated exponents
/// are summed.
pub fn parse_input(document: &str) -> Result<AnalysisRequest> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema("", "expected a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "group" | "c" | "name" | "semisimple") {
            return Err(schema(format!("/{key}"), "unknown field"));
        }
    }
    let orders = json::parse_usize_array(
        obj.get("group").ok_or_else(|| schema("/group", "missing"))?,
        "/group",
    )?;
    let group = AbelianGroup::new(&orders).map_err(|e| schema("/group", e.to_string()))?;
    let semisimple = match obj.get("semisimple") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(schema("/semisimple", "expected a boolean")),
    };
    let mut instance = if semisimple {
        if obj.contains_key("c") {
            return Err(schema("/c", "a semisimple instance has no canonical element"));
        }
        instances::dual_group_algebra(&orders)?
    } else {
        let c = obj
            .get("c")
            .ok_or_else(|| schema("/c", "missing"))?
            .as_array()
            .ok_or_else(|| schema("/c", "expected an array of terms"))?;
        let mut terms = Vec::with_capacity(c.len());
        for (i, t) in c.iter().enumerate() {
            let p = format!("/c/{i}");
            let t = t.as_object().ok_or_else(|| schema(&p, "expected a term object"))?;
            for key in t.keys() {
                if key != "exp" && key != "coeff" {
                    return Err(schema(format!("{p}/{key}"), "unknown field"));
                }
            }
            let exp = json::parse_usize_array(
                t.get("exp").ok_or_else(|| schema(format!("{p}/exp"), "missing"))?,
                &format!("{p}/exp"),
            )?;
            let e = group
                .element(&exp)
                .map_err(|e| schema(format!("{p}/exp"), e.to_string()))?;
            let coeff = json::parse_bigint(
                t.get("coeff").ok_or_else(|| schema(format!("{p}/coeff"), "missing"))?,
                &format!("{p}/coeff"),
            )?;
            terms.push((e, coeff));
        }
        instances::custom_element(GroupRingElem::from_terms(&group, terms)?)?
    };
    match obj.get("name") {
        None => {}
        Some(Value::String(s)) => instance.name = s.clone(),
        Some(_) => return Err(schema("/name", "expected a string")),
    }
    Ok(AnalysisRequest::new(instance))
}

/// A finished report and whether every requested verification passed.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub report: Value,
    pub verified: bool,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.verified {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }

    /// Pretty-printed report with a trailing newline.
    pub fn render(&self) -> String {
        render(&self.report)
    }
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cyclo_group_ring_json(x: &GroupRingElem<CycloNum>) -> Value {
    group_ring_json_with(x, cyclo_display_json)
}

fn cyclo_pair_json(x: &PairElem<CycloNum>) -> Value {
    json!({"s": cyclo_group_ring_json(x.s_part()), "t": cyclo_group_ring_json(x.t_part())})
}

fn fourier_vector_json(group: &AbelianGroup, v: &[CycloNum]) -> Value {
    let entries: Vec<Value> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| json!({"label": element_json(&group.element_at(i)), "value": cyclo_display_json(x)}))
        .collect();
    json!(entries)
}

fn family_json(group: &AbelianGroup, fourier: &[FourierPair], elems: &[PairElem<CycloNum>]) -> Value {
    let items: Vec<Value> = fourier
        .iter()
        .zip(elems)
        .map(|(f, e)| {
            json!({
                "fourier": {"s": fourier_vector_json(group, &f.s), "t": fourier_vector_json(group, &f.t)},
                "group_ring": cyclo_pair_json(e),
            })
        })
        .collect();
    json!(items)
}

fn labels_json(elems: &[GroupElement]) -> Value {
    json!(elems.iter().map(element_json).collect::<Vec<_>>())
}

/// Runs the full pipeline for one request.
pub fn run(request: &AnalysisRequest) -> Result<RunOutcome> {
    let inst = &request.instance;
    let group = &inst.group;
    let Some(ring) = inst.ring() else {
        let report = json!({
            "instance": {"name": inst.name, "group": group.orders()},
            "s": group.size(),
            "semisimple": true,
            "K0p": group_ring_name(group),
        });
        return Ok(RunOutcome {
            report,
            verified: true,
        });
    };

    let analysis = spectral::analyze(ring);
    let spec = &analysis.spectrum;
    let mut report = json!({
        "instance": {
            "name": inst.name,
            "group": group.orders(),
            "c": ring.c().to_json(),
        },
        "s": spec.s(),
        "r": spec.r(),
        "decomposition": analysis.decomposition.to_string(),
        "conventions": CONVENTION,
        "support_F": labels_json(&spec.support()),
        "B_c": labels_json(spec.b_c().elements()),
        "fourier_c": spec.fourier_c().iter().map(cyclo_display_json).collect::<Vec<_>>(),
        "normalized_c": {
            "c_prime": cyclo_group_ring_json(&analysis.normalization.c_prime),
            "unit_fourier": analysis.normalization.unit_fourier.iter().map(cyclo_display_json).collect::<Vec<_>>(),
            "unit": cyclo_group_ring_json(&analysis.normalization.unit),
        },
    });
    let mut verified = true;
    if let Some(golden) = inst.expected {
        let matches = golden.r == spec.r() && golden.decomposition == analysis.decomposition;
        verified &= matches;
        report["expected"] = json!({
            "r": golden.r,
            "decomposition": golden.decomposition.to_string(),
            "matches": matches,
        });
    }
    if request.emit_idempotents {
        report["idempotents"] = family_json(group, &analysis.idempotents_fourier, &analysis.idempotents);
    }
    if request.emit_nilradical {
        report["nilradical"] = family_json(group, &analysis.nilpotents_fourier, &analysis.nilpotents);
    }
    if request.verify {
        let verdict = oracle::verify(ring, &analysis.nilpotents)?;
        verified &= verdict.passed() && verdict.radical_dim == spec.s() - spec.r();
        report["oracle"] = json!({
            "associative": verdict.associative,
            "matches_pair_ring": verdict.matches_pair_ring,
            "radical_dim": verdict.radical_dim,
            "radical_matches_spectral": verdict.radical_matches_spectral,
        });
    }
    Ok(RunOutcome { report, verified })
}

/// Structured error object for reports.
pub fn error_json(e: &Error) -> Value {
    let mut v = json!({"kind": e.kind(), "message": e.to_string()});
    if let Error::Schema { pointer, .. } = e {
        v["pointer"] = json!(pointer);
    }
    json!({"error": v})
}

/// Result of analysing every `*.json` file of a directory.
#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub report: Value,
    pub exit_code: i32,
}

pub fn batch(dir: &Path, request_template: impl Fn(InstanceDescriptor) -> AnalysisRequest) -> std::io::Result<BatchOutcome> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut entries = Vec::with_capacity(files.len());
    let mut exit_code = EXIT_OK;
    for path in files {
        let file = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let text = fs::read_to_string(&path)?;
        let outcome = parse_input(&text).and_then(|req| run(&request_template(req.instance)));
        match outcome {
            Ok(o) => {
                exit_code = exit_code.max(o.exit_code());
                entries.push(json!({"file": file, "report": o.report}));
            }
            Err(e) => {
                exit_code = exit_code.max(EXIT_VALIDATION);
                entries.push(json!({"file": file, "error": error_json(&e)["error"]}));
            }
        }
    }
    Ok(BatchOutcome {
        report: json!({"reports": entries}),
        exit_code,
    })
}

/// `c` given as dense integer coefficients, handy for tests and bindings.
pub fn instance_from_dense(orders: &[usize], dense: &[i64]) -> Result<InstanceDescriptor> {
    let group = AbelianGroup::new(orders)?;
    let c = GroupRingElem::from_dense(&group, dense.iter().map(|&v| BigInt::from(v)).collect())?;
    instances::custom_element(c)
}
