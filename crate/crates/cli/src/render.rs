use std::fmt::Write as _;

use credal_af::af::format_set;
use credal_af::io::{self, FrameworkDocument};
use credal_af::{ArgumentId, BoundsCase, Extension, RationalityViolation, Semantics};
use serde::Serialize;

use crate::commands::{ReferenceRow, Row};

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn interval(lower: f64, upper: f64) -> String {
    format!("{lower:.6}  {upper:.6}")
}

pub fn extension_list(exts: &[Extension]) -> String {
    if exts.is_empty() {
        return "no extensions\n".into();
    }
    exts.iter().map(|e| format!("{e}\n")).collect()
}

#[derive(Serialize)]
struct MembersOnly<'a> {
    members: Vec<&'a ArgumentId>,
}

#[derive(Serialize)]
struct ExtensionListJson<'a> {
    semantics: Semantics,
    extensions: Vec<MembersOnly<'a>>,
}

pub fn extension_list_json(semantics: Semantics, exts: &[Extension]) -> String {
    to_json(&ExtensionListJson {
        semantics,
        extensions: exts
            .iter()
            .map(|e| MembersOnly {
                members: e.members().iter().collect(),
            })
            .collect(),
    })
}

pub fn bounds_table(semantics: Option<Semantics>, rows: &[Row], ranked: bool) -> String {
    let mut out = String::new();
    if ranked {
        out.push_str("# heuristic ranking: descending midpoint, then members (respects interval dominance)\n");
    }
    match semantics {
        Some(sem) => {
            let _ = writeln!(out, "semantics: {sem}");
        }
        None => out.push_str("explicit set\n"),
    }
    if rows.is_empty() {
        out.push_str("no extensions\n");
        return out;
    }
    let labels: Vec<String> = rows.iter().map(|r| r.extension.to_string()).collect();
    let width = labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(0)
        .max("extension".len());
    let oracle = rows.iter().any(|r| r.oracle.is_some());

    let mut header = format!(
        "{:<width$}  {:<8}  {:<8}  {:<9}",
        "extension", "lower", "upper", "case"
    );
    if oracle {
        header.push_str("  oracle_lower  oracle_upper  check");
    }
    out.push_str(header.trim_end());
    out.push('\n');

    for (row, label) in rows.iter().zip(&labels) {
        let mut line = format!("{label:<width$}  ");
        match &row.result {
            Ok(r) => {
                let _ = write!(
                    line,
                    "{}  {:<9}",
                    interval(r.interval.lower(), r.interval.upper()),
                    r.case.as_str()
                );
            }
            Err(e) => {
                let _ = write!(line, "error: {e}");
            }
        }
        if let Some(check) = &row.oracle {
            match &check.result {
                Ok(o) => {
                    let _ = write!(
                        line,
                        "  {:<12}  {:<12}",
                        format!("{:.6}", o.lower()),
                        format!("{:.6}", o.upper())
                    );
                }
                Err(_) => {
                    let _ = write!(line, "  {:<12}  {:<12}", "error", "error");
                }
            }
            line.push_str(if check.agrees { "  ok" } else { "  MISMATCH" });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct OracleJson {
    lower: Option<f64>,
    upper: Option<f64>,
    agrees: bool,
}

#[derive(Serialize)]
struct BoundsRowJson<'a> {
    members: Vec<&'a ArgumentId>,
    lower: f64,
    upper: f64,
    case: BoundsCase,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
}

#[derive(Serialize)]
struct FailedRowJson<'a> {
    members: Vec<&'a ArgumentId>,
    error: String,
}

#[derive(Serialize)]
struct BoundsJson<'a> {
    semantics: Option<Semantics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ranking: Option<&'static str>,
    extensions: Vec<BoundsRowJson<'a>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    errors: Vec<FailedRowJson<'a>>,
}

pub fn bounds_json(semantics: Option<Semantics>, rows: &[Row], ranked: bool) -> String {
    let mut doc = BoundsJson {
        semantics,
        ranking: ranked.then_some("heuristic: descending midpoint, then members"),
        extensions: Vec::new(),
        errors: Vec::new(),
    };
    for row in rows {
        let members: Vec<&ArgumentId> = row.extension.members().iter().collect();
        match &row.result {
            Ok(r) => doc.extensions.push(BoundsRowJson {
                members,
                lower: r.interval.lower(),
                upper: r.interval.upper(),
                case: r.case,
                oracle: row.oracle.as_ref().map(|check| OracleJson {
                    lower: check.result.as_ref().ok().map(|o| o.lower()),
                    upper: check.result.as_ref().ok().map(|o| o.upper()),
                    agrees: check.agrees,
                }),
            }),
            Err(e) => doc.errors.push(FailedRowJson {
                members,
                error: e.to_string(),
            }),
        }
    }
    to_json(&doc)
}

#[derive(Serialize)]
pub struct CheckReport {
    pub arguments: usize,
    pub attacks: usize,
    pub causal_edges: usize,
    pub agents: usize,
    pub causality_valid: bool,
    pub maximal: bool,
    pub uniform: bool,
    pub violations: Vec<RationalityViolation>,
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

pub fn check_text(report: &CheckReport, doc: &FrameworkDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "arguments: {}, attacks: {}, causal edges: {}, agents: {}",
        report.arguments, report.attacks, report.causal_edges, report.agents
    );
    let _ = writeln!(
        out,
        "causality: {}",
        if report.causality_valid {
            "valid (acyclic, no self-edges, disjoint from attacks)"
        } else {
            "invalid"
        }
    );
    let _ = writeln!(out, "maximal: {}", yes_no(report.maximal));
    let _ = writeln!(out, "uniform: {}", yes_no(report.uniform));
    let _ = writeln!(out, "rationality violations: {}", report.violations.len());
    for v in &report.violations {
        let p = |a: &ArgumentId| {
            doc.profile
                .credal_set(a)
                .map(|k| k.opinion(v.agent - 1))
                .unwrap_or(f64::NAN)
        };
        let _ = writeln!(
            out,
            "  agent {}: attack ({},{}) with p({})={} > 0.5 and p({})={} > 0.5",
            v.agent,
            v.attacker,
            v.target,
            v.attacker,
            p(&v.attacker),
            v.target,
            p(&v.target)
        );
    }
    out
}

#[derive(Serialize)]
struct CheckJson<'a> {
    document: serde_json::Value,
    diagnostics: &'a CheckReport,
}

pub fn check_json(report: &CheckReport, doc: &FrameworkDocument) -> String {
    let document = serde_json::from_str(&io::emit_json(doc)).expect("document JSON is valid");
    to_json(&CheckJson {
        document,
        diagnostics: report,
    })
}

pub fn reference_table(rows: &[ReferenceRow]) -> String {
    let mut out = String::from(
        "reference intervals, medical diagnosis example (reported vs computed from the definitions)\n",
    );
    let label_w = rows
        .iter()
        .map(|r| r.label.len())
        .max()
        .unwrap_or(0)
        .max("set".len());
    let sets: Vec<String> = rows.iter().map(|r| format_set(&r.members)).collect();
    let set_w = sets
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(0)
        .max("members".len());
    let _ = writeln!(
        out,
        "{:<label_w$}  {:<set_w$}  {:<18}  {:<22}  status",
        "set", "members", "reported", "computed"
    );
    for (row, set) in rows.iter().zip(&sets) {
        let reported = format!("[{}, {}]", row.reported.0, row.reported.1);
        let computed = format!("[{:.6}, {:.6}]", row.computed.lower(), row.computed.upper());
        let status = match (row.matches_frozen, row.deviation) {
            (false, _) => format!(
                "MISMATCH against frozen [{}, {}]",
                row.frozen.0, row.frozen.1
            ),
            (true, None) => "matches reported".to_string(),
            (true, Some(why)) => format!("documented discrepancy: {why}"),
        };
        let _ = writeln!(
            out,
            "{:<label_w$}  {set:<set_w$}  {reported:<18}  {computed:<22}  {status}",
            row.label
        );
    }
    out
}

#[derive(Serialize)]
struct Pair {
    lower: f64,
    upper: f64,
}

#[derive(Serialize)]
struct ReferenceJson<'a> {
    label: &'a str,
    members: &'a [ArgumentId],
    reported: Pair,
    computed: Pair,
    frozen: Pair,
    matches_frozen: bool,
    deviation: Option<&'a str>,
}

pub fn reference_json(rows: &[ReferenceRow]) -> String {
    let list: Vec<ReferenceJson> = rows
        .iter()
        .map(|r| ReferenceJson {
            label: r.label,
            members: &r.members,
            reported: Pair {
                lower: r.reported.0,
                upper: r.reported.1,
            },
            computed: Pair {
                lower: r.computed.lower(),
                upper: r.computed.upper(),
            },
            frozen: Pair {
                lower: r.frozen.0,
                upper: r.frozen.1,
            },
            matches_frozen: r.matches_frozen,
            deviation: r.deviation,
        })
        .collect();
    to_json(&list)
}
