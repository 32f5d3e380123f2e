use std::fmt::Write as _;

use super::FrameworkDocument;
use crate::af::ArgumentId;

/// Names starting with a digit are only valid DOT IDs when fully numeric.
fn node(id: &ArgumentId) -> String {
    let s = id.as_str();
    if s.starts_with(|c: char| c.is_ascii_digit()) && !s.bytes().all(|b| b.is_ascii_digit()) {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

/// Graphviz rendering: attacks as solid edges, causal edges dashed.
pub fn export_dot(doc: &FrameworkDocument) -> String {
    let mut out = String::from("digraph caf {\n");
    for a in doc.framework.arguments() {
        let _ = writeln!(out, "  {} [label=\"{a}\"];", node(a));
    }
    for (a, b) in doc.framework.attacks() {
        let _ = writeln!(out, "  {} -> {};", node(a), node(b));
    }
    for (a, b) in doc.causality.edges() {
        let _ = writeln!(out, "  {} -> {} [style=dashed];", node(a), node(b));
    }
    out.push_str("}\n");
    out
}
