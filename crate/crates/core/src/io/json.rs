use std::collections::BTreeMap;

use serde::Serialize;

use super::FrameworkDocument;
use crate::af::{ArgumentId, Semantics};
use crate::bounds::{BoundsCase, BoundsResult};

#[derive(Serialize)]
struct DocumentJson<'a> {
    arguments: Vec<&'a ArgumentId>,
    attacks: Vec<[&'a ArgumentId; 2]>,
    causality: Vec<[&'a ArgumentId; 2]>,
    agents: usize,
    /// Argument name to its opinions in agent order.
    opinions: BTreeMap<&'a ArgumentId, &'a [f64]>,
}

/// Document as `{arguments, attacks, causality, agents, opinions}`.
pub fn emit_json(doc: &FrameworkDocument) -> String {
    let view = DocumentJson {
        arguments: doc.framework.arguments().iter().collect(),
        attacks: doc.framework.attacks().map(|(a, b)| [a, b]).collect(),
        causality: doc.causality.edges().map(|(a, b)| [a, b]).collect(),
        agents: doc.profile.agent_count(),
        opinions: doc.profile.iter().map(|(a, k)| (a, k.values())).collect(),
    };
    serde_json::to_string_pretty(&view).expect("document serializes")
}

/// One bounded extension in the results schema.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtensionRecord {
    pub members: Vec<ArgumentId>,
    pub lower: f64,
    pub upper: f64,
    pub case: BoundsCase,
}

impl From<&BoundsResult> for ExtensionRecord {
    fn from(r: &BoundsResult) -> Self {
        Self {
            members: r.extension.members().iter().cloned().collect(),
            lower: r.interval.lower(),
            upper: r.interval.upper(),
            case: r.case,
        }
    }
}

/// Results as `{semantics, extensions: [{members, lower, upper, case}]}`.
/// `semantics` is `null` for an explicitly supplied set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultsDocument {
    pub semantics: Option<Semantics>,
    pub extensions: Vec<ExtensionRecord>,
}

pub fn results_json(semantics: Option<Semantics>, results: &[BoundsResult]) -> String {
    let doc = ResultsDocument {
        semantics,
        extensions: results.iter().map(ExtensionRecord::from).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("results serialize")
}
