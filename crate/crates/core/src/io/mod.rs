//! Reading and writing framework documents.
//!
//! The `.caf` text format extends the `arg/att` convention used by
//! argumentation solver benchmarks:
//!
//! ```text
//! % comment
//! name("measles or chickenpox").
//! arg(A).  arg(B).
//! att(A,B).
//! cau(B,A).
//! agents(2).
//! p(1,A,0.2).  p(2,A,0.7).
//! p(1,B,0.8).  p(2,B,0.25).
//! ```
//!
//! A document without any `p` statement gets the all-ones profile, so plain
//! benchmark files load unchanged.

mod caf;
mod dot;
mod json;

use crate::af::ArgumentationFramework;
use crate::causality::CausalityGraph;
use crate::credal::CredalProfile;

pub use caf::{emit_caf, parse_caf};
pub use dot::export_dot;
pub use json::{emit_json, results_json, ExtensionRecord, ResultsDocument};

/// A framework with its credal profile and causality graph over one
/// argument universe.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameworkDocument {
    pub name: Option<String>,
    pub description: Option<String>,
    pub framework: ArgumentationFramework,
    pub profile: CredalProfile,
    pub causality: CausalityGraph,
}

impl FrameworkDocument {
    /// Plain framework with the maximal single-agent profile and no causal edges.
    pub fn from_framework(framework: ArgumentationFramework) -> Self {
        let profile =
            CredalProfile::maximal(&framework, 1).expect("one agent is a valid profile size");
        let causality = CausalityGraph::empty(&framework);
        Self {
            name: None,
            description: None,
            framework,
            profile,
            causality,
        }
    }
}
