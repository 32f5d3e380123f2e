//! Reference documents and reference intervals for the medical-diagnosis
//! running example (measles vs chickenpox, eight arguments, four agents).

/// The eight-argument diagnosis framework with its four-agent profile and
/// causality graph.
pub const MEDICAL_DIAGNOSIS: &str = r#"% Measles (A) or chickenpox (B)?
name("medical diagnosis").
description("measles vs chickenpox, four agents").
arg(A). arg(B). arg(C). arg(D). arg(E). arg(F). arg(G). arg(H).

att(A,B). att(B,A). att(F,B). att(D,B). att(C,A).

cau(D,A). cau(F,A). cau(H,A). cau(G,A). cau(H,G). cau(G,B). cau(C,B).

agents(4).
%        A           B            C           D            E           F            G          H
p(1,A,0.2).  p(1,B,0.8).  p(1,C,0.2).  p(1,D,0.75). p(1,E,0.8).  p(1,F,0.75). p(1,G,0.7). p(1,H,0.8).
p(2,A,0.7).  p(2,B,0.25). p(2,C,0.75). p(2,D,0.15). p(2,E,0.65). p(2,F,0.2).  p(2,G,0.8). p(2,H,0.9).
p(3,A,0.55). p(3,B,0.45). p(3,C,0.4).  p(3,D,0.5).  p(3,E,0.8).  p(3,F,0.55). p(3,G,1).   p(3,H,1).
p(4,A,0.75). p(4,B,0.1).  p(4,C,0.2).  p(4,D,0.8).  p(4,E,0.7).  p(4,F,0.8).  p(4,G,0.9). p(4,H,0.9).
"#;

/// Opinions of three agents (rows) on three events (columns) used to
/// illustrate the independent and dependent aggregation rules.
pub const THREE_EVENTS: [[f64; 3]; 3] = [[0.3, 0.5, 0.75], [0.6, 0.7, 0.55], [0.45, 0.65, 0.8]];

/// A set from the diagnosis example with the interval originally reported
/// for it and the interval the bounds definition actually yields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceInterval {
    pub label: &'static str,
    pub members: &'static [&'static str],
    pub reported: (f64, f64),
    pub computed: (f64, f64),
    /// Explanation when `reported` differs from `computed`.
    pub deviation: Option<&'static str>,
}

pub const REFERENCE_INTERVALS: [ReferenceInterval; 5] = [
    ReferenceInterval {
        label: "E_y (co = pr = gr = st)",
        members: &["C", "D", "E", "F", "G", "H"],
        reported: (0.0117, 0.0806),
        computed: (0.0117, 0.088),
        deviation: Some(
            "per-agent products are 0.063, 0.0117, 0.088, 0.08064; the reported upper bound is not their maximum",
        ),
    },
    ReferenceInterval {
        label: "E_cf1",
        members: &["A", "D", "E", "F", "G", "H"],
        reported: (0.13, 0.525),
        computed: (0.0975, 0.525),
        deviation: Some(
            "group {A,D,F,G,H} has per-agent minima 0.2, 0.15, 0.5, 0.75; times E gives a lower bound of 0.0975 (agent 2)",
        ),
    },
    ReferenceInterval {
        label: "E_cf2",
        members: &["A", "D", "F", "G", "H"],
        reported: (0.2, 0.75),
        computed: (0.15, 0.75),
        deviation: Some(
            "single causal group; its per-agent minimum for agent 2 is 0.15 (from D), not 0.2",
        ),
    },
    ReferenceInterval {
        label: "E_cf3",
        members: &["B", "C", "G", "H"],
        reported: (0.02, 0.1875),
        computed: (0.1, 0.4),
        deviation: Some(
            "single causal group {B,C,G,H}; per-agent minima are 0.2, 0.25, 0.4, 0.1",
        ),
    },
    ReferenceInterval {
        label: "E_cf4",
        members: &["A"],
        reported: (0.2, 0.75),
        computed: (0.2, 0.75),
        deviation: None,
    },
];
