use std::collections::BTreeSet;
use std::fs;

use credal_af::fixtures::{MEDICAL_DIAGNOSIS, REFERENCE_INTERVALS};
use credal_af::io::{self, FrameworkDocument};
use credal_af::{
    agent_valuation_oracle, enumerate_with_cap, extension_bounds, rank_extensions,
    rationality_report, ArgumentId, BoundsResult, Error, Extension, ProbabilityInterval, Semantics,
};

use crate::options::{CommandName, Format, RunConfiguration};
use crate::render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CAP: u8 = 3;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: EXIT_INVALID,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Self {
            message: err.to_string(),
            code,
        }
    }
}

pub fn run(config: &RunConfiguration) -> Result<Output, Failure> {
    if config.paper_fixtures {
        return reference_intervals(config);
    }
    let doc = load(config)?;
    match config.command {
        CommandName::Solve => solve(config, &doc),
        CommandName::Bounds => bounds(config, &doc, false),
        CommandName::Rank => bounds(config, &doc, true),
        CommandName::Check => check(config, &doc),
        CommandName::ExportDot => Ok(Output {
            stdout: io::export_dot(&doc),
            code: EXIT_OK,
        }),
    }
}

fn load(config: &RunConfiguration) -> Result<FrameworkDocument, Failure> {
    let path = config
        .input
        .as_ref()
        .expect("input checked by option parsing");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    io::parse_caf(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn extensions(
    config: &RunConfiguration,
    doc: &FrameworkDocument,
) -> Result<Vec<Extension>, Failure> {
    match &config.set {
        Some(list) => {
            let members: BTreeSet<ArgumentId> = list.iter().cloned().collect();
            Ok(vec![Extension::new(
                members,
                Semantics::ConflictFree,
                &doc.framework,
            )?])
        }
        None => Ok(enumerate_with_cap(
            &doc.framework,
            config.semantics,
            config.max_args,
        )?),
    }
}

fn selected_semantics(config: &RunConfiguration) -> Option<Semantics> {
    config.set.is_none().then_some(config.semantics)
}

fn solve(config: &RunConfiguration, doc: &FrameworkDocument) -> Result<Output, Failure> {
    let exts = enumerate_with_cap(&doc.framework, config.semantics, config.max_args)?;
    let stdout = match config.format {
        Format::Text => render::extension_list(&exts),
        Format::Json => render::extension_list_json(config.semantics, &exts),
    };
    Ok(Output {
        stdout,
        code: EXIT_OK,
    })
}

/// Outcome of bounding one extension, with the optional oracle cross-check.
pub struct Row {
    pub extension: Extension,
    pub result: Result<BoundsResult, Error>,
    pub oracle: Option<OracleCheck>,
}

pub struct OracleCheck {
    pub result: Result<ProbabilityInterval, Error>,
    pub agrees: bool,
}

fn bounds(
    config: &RunConfiguration,
    doc: &FrameworkDocument,
    ranked: bool,
) -> Result<Output, Failure> {
    let exts = extensions(config, doc)?;
    let mut rows: Vec<Row> = exts
        .into_iter()
        .map(|ext| {
            let result = extension_bounds(&ext, &doc.profile, &doc.causality);
            let oracle = config.oracle.then(|| {
                let oracle = agent_valuation_oracle(ext.members(), &doc.profile, &doc.causality);
                let agrees = match (&result, &oracle) {
                    (Ok(r), Ok(o)) => r.interval.approx_eq(o, config.tolerance),
                    (Err(a), Err(b)) => a == b,
                    _ => false,
                };
                OracleCheck {
                    result: oracle,
                    agrees,
                }
            });
            Row {
                extension: ext,
                result,
                oracle,
            }
        })
        .collect();

    if ranked {
        let (ok, failed): (Vec<Row>, Vec<Row>) = rows.into_iter().partition(|r| r.result.is_ok());
        let mut by_members: Vec<Row> = ok;
        let order = rank_extensions(
            by_members
                .iter()
                .map(|r| r.result.clone().expect("partitioned on success"))
                .collect(),
        );
        rows = order
            .iter()
            .map(|res| {
                let pos = by_members
                    .iter()
                    .position(|r| r.extension == res.extension)
                    .expect("ranked rows come from the input");
                by_members.swap_remove(pos)
            })
            .chain(failed)
            .collect();
    }

    let failed = rows.iter().any(|r| r.result.is_err());
    let semantics = selected_semantics(config);
    let stdout = match config.format {
        Format::Text => render::bounds_table(semantics, &rows, ranked),
        Format::Json => render::bounds_json(semantics, &rows, ranked),
    };
    Ok(Output {
        stdout,
        code: if failed { EXIT_INVALID } else { EXIT_OK },
    })
}

fn check(config: &RunConfiguration, doc: &FrameworkDocument) -> Result<Output, Failure> {
    let violations = rationality_report(&doc.profile, &doc.framework)?;
    let report = render::CheckReport {
        arguments: doc.framework.len(),
        attacks: doc.framework.attack_count(),
        causal_edges: doc.causality.edge_count(),
        agents: doc.profile.agent_count(),
        causality_valid: true,
        maximal: doc.profile.is_maximal(),
        uniform: doc.profile.is_uniform(),
        violations,
    };
    let code = if config.strict && !report.violations.is_empty() {
        EXIT_INVALID
    } else {
        EXIT_OK
    };
    let stdout = match config.format {
        Format::Text => render::check_text(&report, doc),
        Format::Json => render::check_json(&report, doc),
    };
    Ok(Output { stdout, code })
}

/// One line of the reference comparison for the diagnosis example.
pub struct ReferenceRow {
    pub label: &'static str,
    pub members: Vec<ArgumentId>,
    pub reported: (f64, f64),
    pub frozen: (f64, f64),
    pub computed: ProbabilityInterval,
    pub matches_frozen: bool,
    pub deviation: Option<&'static str>,
}

fn reference_intervals(config: &RunConfiguration) -> Result<Output, Failure> {
    let doc = io::parse_caf(MEDICAL_DIAGNOSIS)?;
    let mut rows = Vec::new();
    for reference in REFERENCE_INTERVALS {
        let members: BTreeSet<ArgumentId> = reference
            .members
            .iter()
            .map(|m| ArgumentId::new(*m))
            .collect::<Result<_, _>>()?;
        let ext = Extension::new(members, Semantics::ConflictFree, &doc.framework)?;
        let computed = extension_bounds(&ext, &doc.profile, &doc.causality)?.interval;
        let frozen = ProbabilityInterval::new(reference.computed.0, reference.computed.1)?;
        rows.push(ReferenceRow {
            label: reference.label,
            members: ext.members().iter().cloned().collect(),
            reported: reference.reported,
            frozen: reference.computed,
            computed,
            matches_frozen: computed.approx_eq(&frozen, config.tolerance),
            deviation: reference.deviation,
        });
    }
    let code = if rows.iter().all(|r| r.matches_frozen) {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    let stdout = match config.format {
        Format::Text => render::reference_table(&rows),
        Format::Json => render::reference_json(&rows),
    };
    Ok(Output { stdout, code })
}
