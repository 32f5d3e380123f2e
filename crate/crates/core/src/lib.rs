//! Abstract argumentation over credal-set probabilities.
//!
//! A framework carries the usual Dung attack relation, a per-argument credal
//! set (one probability per agent), and a causality graph over the same
//! arguments. Extensions are enumerated under the six classical semantics and
//! each extension gets a lower/upper probability interval whose aggregation
//! rule (product for independent arguments, per-agent minimum for causally
//! related ones) is driven by the causality graph.
//!
//! ```
//! use credal_af::{io, Semantics};
//!
//! let doc = io::parse_caf(credal_af::fixtures::MEDICAL_DIAGNOSIS).unwrap();
//! let grounded = credal_af::enumerate(&doc.framework, Semantics::Grounded).unwrap();
//! let result = credal_af::extension_bounds(&grounded[0], &doc.profile, &doc.causality).unwrap();
//! assert!((result.interval.lower() - 0.0117).abs() < 1e-9);
//! ```

pub mod af;
pub mod bounds;
pub mod causality;
pub mod credal;
pub mod fixtures;
pub mod io;

mod error;

pub use af::{
    defends, enumerate, enumerate_with_cap, grounded_extension, is_conflict_free, ArgumentId,
    ArgumentationFramework, Extension, Semantics, DEFAULT_ARGUMENT_CAP,
};
pub use bounds::{
    agent_valuation_oracle, extension_bounds, rank_extensions, ul_bounds, BoundsCase, BoundsResult,
    CausalGroup,
};
pub use causality::{CausalPartition, CausalityGraph};
pub use credal::{
    dependent_bounds, dependent_credal_set, independent_bounds, rationality_report, single_bounds,
    CredalProfile, CredalSet, ProbabilityInterval, RationalityViolation,
};
pub use error::{CoverageError, Error};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Absolute tolerance used for floating-point comparisons throughout.
pub const TOLERANCE: f64 = 1e-9;
