//! Lower/upper probability bounds of extensions.
//!
//! Empty extensions get the ignorance interval `(0, 1)`, singletons the
//! min/max of their credal set. Larger extensions are split along the
//! causality graph: each TOP argument (an effect that causes nothing inside
//! the extension) anchors a group with its in-extension ancestors, whose
//! opinions are combined by per-agent minimum. Groups, isolated members and
//! free causes are then treated as independent and multiplied per agent.
//! When the extension is a single group and nothing else, the group's own
//! min/max is the answer.

mod oracle;
mod rank;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::af::{ArgumentId, Extension};
use crate::causality::CausalityGraph;
use crate::credal::{
    dependent_credal_set, independent_bounds, single_bounds, CredalProfile, CredalSet,
    ProbabilityInterval,
};
use crate::{CoverageError, Error, Result};

pub use oracle::agent_valuation_oracle;
pub use rank::{dominates, rank_extensions};

/// Which branch of the bounds definition produced an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundsCase {
    Empty,
    Singleton,
    Algorithm,
}

impl BoundsCase {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundsCase::Empty => "empty",
            BoundsCase::Singleton => "singleton",
            BoundsCase::Algorithm => "algorithm",
        }
    }
}

/// A TOP argument together with its causal ancestors inside the extension.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalGroup {
    pub top: ArgumentId,
    pub members: BTreeSet<ArgumentId>,
    /// Per-agent minimum over the members' credal sets.
    pub credal_set: CredalSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsResult {
    pub extension: Extension,
    pub interval: ProbabilityInterval,
    pub case: BoundsCase,
    /// Causal groups found by the algorithm; empty for the other cases.
    pub groups: Vec<CausalGroup>,
}

/// Bounds of an extension of any size.
pub fn extension_bounds(
    extension: &Extension,
    profile: &CredalProfile,
    cg: &CausalityGraph,
) -> Result<BoundsResult> {
    for member in extension.members() {
        profile.credal_set(member)?;
    }
    match extension.len() {
        0 => Ok(BoundsResult {
            extension: extension.clone(),
            interval: ProbabilityInterval::ignorance(),
            case: BoundsCase::Empty,
            groups: Vec::new(),
        }),
        1 => {
            let only = extension.members().iter().next().expect("one member");
            Ok(BoundsResult {
                extension: extension.clone(),
                interval: single_bounds(profile.credal_set(only)?)?,
                case: BoundsCase::Singleton,
                groups: Vec::new(),
            })
        }
        _ => ul_bounds(extension, profile, cg),
    }
}

/// Group-and-aggregate bounds for extensions with more than one member.
pub fn ul_bounds(
    extension: &Extension,
    profile: &CredalProfile,
    cg: &CausalityGraph,
) -> Result<BoundsResult> {
    if extension.len() < 2 {
        return Err(Error::TooFewArguments(extension.len()));
    }
    let set = cg.indices(extension.members())?;

    let mut groups = Vec::new();
    let mut group_indices = Vec::new();
    for top in cg.top_indices(&set) {
        let members: BTreeSet<usize> = std::iter::once(top)
            .chain(cg.ancestor_indices(top).intersection(&set).copied())
            .collect();
        let sets = members
            .iter()
            .map(|&i| profile.credal_set(cg.id(i)))
            .collect::<Result<Vec<_>>>()?;
        groups.push(CausalGroup {
            top: cg.id(top).clone(),
            members: members.iter().map(|&i| cg.id(i).clone()).collect(),
            credal_set: dependent_credal_set(&sets)?,
        });
        group_indices.push((top, members));
    }
    let isolated: BTreeSet<usize> = set
        .iter()
        .copied()
        .filter(|&i| !cg.is_effect(i) && !cg.is_cause(i))
        .collect();
    let free = cg.free_indices(&set);

    check_coverage(&set, &group_indices, &isolated, &free, cg)?;

    let interval = if groups.len() == 1 && isolated.is_empty() && free.is_empty() {
        single_bounds(&groups[0].credal_set)?
    } else {
        let mut factors: Vec<(&ArgumentId, &CredalSet)> =
            groups.iter().map(|g| (&g.top, &g.credal_set)).collect();
        for &i in isolated.union(&free) {
            factors.push((cg.id(i), profile.credal_set(cg.id(i))?));
        }
        factors.sort_by(|a, b| a.0.cmp(b.0));
        let sets: Vec<&CredalSet> = factors.into_iter().map(|(_, k)| k).collect();
        independent_bounds(&sets)?
    };

    Ok(BoundsResult {
        extension: extension.clone(),
        interval,
        case: BoundsCase::Algorithm,
        groups,
    })
}

/// Every member must be used exactly once: by one group, or as an isolated
/// or free factor. Reports the first offending member in name order.
fn check_coverage(
    set: &BTreeSet<usize>,
    groups: &[(usize, BTreeSet<usize>)],
    isolated: &BTreeSet<usize>,
    free: &BTreeSet<usize>,
    cg: &CausalityGraph,
) -> Result<(), CoverageError> {
    for &i in set {
        let holders: Vec<ArgumentId> = groups
            .iter()
            .filter(|(_, members)| members.contains(&i))
            .map(|&(top, _)| cg.id(top).clone())
            .collect();
        let uses =
            holders.len() + usize::from(isolated.contains(&i)) + usize::from(free.contains(&i));
        match uses {
            1 => {}
            0 => return Err(CoverageError::Uncovered(cg.id(i).clone())),
            _ => {
                return Err(CoverageError::Overlap {
                    argument: cg.id(i).clone(),
                    tops: holders,
                })
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::{ArgumentationFramework, Semantics};
    use std::collections::BTreeMap;

    const TOL: f64 = 1e-9;

    fn id(name: &str) -> ArgumentId {
        ArgumentId::new(name).unwrap()
    }

    fn ids(names: &[&str]) -> BTreeSet<ArgumentId> {
        names.iter().map(|n| id(n)).collect()
    }

    struct Medical {
        af: ArgumentationFramework,
        profile: CredalProfile,
        cg: CausalityGraph,
    }

    fn medical() -> Medical {
        let af = ArgumentationFramework::from_names(
            &["A", "B", "C", "D", "E", "F", "G", "H"],
            &[("A", "B"), ("B", "A"), ("F", "B"), ("D", "B"), ("C", "A")],
        )
        .unwrap();
        let table: [(&str, [f64; 4]); 8] = [
            ("A", [0.2, 0.7, 0.55, 0.75]),
            ("B", [0.8, 0.25, 0.45, 0.1]),
            ("C", [0.2, 0.75, 0.4, 0.2]),
            ("D", [0.75, 0.15, 0.5, 0.8]),
            ("E", [0.8, 0.65, 0.8, 0.7]),
            ("F", [0.75, 0.2, 0.55, 0.8]),
            ("G", [0.7, 0.8, 1.0, 0.9]),
            ("H", [0.8, 0.9, 1.0, 0.9]),
        ];
        let map: BTreeMap<_, _> = table
            .iter()
            .map(|(n, v)| (id(n), CredalSet::new(v.to_vec()).unwrap()))
            .collect();
        let profile = CredalProfile::new(&af, 4, map).unwrap();
        let cg = CausalityGraph::new(
            &af,
            [
                ("D", "A"),
                ("F", "A"),
                ("H", "A"),
                ("G", "A"),
                ("H", "G"),
                ("G", "B"),
                ("C", "B"),
            ]
            .map(|(a, b)| (id(a), id(b))),
        )
        .unwrap();
        Medical { af, profile, cg }
    }

    fn cf(m: &Medical, names: &[&str]) -> Extension {
        Extension::new(ids(names), Semantics::ConflictFree, &m.af).unwrap()
    }

    fn assert_interval(iv: ProbabilityInterval, lower: f64, upper: f64) {
        assert!(
            (iv.lower() - lower).abs() < TOL && (iv.upper() - upper).abs() < TOL,
            "got {iv:?}, expected ({lower}, {upper})"
        );
    }

    #[test]
    fn empty_and_singleton_cases() {
        let m = medical();
        let empty = extension_bounds(&cf(&m, &[]), &m.profile, &m.cg).unwrap();
        assert_eq!(empty.case, BoundsCase::Empty);
        assert_eq!(empty.interval, ProbabilityInterval::ignorance());

        let a = extension_bounds(&cf(&m, &["A"]), &m.profile, &m.cg).unwrap();
        assert_eq!(a.case, BoundsCase::Singleton);
        assert_interval(a.interval, 0.2, 0.75);
    }

    #[test]
    fn grounded_extension_of_medical_example() {
        let m = medical();
        let ext = cf(&m, &["C", "D", "E", "F", "G", "H"]);
        let res = extension_bounds(&ext, &m.profile, &m.cg).unwrap();
        assert_eq!(res.case, BoundsCase::Algorithm);
        assert_eq!(res.groups.len(), 1);
        assert_eq!(res.groups[0].top, id("G"));
        assert_eq!(res.groups[0].members, ids(&["G", "H"]));
        assert_eq!(res.groups[0].credal_set.values(), &[0.7, 0.8, 1.0, 0.9]);
        assert_interval(res.interval, 0.0117, 0.088);
    }

    #[test]
    fn single_group_uses_minimum_rule() {
        let m = medical();
        let res = ul_bounds(&cf(&m, &["G", "H"]), &m.profile, &m.cg).unwrap();
        assert_interval(res.interval, 0.7, 1.0);
        assert_interval(
            ul_bounds(&cf(&m, &["A", "F", "H", "D", "G"]), &m.profile, &m.cg)
                .unwrap()
                .interval,
            0.15,
            0.75,
        );
        assert_interval(
            ul_bounds(&cf(&m, &["B", "C", "G", "H"]), &m.profile, &m.cg)
                .unwrap()
                .interval,
            0.1,
            0.4,
        );
    }

    #[test]
    fn group_with_isolated_member_multiplies() {
        let m = medical();
        let res = ul_bounds(&cf(&m, &["A", "F", "H", "D", "E", "G"]), &m.profile, &m.cg).unwrap();
        assert_interval(res.interval, 0.0975, 0.525);
    }

    #[test]
    fn isolated_maximal_members_give_certainty() {
        let af = ArgumentationFramework::from_names(&["X", "Y"], &[]).unwrap();
        let profile = CredalProfile::maximal(&af, 3).unwrap();
        let ext = Extension::new(ids(&["X", "Y"]), Semantics::Stable, &af).unwrap();
        let res = ul_bounds(&ext, &profile, &CausalityGraph::empty(&af)).unwrap();
        assert_interval(res.interval, 1.0, 1.0);
    }

    #[test]
    fn ul_bounds_rejects_small_sets() {
        let m = medical();
        assert_eq!(
            ul_bounds(&cf(&m, &["A"]), &m.profile, &m.cg),
            Err(Error::TooFewArguments(1))
        );
    }

    #[test]
    fn shared_ancestor_of_two_tops_is_an_overlap() {
        let af = ArgumentationFramework::from_names(&["X", "Y", "Z"], &[]).unwrap();
        let cg = CausalityGraph::new(&af, [(id("Z"), id("X")), (id("Z"), id("Y"))]).unwrap();
        let profile = CredalProfile::maximal(&af, 2).unwrap();
        let ext = Extension::new(ids(&["X", "Y", "Z"]), Semantics::ConflictFree, &af).unwrap();
        let expected = Error::Coverage(CoverageError::Overlap {
            argument: id("Z"),
            tops: vec![id("X"), id("Y")],
        });
        assert_eq!(ul_bounds(&ext, &profile, &cg), Err(expected.clone()));
        assert_eq!(
            agent_valuation_oracle(ext.members(), &profile, &cg),
            Err(expected)
        );
    }

    #[test]
    fn transitive_cause_outside_direct_reach_is_an_overlap() {
        let af = ArgumentationFramework::from_names(&["X", "Y", "Z"], &[]).unwrap();
        let cg = CausalityGraph::new(&af, [(id("X"), id("Y")), (id("Y"), id("Z"))]).unwrap();
        let profile = CredalProfile::maximal(&af, 2).unwrap();
        let ext = Extension::new(ids(&["X", "Z"]), Semantics::ConflictFree, &af).unwrap();
        let expected = Error::Coverage(CoverageError::Overlap {
            argument: id("X"),
            tops: vec![id("Z")],
        });
        assert_eq!(ul_bounds(&ext, &profile, &cg), Err(expected.clone()));
        assert_eq!(
            agent_valuation_oracle(ext.members(), &profile, &cg),
            Err(expected)
        );
    }

    #[test]
    fn missing_profile_entry_is_reported() {
        let m = medical();
        let other = ArgumentationFramework::from_names(&["Q", "R"], &[]).unwrap();
        let ext = Extension::new(ids(&["Q", "R"]), Semantics::ConflictFree, &other).unwrap();
        assert_eq!(
            extension_bounds(&ext, &m.profile, &m.cg),
            Err(Error::MissingCredalSet(id("Q")))
        );
    }

    #[test]
    fn oracle_matches_hand_values() {
        let m = medical();
        let o = |names: &[&str]| agent_valuation_oracle(&ids(names), &m.profile, &m.cg).unwrap();
        assert_interval(o(&["A"]), 0.2, 0.75);
        assert_interval(o(&["C", "D", "E", "F", "G", "H"]), 0.0117, 0.088);
        assert_interval(o(&["G", "H"]), 0.7, 1.0);
        assert_interval(o(&[]), 0.0, 1.0);
    }
}
