//! Credal sets, agent profiles and the lower/upper aggregation rules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::af::{ArgumentId, ArgumentationFramework};
use crate::{Error, Result};

/// Opinions of `m` agents about one event, indexed by agent.
///
/// Values are kept in agent order and never deduplicated: the aggregation
/// rules pair the j-th entries of different sets.
#[derive(Debug, Clone, PartialEq)]
pub struct CredalSet(Vec<f64>);

impl CredalSet {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyCredalSet);
        }
        if let Some(&bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::OutOfRange(bad));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// Number of agents.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Opinion of agent `j` (0-based).
    pub fn opinion(&self, j: usize) -> f64 {
        self.0[j]
    }
}

/// Lower and upper probability with `0 <= lower <= upper <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilityInterval {
    lower: f64,
    upper: f64,
}

impl ProbabilityInterval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&lower) && (0.0..=1.0).contains(&upper) && lower <= upper {
            Ok(Self { lower, upper })
        } else {
            Err(Error::InvalidInterval { lower, upper })
        }
    }

    /// The `(0, 1)` interval of total ignorance.
    pub fn ignorance() -> Self {
        Self {
            lower: 0.0,
            upper: 1.0,
        }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn midpoint(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        (self.lower - other.lower).abs() <= tolerance
            && (self.upper - other.upper).abs() <= tolerance
    }

    /// Min and max of a non-empty sequence of unit-interval values.
    pub(crate) fn spanning(values: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut iter = values.into_iter();
        let first = iter.next().ok_or(Error::EmptyCredalSet)?;
        let (lower, upper) = iter.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)));
        Self::new(lower, upper)
    }
}

/// Credal sets for every argument of a framework, all with the same number
/// of agents.
#[derive(Debug, Clone, PartialEq)]
pub struct CredalProfile {
    agent_count: usize,
    assignment: BTreeMap<ArgumentId, CredalSet>,
}

impl CredalProfile {
    /// Builds a profile whose domain must equal the framework's arguments.
    pub fn new(
        af: &ArgumentationFramework,
        agent_count: usize,
        assignment: BTreeMap<ArgumentId, CredalSet>,
    ) -> Result<Self> {
        if agent_count == 0 {
            return Err(Error::EmptyCredalSet);
        }
        for (id, set) in &assignment {
            if !af.contains(id) {
                return Err(Error::ExtraCredalSet(id.clone()));
            }
            if set.len() != agent_count {
                return Err(Error::MismatchedCardinality {
                    expected: agent_count,
                    found: set.len(),
                });
            }
        }
        if let Some(missing) = af.arguments().iter().find(|a| !assignment.contains_key(*a)) {
            return Err(Error::MissingCredalSet(missing.clone()));
        }
        Ok(Self {
            agent_count,
            assignment,
        })
    }

    /// Every agent believes every argument with probability 1.
    pub fn maximal(af: &ArgumentationFramework, agent_count: usize) -> Result<Self> {
        let ones = CredalSet::new(vec![1.0; agent_count])?;
        let assignment = af
            .arguments()
            .iter()
            .map(|a| (a.clone(), ones.clone()))
            .collect();
        Self::new(af, agent_count, assignment)
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    pub fn credal_set(&self, id: &ArgumentId) -> Result<&CredalSet> {
        self.assignment
            .get(id)
            .ok_or_else(|| Error::MissingCredalSet(id.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, &CredalSet)> + '_ {
        self.assignment.iter()
    }

    /// All opinions equal 1.
    pub fn is_maximal(&self) -> bool {
        self.assignment
            .values()
            .all(|k| k.values().iter().all(|&v| v == 1.0))
    }

    /// All opinions lie in `[0, 1]`.
    pub fn is_uniform(&self) -> bool {
        is_uniform(
            self.assignment
                .values()
                .flat_map(|k| k.values().iter().copied()),
        )
    }
}

/// Range guard for raw (unvalidated) opinion values.
pub fn is_uniform(values: impl IntoIterator<Item = f64>) -> bool {
    values.into_iter().all(|v| (0.0..=1.0).contains(&v))
}

/// Lower/upper probability of a single event: min and max of its credal set.
pub fn single_bounds(k: &CredalSet) -> Result<ProbabilityInterval> {
    ProbabilityInterval::spanning(k.values().iter().copied())
}

fn common_cardinality(ks: &[&CredalSet]) -> Result<usize> {
    let first = ks.first().ok_or(Error::NoCredalSets)?;
    let m = first.len();
    if let Some(bad) = ks.iter().find(|k| k.len() != m) {
        return Err(Error::MismatchedCardinality {
            expected: m,
            found: bad.len(),
        });
    }
    Ok(m)
}

/// Bounds for independent events: per-agent products, then min and max over
/// agents. Factors are multiplied in the order given.
pub fn independent_bounds(ks: &[&CredalSet]) -> Result<ProbabilityInterval> {
    let m = common_cardinality(ks)?;
    ProbabilityInterval::spanning((0..m).map(|j| ks.iter().map(|k| k.opinion(j)).product::<f64>()))
}

/// Joint credal set for dependent events: element `j` is the minimum of the
/// j-th opinions across all inputs.
pub fn dependent_credal_set(ks: &[&CredalSet]) -> Result<CredalSet> {
    let m = common_cardinality(ks)?;
    CredalSet::new(
        (0..m)
            .map(|j| {
                ks.iter()
                    .map(|k| k.opinion(j))
                    .fold(f64::INFINITY, f64::min)
            })
            .collect(),
    )
}

/// Bounds for dependent events: min and max of [`dependent_credal_set`].
pub fn dependent_bounds(ks: &[&CredalSet]) -> Result<ProbabilityInterval> {
    single_bounds(&dependent_credal_set(ks)?)
}

/// An agent whose opinions believe both ends of an attack above 0.5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalityViolation {
    /// 1-based agent index.
    pub agent: usize,
    pub attacker: ArgumentId,
    pub target: ArgumentId,
}

/// Lists every (agent, attack) pair where `p(attacker) > 0.5` and
/// `p(target) > 0.5`, ordered by agent then attack.
pub fn rationality_report(
    profile: &CredalProfile,
    af: &ArgumentationFramework,
) -> Result<Vec<RationalityViolation>> {
    let mut out = Vec::new();
    for j in 0..profile.agent_count() {
        for (a, b) in af.attacks() {
            let pa = profile.credal_set(a)?.opinion(j);
            let pb = profile.credal_set(b)?.opinion(j);
            if pa > 0.5 && pb > 0.5 {
                out.push(RationalityViolation {
                    agent: j + 1,
                    attacker: a.clone(),
                    target: b.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    fn k(values: &[f64]) -> CredalSet {
        CredalSet::new(values.to_vec()).unwrap()
    }

    fn assert_interval(iv: ProbabilityInterval, lower: f64, upper: f64) {
        assert!(
            (iv.lower() - lower).abs() < TOL && (iv.upper() - upper).abs() < TOL,
            "got {iv:?}, expected ({lower}, {upper})"
        );
    }

    fn three_events() -> [CredalSet; 3] {
        [
            k(&[0.3, 0.6, 0.45]),
            k(&[0.5, 0.7, 0.65]),
            k(&[0.75, 0.55, 0.8]),
        ]
    }

    #[test]
    fn credal_set_validation() {
        assert_eq!(CredalSet::new(vec![]), Err(Error::EmptyCredalSet));
        assert_eq!(CredalSet::new(vec![0.2, 1.3]), Err(Error::OutOfRange(1.3)));
        assert!(CredalSet::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn single_bounds_examples() {
        assert_interval(
            single_bounds(&k(&[0.2, 0.7, 0.55, 0.75])).unwrap(),
            0.2,
            0.75,
        );
        assert_interval(single_bounds(&k(&[0.5])).unwrap(), 0.5, 0.5);
        assert_interval(single_bounds(&k(&[0.3, 0.6, 0.45])).unwrap(), 0.3, 0.6);
    }

    #[test]
    fn independent_bounds_examples() {
        let [e1, e2, e3] = three_events();
        assert_interval(independent_bounds(&[&e1, &e2, &e3]).unwrap(), 0.1125, 0.234);
        assert_interval(independent_bounds(&[&e1]).unwrap(), 0.3, 0.6);
        let ones = k(&[1.0, 1.0]);
        assert_interval(independent_bounds(&[&ones, &ones]).unwrap(), 1.0, 1.0);
    }

    #[test]
    fn dependent_examples() {
        let [e1, e2, e3] = three_events();
        assert_eq!(
            dependent_credal_set(&[&e1, &e2, &e3]).unwrap(),
            k(&[0.3, 0.55, 0.45])
        );
        assert_interval(dependent_bounds(&[&e1, &e2, &e3]).unwrap(), 0.3, 0.55);
        assert_eq!(dependent_credal_set(&[&e1]).unwrap(), e1);

        let g = k(&[0.7, 0.8, 1.0, 0.9]);
        let h = k(&[0.8, 0.9, 1.0, 0.9]);
        assert_eq!(dependent_credal_set(&[&g, &h]).unwrap(), g);
        assert_interval(dependent_bounds(&[&g, &h]).unwrap(), 0.7, 1.0);
        assert_interval(dependent_bounds(&[&e2, &e2]).unwrap(), 0.5, 0.7);
    }

    #[test]
    fn mismatched_cardinality_is_an_error() {
        let a = k(&[0.1, 0.2]);
        let b = k(&[0.1]);
        let expected = Error::MismatchedCardinality {
            expected: 2,
            found: 1,
        };
        assert_eq!(independent_bounds(&[&a, &b]), Err(expected.clone()));
        assert_eq!(dependent_credal_set(&[&a, &b]), Err(expected));
        assert_eq!(independent_bounds(&[]), Err(Error::NoCredalSets));
    }

    #[test]
    fn profile_domain_must_match_framework() {
        let af = ArgumentationFramework::from_names(&["A", "B"], &[("A", "B")]).unwrap();
        let a = ArgumentId::new("A").unwrap();
        let mut map = BTreeMap::new();
        map.insert(a.clone(), k(&[0.6]));
        assert_eq!(
            CredalProfile::new(&af, 1, map.clone()),
            Err(Error::MissingCredalSet(ArgumentId::new("B").unwrap()))
        );
        map.insert(ArgumentId::new("B").unwrap(), k(&[0.7, 0.1]));
        assert!(matches!(
            CredalProfile::new(&af, 1, map.clone()),
            Err(Error::MismatchedCardinality { .. })
        ));
        map.insert(ArgumentId::new("B").unwrap(), k(&[0.7]));
        map.insert(ArgumentId::new("Z").unwrap(), k(&[0.7]));
        assert!(matches!(
            CredalProfile::new(&af, 1, map),
            Err(Error::ExtraCredalSet(_))
        ));
    }

    #[test]
    fn rationality_and_status_predicates() {
        let af = ArgumentationFramework::from_names(&["A", "B"], &[("A", "B")]).unwrap();
        let build = |a: f64, b: f64| {
            let mut map = BTreeMap::new();
            map.insert(ArgumentId::new("A").unwrap(), k(&[a]));
            map.insert(ArgumentId::new("B").unwrap(), k(&[b]));
            CredalProfile::new(&af, 1, map).unwrap()
        };
        let bad = build(0.9, 0.6);
        assert_eq!(rationality_report(&bad, &af).unwrap().len(), 1);
        assert!(rationality_report(&build(0.5, 0.5), &af)
            .unwrap()
            .is_empty());
        assert!(!bad.is_maximal());
        assert!(bad.is_uniform());

        let max = CredalProfile::maximal(&af, 3).unwrap();
        assert!(max.is_maximal());
        assert!(!is_uniform([0.2, 1.3]));

        let no_attacks = ArgumentationFramework::from_names(&["A", "B"], &[]).unwrap();
        assert!(rationality_report(
            &CredalProfile::maximal(&no_attacks, 2).unwrap(),
            &no_attacks
        )
        .unwrap()
        .is_empty());
    }

    fn credal_sets(max_sets: usize) -> impl Strategy<Value = Vec<CredalSet>> {
        (1usize..=5).prop_flat_map(move |m| {
            prop::collection::vec(
                prop::collection::vec(0.0f64..=1.0, m).prop_map(|v| CredalSet::new(v).unwrap()),
                1..=max_sets,
            )
        })
    }

    proptest! {
        #[test]
        fn dependent_dominates_independent(ks in credal_sets(6)) {
            let refs: Vec<&CredalSet> = ks.iter().collect();
            let ind = independent_bounds(&refs).unwrap();
            let dep = dependent_bounds(&refs).unwrap();
            prop_assert!(dep.lower() + TOL >= ind.lower());
            prop_assert!(dep.upper() + TOL >= ind.upper());
        }

        #[test]
        fn aggregation_is_permutation_invariant(ks in credal_sets(6), seed in any::<u64>()) {
            let refs: Vec<&CredalSet> = ks.iter().collect();
            let mut shuffled = refs.clone();
            let len = shuffled.len();
            shuffled.rotate_left((seed as usize) % len);
            shuffled.reverse();
            prop_assert!(independent_bounds(&refs).unwrap()
                .approx_eq(&independent_bounds(&shuffled).unwrap(), TOL));
            prop_assert_eq!(dependent_credal_set(&refs).unwrap(), dependent_credal_set(&shuffled).unwrap());
        }

        #[test]
        fn all_ones_factor_is_identity(ks in credal_sets(5)) {
            let ones = CredalSet::new(vec![1.0; ks[0].len()]).unwrap();
            let mut refs: Vec<&CredalSet> = ks.iter().collect();
            let before = independent_bounds(&refs).unwrap();
            refs.push(&ones);
            prop_assert_eq!(before, independent_bounds(&refs).unwrap());
        }

        #[test]
        fn single_agent_gives_point_intervals(values in prop::collection::vec(0.0f64..=1.0, 1..6)) {
            let ks: Vec<CredalSet> = values.iter().map(|&v| k(&[v])).collect();
            let refs: Vec<&CredalSet> = ks.iter().collect();
            for iv in [independent_bounds(&refs).unwrap(), dependent_bounds(&refs).unwrap(), single_bounds(&ks[0]).unwrap()] {
                prop_assert_eq!(iv.lower(), iv.upper());
                prop_assert!((0.0..=1.0).contains(&iv.lower()));
            }
        }
    }
}
