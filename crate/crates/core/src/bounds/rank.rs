//! Heuristic ordering of bounded extensions.
//!
//! This is not a decision rule. Intervals are ordered by dominance where one
//! interval is at least as high in both bounds and strictly higher in one;
//! otherwise by midpoint, and ties fall back to the member list.

use std::cmp::Ordering;

use super::BoundsResult;
use crate::credal::ProbabilityInterval;

/// `a` dominates `b` when both of its bounds are at least as high and one
/// is strictly higher.
pub fn dominates(a: &ProbabilityInterval, b: &ProbabilityInterval) -> bool {
    a.lower() >= b.lower()
        && a.upper() >= b.upper()
        && (a.lower() > b.lower() || a.upper() > b.upper())
}

/// Best-first ordering. Dominance implies a strictly larger midpoint, so
/// sorting by descending midpoint never contradicts it.
pub fn rank_extensions(mut results: Vec<BoundsResult>) -> Vec<BoundsResult> {
    results.sort_by(compare);
    results
}

fn compare(a: &BoundsResult, b: &BoundsResult) -> Ordering {
    b.interval
        .midpoint()
        .total_cmp(&a.interval.midpoint())
        .then_with(|| {
            a.extension
                .members()
                .iter()
                .cmp(b.extension.members().iter())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::{ArgumentId, ArgumentationFramework, Extension, Semantics};
    use crate::bounds::BoundsCase;
    use proptest::prelude::*;

    fn result(
        af: &ArgumentationFramework,
        members: &[&str],
        lower: f64,
        upper: f64,
    ) -> BoundsResult {
        BoundsResult {
            extension: Extension::new(
                members
                    .iter()
                    .map(|m| ArgumentId::new(*m).unwrap())
                    .collect(),
                Semantics::ConflictFree,
                af,
            )
            .unwrap(),
            interval: ProbabilityInterval::new(lower, upper).unwrap(),
            case: BoundsCase::Algorithm,
            groups: Vec::new(),
        }
    }

    fn order(ranked: &[BoundsResult]) -> Vec<String> {
        ranked.iter().map(|r| r.extension.to_string()).collect()
    }

    #[test]
    fn dominating_interval_comes_first() {
        let af = ArgumentationFramework::from_names(&["A", "B"], &[]).unwrap();
        let ranked = rank_extensions(vec![
            result(&af, &["B"], 0.02, 0.1875),
            result(&af, &["A"], 0.2, 0.75),
        ]);
        assert_eq!(order(&ranked), ["{A}", "{B}"]);
    }

    #[test]
    fn equal_intervals_tie_break_on_members() {
        let af = ArgumentationFramework::from_names(&["A", "B", "C"], &[]).unwrap();
        let ranked = rank_extensions(vec![
            result(&af, &["B", "C"], 0.3, 0.6),
            result(&af, &["A", "C"], 0.3, 0.6),
            result(&af, &["B"], 0.3, 0.6),
        ]);
        assert_eq!(order(&ranked), ["{A,C}", "{B}", "{B,C}"]);
    }

    #[test]
    fn incomparable_intervals_use_midpoint() {
        let af = ArgumentationFramework::from_names(&["A", "B"], &[]).unwrap();
        let ranked = rank_extensions(vec![
            result(&af, &["A"], 0.3, 0.5),
            result(&af, &["B"], 0.1, 0.9),
        ]);
        assert_eq!(order(&ranked), ["{B}", "{A}"]);
    }

    proptest! {
        #[test]
        fn ranking_respects_dominance(bounds in prop::collection::vec((0.0f64..=1.0, 0.0f64..=1.0), 1..8)) {
            let names: Vec<String> = (0..bounds.len()).map(|i| format!("a{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let af = ArgumentationFramework::from_names(&refs, &[]).unwrap();
            let results: Vec<BoundsResult> = bounds
                .iter()
                .zip(&refs)
                .map(|(&(x, y), name)| result(&af, &[name], x.min(y), x.max(y)))
                .collect();
            let ranked = rank_extensions(results);
            for (i, earlier) in ranked.iter().enumerate() {
                for later in &ranked[i + 1..] {
                    prop_assert!(!dominates(&later.interval, &earlier.interval));
                }
            }
        }
    }
}
