//! Agent-by-agent re-derivation of extension bounds.
//!
//! Works from the raw causal edge list and profile values only: reachability
//! comes from a Warshall closure rather than the graph's cached ancestor
//! sets, and each agent's joint valuation is computed in one pass instead of
//! building intermediate credal sets. Used to cross-check [`super::ul_bounds`].

use std::collections::{BTreeMap, BTreeSet};

use crate::af::ArgumentId;
use crate::causality::CausalityGraph;
use crate::credal::{CredalProfile, ProbabilityInterval};
use crate::{CoverageError, Result};

/// For each agent j, value_j is the product over causal groups of the
/// group's minimum opinion times the product of the opinions of isolated
/// and free members. The interval spans the min and max of value_j.
pub fn agent_valuation_oracle(
    members: &BTreeSet<ArgumentId>,
    profile: &CredalProfile,
    cg: &CausalityGraph,
) -> Result<ProbabilityInterval> {
    if members.is_empty() {
        return Ok(ProbabilityInterval::ignorance());
    }
    let names: Vec<&ArgumentId> = cg.arguments().iter().collect();
    let position: BTreeMap<&ArgumentId, usize> =
        names.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let n = names.len();

    let mut reach = vec![vec![false; n]; n];
    let mut has_in = vec![false; n];
    let mut has_out = vec![false; n];
    let mut edges = Vec::new();
    for (cause, effect) in cg.edges() {
        let (c, e) = (position[cause], position[effect]);
        reach[c][e] = true;
        has_out[c] = true;
        has_in[e] = true;
        edges.push((c, e));
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let via = reach[k].clone();
                for (target, reachable) in reach[i].iter_mut().zip(via) {
                    *target |= reachable;
                }
            }
        }
    }

    let mut inside = vec![false; n];
    for m in members {
        let i = *position
            .get(m)
            .ok_or_else(|| crate::Error::UnknownArgument(m.clone()))?;
        inside[i] = true;
    }
    let chosen: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();

    let tops: Vec<usize> = chosen
        .iter()
        .copied()
        .filter(|&a| has_in[a] && !chosen.iter().any(|&b| reach[a][b]))
        .collect();
    let groups: Vec<Vec<usize>> = tops
        .iter()
        .map(|&t| {
            chosen
                .iter()
                .copied()
                .filter(|&b| b == t || reach[b][t])
                .collect()
        })
        .collect();
    let singles: Vec<usize> = chosen
        .iter()
        .copied()
        .filter(|&a| {
            let isolated = !has_in[a] && !has_out[a];
            let free = has_out[a]
                && !tops.contains(&a)
                && edges.iter().all(|&(c, e)| c != a || !inside[e]);
            isolated || free
        })
        .collect();

    for &a in &chosen {
        let holding: Vec<usize> = (0..groups.len())
            .filter(|&g| groups[g].contains(&a))
            .collect();
        let count = holding.len() + usize::from(singles.contains(&a));
        if count == 0 {
            return Err(CoverageError::Uncovered(names[a].clone()).into());
        }
        if count > 1 {
            return Err(CoverageError::Overlap {
                argument: names[a].clone(),
                tops: holding.iter().map(|&g| names[tops[g]].clone()).collect(),
            }
            .into());
        }
    }

    let opinion =
        |a: usize, j: usize| -> Result<f64> { Ok(profile.credal_set(names[a])?.opinion(j)) };
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for j in 0..profile.agent_count() {
        let mut value = 1.0;
        for group in &groups {
            let mut least = f64::INFINITY;
            for &a in group {
                least = least.min(opinion(a, j)?);
            }
            value *= least;
        }
        for &a in &singles {
            value *= opinion(a, j)?;
        }
        lower = lower.min(value);
        upper = upper.max(value);
    }
    ProbabilityInterval::new(lower, upper)
}
