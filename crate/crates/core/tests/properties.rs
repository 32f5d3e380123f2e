use std::collections::{BTreeMap, BTreeSet};

use credal_af::{
    agent_valuation_oracle, dependent_bounds, enumerate, extension_bounds, independent_bounds,
    ArgumentId, ArgumentationFramework, CausalityGraph, CredalProfile, CredalSet, Error, Semantics,
};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Case {
    n: usize,
    attacks: Vec<(usize, usize)>,
    causal: Vec<(usize, usize)>,
    opinions: Vec<Vec<f64>>,
}

fn case(max_n: usize) -> impl Strategy<Value = Case> {
    (1..=max_n, 1usize..=4).prop_flat_map(|(n, m)| {
        let pairs = prop::collection::vec((0..n, 0..n), 0..=n * 2);
        let causal = prop::collection::vec((0..n, 0..n), 0..=n * 2);
        let opinions = prop::collection::vec(prop::collection::vec(0.0f64..=1.0, m), n);
        (Just(n), pairs, causal, opinions).prop_map(|(n, attacks, causal, opinions)| {
            let attacks: Vec<(usize, usize)> =
                attacks.into_iter().filter(|(a, b)| a != b).collect();
            let causal = causal
                .into_iter()
                .filter(|&(a, b)| a < b && !attacks.contains(&(a, b)) && !attacks.contains(&(b, a)))
                .collect();
            Case {
                n,
                attacks,
                causal,
                opinions,
            }
        })
    })
}

struct Built {
    af: ArgumentationFramework,
    cg: CausalityGraph,
    profile: CredalProfile,
}

fn build(c: &Case, prefix: &str, agents: &[usize], with_causality: bool) -> Built {
    let name = |i: usize| ArgumentId::new(format!("{prefix}{i}")).unwrap();
    let af = ArgumentationFramework::new(
        (0..c.n).map(name),
        c.attacks.iter().map(|&(a, b)| (name(a), name(b))),
    )
    .unwrap();
    let cg = if with_causality {
        CausalityGraph::new(&af, c.causal.iter().map(|&(a, b)| (name(a), name(b)))).unwrap()
    } else {
        CausalityGraph::empty(&af)
    };
    let map: BTreeMap<ArgumentId, CredalSet> = (0..c.n)
        .map(|i| {
            let values = agents.iter().map(|&j| c.opinions[i][j]).collect();
            (name(i), CredalSet::new(values).unwrap())
        })
        .collect();
    let profile = CredalProfile::new(&af, agents.len(), map).unwrap();
    Built { af, cg, profile }
}

fn all_agents(c: &Case) -> Vec<usize> {
    (0..c.opinions[0].len()).collect()
}

proptest! {
    #[test]
    fn without_causality_bounds_are_independent_products(c in case(7)) {
        let b = build(&c, "a", &all_agents(&c), false);
        for ext in enumerate(&b.af, Semantics::ConflictFree).unwrap() {
            if ext.len() < 2 {
                continue;
            }
            let got = extension_bounds(&ext, &b.profile, &b.cg).unwrap().interval;
            let sets: Vec<&CredalSet> =
                ext.members().iter().map(|a| b.profile.credal_set(a).unwrap()).collect();
            prop_assert!(got.approx_eq(&independent_bounds(&sets).unwrap(), 1e-12));
        }
    }

    #[test]
    fn causal_chain_inside_extension_is_one_dependent_group(values in prop::collection::vec(prop::collection::vec(0.0f64..=1.0, 3), 2..6)) {
        let n = values.len();
        let c = Case {
            n,
            attacks: Vec::new(),
            causal: (0..n - 1).map(|i| (i, i + 1)).collect(),
            opinions: values,
        };
        let b = build(&c, "a", &[0, 1, 2], true);
        let everything = enumerate(&b.af, Semantics::Stable).unwrap().pop().unwrap();
        let got = extension_bounds(&everything, &b.profile, &b.cg).unwrap().interval;
        let sets: Vec<&CredalSet> =
            everything.members().iter().map(|a| b.profile.credal_set(a).unwrap()).collect();
        prop_assert!(got.approx_eq(&dependent_bounds(&sets).unwrap(), 1e-12));
    }

    #[test]
    fn renaming_arguments_changes_nothing(c in case(7)) {
        let left = build(&c, "a", &all_agents(&c), true);
        let right = build(&c, "z_", &all_agents(&c), true);
        let rename = |a: &ArgumentId| -> ArgumentId {
            ArgumentId::new(format!("z_{}", &a.as_str()[1..])).unwrap()
        };
        for sem in Semantics::ALL {
            let l: BTreeSet<BTreeSet<ArgumentId>> = enumerate(&left.af, sem)
                .unwrap()
                .iter()
                .map(|e| e.members().iter().map(rename).collect())
                .collect();
            let r: BTreeSet<BTreeSet<ArgumentId>> =
                enumerate(&right.af, sem).unwrap().iter().map(|e| e.members().clone()).collect();
            prop_assert_eq!(l, r);
        }
        for ext in enumerate(&left.af, Semantics::ConflictFree).unwrap() {
            let renamed: BTreeSet<ArgumentId> = ext.members().iter().map(rename).collect();
            let a = agent_valuation_oracle(ext.members(), &left.profile, &left.cg);
            let b = agent_valuation_oracle(&renamed, &right.profile, &right.cg);
            match (a, b) {
                (Ok(x), Ok(y)) => prop_assert!(x.approx_eq(&y, 1e-12)),
                (Err(Error::Coverage(_)), Err(Error::Coverage(_))) => {}
                (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
            }
        }
    }

    #[test]
    fn fewer_agents_give_a_nested_interval(c in case(6), keep in any::<prop::sample::Index>()) {
        let agents = all_agents(&c);
        let first = keep.index(agents.len());
        let subset: Vec<usize> = agents.iter().copied().filter(|&j| j >= first).collect();
        let full = build(&c, "a", &agents, true);
        let part = build(&c, "a", &subset, true);
        for ext in enumerate(&full.af, Semantics::ConflictFree).unwrap() {
            let (Ok(wide), Ok(narrow)) = (
                extension_bounds(&ext, &full.profile, &full.cg),
                extension_bounds(&ext, &part.profile, &part.cg),
            ) else {
                continue;
            };
            prop_assert!(wide.interval.lower() <= narrow.interval.lower() + 1e-12);
            prop_assert!(narrow.interval.upper() <= wide.interval.upper() + 1e-12);
        }
    }
}
