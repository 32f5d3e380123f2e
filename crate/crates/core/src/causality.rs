//! Causality graph over the arguments of a framework.
//!
//! Causal edges are a second relation next to attacks: `(A, B)` reads "A
//! causes B". The graph must be acyclic, free of self-edges, and must never
//! relate two arguments that are linked by an attack in either direction.

use std::collections::BTreeSet;

use crate::af::{ArgumentId, ArgumentationFramework};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalityGraph {
    arguments: Vec<ArgumentId>,
    edges: BTreeSet<(usize, usize)>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
    /// Transitive causes of each argument.
    ancestors: Vec<BTreeSet<usize>>,
}

/// Split of the arguments into effects, causes and isolated arguments.
///
/// `effects` and `causes` may overlap; `isolated` is disjoint from both.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CausalPartition {
    pub effects: BTreeSet<ArgumentId>,
    pub causes: BTreeSet<ArgumentId>,
    pub isolated: BTreeSet<ArgumentId>,
}

impl CausalityGraph {
    pub fn new<E>(af: &ArgumentationFramework, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (ArgumentId, ArgumentId)>,
    {
        let n = af.len();
        let mut graph = Self {
            arguments: af.arguments().to_vec(),
            edges: BTreeSet::new(),
            successors: vec![Vec::new(); n],
            predecessors: vec![Vec::new(); n],
            ancestors: vec![BTreeSet::new(); n],
        };
        for (cause, effect) in edges {
            let i = af.require(&cause)?;
            let j = af.require(&effect)?;
            if i == j {
                return Err(Error::CausalSelfEdge(cause));
            }
            if af.attacks_between(&cause, &effect) || af.attacks_between(&effect, &cause) {
                return Err(Error::CausalAttackOverlap(cause, effect));
            }
            if graph.edges.insert((i, j)) {
                graph.successors[i].push(j);
                graph.predecessors[j].push(i);
            }
        }
        for list in graph
            .successors
            .iter_mut()
            .chain(graph.predecessors.iter_mut())
        {
            list.sort_unstable();
        }
        graph.close()?;
        Ok(graph)
    }

    /// Graph without causal edges: every argument is isolated.
    pub fn empty(af: &ArgumentationFramework) -> Self {
        Self::new(af, std::iter::empty()).expect("edgeless graph is always valid")
    }

    /// Topologically orders the arguments (rejecting cycles) and fills the
    /// ancestor sets along that order.
    fn close(&mut self) -> Result<()> {
        let n = self.arguments.len();
        let mut indegree: Vec<usize> = self.predecessors.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in &self.successors[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        if order.len() < n {
            return Err(Error::CausalCycle(self.find_cycle(&indegree)));
        }
        for &j in &order {
            let mut acc = BTreeSet::new();
            for &i in &self.predecessors[j] {
                acc.insert(i);
                acc.extend(self.ancestors[i].iter().copied());
            }
            self.ancestors[j] = acc;
        }
        Ok(())
    }

    /// Walks backwards through arguments left over by the topological sort
    /// until one repeats; every such argument has a leftover predecessor.
    fn find_cycle(&self, indegree: &[usize]) -> Vec<ArgumentId> {
        let start = (0..indegree.len())
            .find(|&i| indegree[i] > 0)
            .expect("leftover argument");
        let mut path = vec![start];
        let mut current = start;
        loop {
            current = *self.predecessors[current]
                .iter()
                .find(|&&p| indegree[p] > 0)
                .expect("leftover predecessor");
            if let Some(pos) = path.iter().position(|&p| p == current) {
                let mut cycle: Vec<usize> = path[pos..].to_vec();
                cycle.reverse();
                return cycle
                    .into_iter()
                    .map(|i| self.arguments[i].clone())
                    .collect();
            }
            path.push(current);
        }
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    /// Causal edges in canonical (cause, effect) order.
    pub fn edges(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (&self.arguments[i], &self.arguments[j]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn require(&self, id: &ArgumentId) -> Result<usize> {
        self.arguments
            .binary_search(id)
            .map_err(|_| Error::UnknownArgument(id.clone()))
    }

    pub(crate) fn indices(&self, set: &BTreeSet<ArgumentId>) -> Result<BTreeSet<usize>> {
        set.iter().map(|id| self.require(id)).collect()
    }

    pub(crate) fn id(&self, i: usize) -> &ArgumentId {
        &self.arguments[i]
    }

    fn ids<'a>(&self, indices: impl IntoIterator<Item = &'a usize>) -> BTreeSet<ArgumentId> {
        indices
            .into_iter()
            .map(|&i| self.arguments[i].clone())
            .collect()
    }

    pub(crate) fn is_effect(&self, i: usize) -> bool {
        !self.predecessors[i].is_empty()
    }

    pub(crate) fn is_cause(&self, i: usize) -> bool {
        !self.successors[i].is_empty()
    }

    pub(crate) fn ancestor_indices(&self, i: usize) -> &BTreeSet<usize> {
        &self.ancestors[i]
    }

    pub fn partition(&self) -> CausalPartition {
        let mut part = CausalPartition::default();
        for (i, id) in self.arguments.iter().enumerate() {
            if self.is_effect(i) {
                part.effects.insert(id.clone());
            }
            if self.is_cause(i) {
                part.causes.insert(id.clone());
            }
            if !self.is_effect(i) && !self.is_cause(i) {
                part.isolated.insert(id.clone());
            }
        }
        part
    }

    /// Every argument with a directed causal path into `argument`.
    pub fn causal_ancestors(&self, argument: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.require(argument)?;
        Ok(self.ids(&self.ancestors[i]))
    }

    pub fn direct_successors(&self, argument: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.require(argument)?;
        Ok(self.ids(&self.successors[i]))
    }

    pub(crate) fn top_indices(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter()
            .copied()
            .filter(|&a| self.is_effect(a))
            .filter(|&a| !set.iter().any(|&b| self.ancestors[b].contains(&a)))
            .collect()
    }

    pub(crate) fn free_indices(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let tops = self.top_indices(set);
        set.iter()
            .copied()
            .filter(|&a| self.is_cause(a) && !tops.contains(&a))
            .filter(|&a| self.successors[a].iter().all(|s| !set.contains(s)))
            .collect()
    }

    /// Members of `set` that are caused by something and cause nothing in `set`,
    /// directly or transitively.
    pub fn top_cau(&self, set: &BTreeSet<ArgumentId>) -> Result<BTreeSet<ArgumentId>> {
        Ok(self.ids(&self.top_indices(&self.indices(set)?)))
    }

    /// Members of `set` that cause something, but none of whose direct
    /// effects are in `set`. Arguments already in [`Self::top_cau`] are
    /// excluded: an effect whose own effects lie outside `set` anchors a group.
    pub fn free_cau(&self, set: &BTreeSet<ArgumentId>) -> Result<BTreeSet<ArgumentId>> {
        Ok(self.ids(&self.free_indices(&self.indices(set)?)))
    }
}
