//! Graph structure of the attack relation: strongly connected components,
//! the condensation DAG, and ancestor sets.
//!
//! Attack degrees are irrelevant here; any present attack is an edge.
//! Components are numbered by their smallest member index, which is the
//! lexicographically smallest member id, so numbering and traversal order
//! are reproducible across runs.

use crate::framework::Faf;
use crate::fuzzyset::FuzzySet;
use std::collections::BinaryHeap;

/// Partition of the arguments into strongly connected components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SccPartition {
    components: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl SccPartition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Member argument indices of one component, ascending.
    pub fn members(&self, ordinal: usize) -> &[usize] {
        &self.components[ordinal]
    }

    pub fn components(&self) -> impl Iterator<Item = &[usize]> {
        self.components.iter().map(|c| c.as_slice())
    }

    /// Component ordinal of an argument index.
    pub fn component_of(&self, arg: usize) -> usize {
        self.index[arg]
    }

    /// One component as a fuzzy set at full argument degrees.
    pub fn component_fuzzy(&self, faf: &Faf, ordinal: usize) -> FuzzySet {
        self.components[ordinal]
            .iter()
            .map(|&i| (faf.arg_id(i).to_string(), faf.arg_degree(i)))
            .collect()
    }
}

/// Computes the strongly connected components of the attack digraph.
pub fn compute_sccs(faf: &Faf) -> SccPartition {
    let n = faf.arg_count();
    let unvisited = usize::MAX;
    let mut disc = vec![unvisited; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    let mut components: Vec<Vec<usize>> = Vec::new();

    for start in 0..n {
        if disc[start] != unvisited {
            continue;
        }
        disc[start] = next;
        low[start] = next;
        next += 1;
        stack.push(start);
        on_stack[start] = true;
        frames.push((start, 0));

        while let Some(&(v, ei)) = frames.last() {
            let targets = faf.targets(v);
            if ei < targets.len() {
                frames.last_mut().unwrap().1 += 1;
                let w = targets[ei].0;
                if disc[w] == unvisited {
                    disc[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (p, _)) = frames.last_mut() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == disc[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }

    components.sort_by_key(|c| c[0]);
    let mut index = vec![0usize; n];
    for (ord, comp) in components.iter().enumerate() {
        for &i in comp {
            index[i] = ord;
        }
    }
    SccPartition { components, index }
}

/// The component-level DAG with a deterministic topological order and
/// per-component ancestor sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condensation {
    edges: Vec<(usize, usize)>,
    parents: Vec<Vec<usize>>,
    topo_order: Vec<usize>,
    ancestors: Vec<Vec<usize>>,
}

impl Condensation {
    pub fn node_count(&self) -> usize {
        self.parents.len()
    }

    /// Inter-component edges (attacker ordinal, attacked ordinal), sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Ordinals of the components directly attacking this one, ascending.
    pub fn parents(&self, ordinal: usize) -> &[usize] {
        &self.parents[ordinal]
    }

    /// Topological order; attackers precede the attacked, ties broken by
    /// smallest ordinal (hence smallest member id).
    pub fn topo_order(&self) -> &[usize] {
        &self.topo_order
    }

    /// All components from which this one is reachable, ascending.
    pub fn ancestors(&self, ordinal: usize) -> &[usize] {
        &self.ancestors[ordinal]
    }

    pub fn is_initial(&self, ordinal: usize) -> bool {
        self.parents[ordinal].is_empty()
    }
}

/// Builds the condensation of the partition.
pub fn condensation(faf: &Faf, p: &SccPartition) -> Condensation {
    let k = p.count();
    let mut edges: Vec<(usize, usize)> = faf
        .attacks()
        .iter()
        .filter_map(|a| {
            let (ca, cb) = (p.component_of(a.from), p.component_of(a.to));
            (ca != cb).then_some((ca, cb))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();

    let mut parents = vec![Vec::new(); k];
    let mut children = vec![Vec::new(); k];
    for &(a, b) in &edges {
        parents[b].push(a);
        children[a].push(b);
    }

    let mut indegree: Vec<usize> = parents.iter().map(|p| p.len()).collect();
    let mut ready: BinaryHeap<std::cmp::Reverse<usize>> = (0..k)
        .filter(|&s| indegree[s] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut topo_order = Vec::with_capacity(k);
    while let Some(std::cmp::Reverse(s)) = ready.pop() {
        topo_order.push(s);
        for &c in &children[s] {
            indegree[c] -= 1;
            if indegree[c] == 0 {
                ready.push(std::cmp::Reverse(c));
            }
        }
    }
    debug_assert_eq!(topo_order.len(), k, "condensation must be acyclic");

    let mut ancestors: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &s in &topo_order {
        let mut anc: Vec<usize> = Vec::new();
        for &par in &parents[s] {
            anc.push(par);
            anc.extend_from_slice(&ancestors[par]);
        }
        anc.sort_unstable();
        anc.dedup();
        ancestors[s] = anc;
    }

    Condensation { edges, parents, topo_order, ancestors }
}

/// Whether the whole framework is one strongly connected component.
pub fn is_single_scc(faf: &Faf) -> bool {
    compute_sccs(faf).count() == 1
}
