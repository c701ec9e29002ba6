//! Simple undirected graphs with stable vertex labels.
//!
//! Vertices are arbitrary non-negative integers. Deleting vertices never
//! renumbers the survivors, so a kernel trace can name deleted vertices by the
//! labels of the original instance. Compaction to `0..n` happens only on
//! request ([`Graph::compacted`], [`Graph::induced_subgraph`]) or when writing
//! a file.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::GraphError;

/// Vertex label.
pub type Vertex = usize;

/// Old label → new label, produced whenever a graph is relabelled.
pub type IdMap = BTreeMap<Vertex, Vertex>;

/// A simple undirected graph with optional positive vertex weights.
///
/// Weights default to 1 when absent, so weighted and unweighted code paths
/// share this one type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    weights: Option<BTreeMap<Vertex, u64>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on vertices `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        g
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an isolated vertex. Returns false if it was already present.
    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        if let Some(w) = self.weights.as_mut() {
            w.insert(v, 1);
        }
        true
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        if !self.adj.get_mut(&u).expect("checked").insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj.get_mut(&v).expect("checked").insert(u);
        Ok(())
    }

    /// Sets the weight of `v`; switches the graph to weighted mode.
    pub fn set_weight(&mut self, v: Vertex, weight: u64) -> Result<(), GraphError> {
        if !self.adj.contains_key(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight(v));
        }
        let vertices: Vec<Vertex> = self.adj.keys().copied().collect();
        let w = self
            .weights
            .get_or_insert_with(|| vertices.into_iter().map(|x| (x, 1)).collect());
        w.insert(v, weight);
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Neighbours of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Weight of `v`, 1 when the graph carries no weights.
    pub fn weight(&self, v: Vertex) -> u64 {
        self.weights
            .as_ref()
            .and_then(|w| w.get(&v).copied())
            .unwrap_or(1)
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weights(&self) -> Option<&BTreeMap<Vertex, u64>> {
        self.weights.as_ref()
    }

    /// Open neighbourhood of a vertex set.
    pub fn neighborhood(&self, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        set.iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|u| !set.contains(u))
            .collect()
    }

    pub fn is_independent(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter()
            .all(|&v| self.neighbors(v).iter().all(|u| !set.contains(u)))
    }

    pub fn is_vertex_cover(&self, set: &BTreeSet<Vertex>) -> bool {
        self.edges()
            .all(|(u, v)| set.contains(&u) || set.contains(&v))
    }

    /// Complement on the same vertex set (weights are kept).
    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self
            .adj
            .iter()
            .map(|(&v, n)| {
                let comp: BTreeSet<Vertex> =
                    all.iter().copied().filter(|&u| u != v && !n.contains(&u)).collect();
                (v, comp)
            })
            .collect();
        Graph {
            adj,
            weights: self.weights.clone(),
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut parts = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut part = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if seen.insert(u) {
                        part.push(u);
                        queue.push_back(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Copy without the given vertices; surviving labels are unchanged.
    /// Unknown labels in `removed` are ignored.
    pub fn without_vertices(&self, removed: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !removed.contains(v))
            .map(|(&v, n)| (v, n.iter().copied().filter(|u| !removed.contains(u)).collect()))
            .collect();
        let weights = self.weights.as_ref().map(|w| {
            w.iter()
                .filter(|(v, _)| !removed.contains(v))
                .map(|(&v, &x)| (v, x))
                .collect()
        });
        Graph { adj, weights }
    }

    /// `G[keep]`, relabelled to `0..|keep|` in ascending label order.
    pub fn induced_subgraph(&self, keep: &BTreeSet<Vertex>) -> Result<(Graph, IdMap), GraphError> {
        if let Some(&v) = keep.iter().find(|&&v| !self.contains(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let removed: BTreeSet<Vertex> = self.vertices().filter(|v| !keep.contains(v)).collect();
        Ok(self.without_vertices(&removed).compacted())
    }

    /// Relabels vertices to `0..n` preserving order.
    pub fn compacted(&self) -> (Graph, IdMap) {
        let map: IdMap = self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        (self.relabeled(&map), map)
    }

    /// Applies an injective relabelling that covers every vertex.
    pub fn relabeled(&self, map: &IdMap) -> Graph {
        let adj = self
            .adj
            .iter()
            .map(|(v, n)| (map[v], n.iter().map(|u| map[u]).collect()))
            .collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| w.iter().map(|(v, &x)| (map[v], x)).collect());
        Graph { adj, weights }
    }

    /// Total weight of a vertex set.
    pub fn weight_of<'a>(&self, set: impl IntoIterator<Item = &'a Vertex>) -> u64 {
        set.into_iter().map(|&v| self.weight(v)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::with_vertices(2);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 5), Err(GraphError::UnknownVertex(5)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(g.set_weight(1, 0), Err(GraphError::ZeroWeight(1)));
    }

    #[test]
    fn complement_of_empty_and_triangle() {
        let empty = Graph::with_vertices(3);
        assert_eq!(empty.complement(), triangle());
        assert_eq!(triangle().complement(), empty);
    }

    #[test]
    fn components_of_two_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(triangle().connected_components().len(), 1);
    }

    #[test]
    fn induced_subgraph_of_triangle() {
        let g = triangle();
        let (h, map) = g.induced_subgraph(&[0, 2].into()).unwrap();
        assert_eq!(h.num_vertices(), 2);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(map, IdMap::from([(0, 0), (2, 1)]));

        let (same, id) = g.induced_subgraph(&g.vertex_set()).unwrap();
        assert_eq!(same, g);
        assert!(id.iter().all(|(a, b)| a == b));

        assert_eq!(
            g.induced_subgraph(&[7].into()).unwrap_err(),
            GraphError::UnknownVertex(7)
        );
    }

    #[test]
    fn weights_default_to_one() {
        let mut g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!g.is_weighted());
        assert_eq!(g.weight(2), 1);
        g.set_weight(2, 4).unwrap();
        assert_eq!(g.weight_of(&[0, 1, 2]), 6);
        let h = g.without_vertices(&[0].into());
        assert_eq!(h.weight(2), 4);
        assert!(!h.contains(0));
        assert_eq!(h.num_edges(), 0);
    }
}
