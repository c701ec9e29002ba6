//! Bipartite graphs `(A ⊎ B, E)`, optionally vertex-weighted.
//!
//! Each side is stored as a sorted list of labels; algorithms address
//! vertices by their position on their side ("index"), certificates and
//! other public results use labels.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    side_a: Vec<Vertex>,
    side_b: Vec<Vertex>,
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a bipartite graph; each edge is given as `(a, b)` or `(b, a)`.
    /// Repeated edges are merged.
    pub fn new(
        side_a: impl IntoIterator<Item = Vertex>,
        side_b: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let side_a: Vec<Vertex> = side_a.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let side_b: Vec<Vertex> = side_b.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&v) = side_a.iter().find(|v| side_b.binary_search(v).is_ok()) {
            return Err(GraphError::SharedVertex(v));
        }
        let mut adj_a = vec![BTreeSet::new(); side_a.len()];
        for (u, v) in edges {
            let (i, j) = match (side_a.binary_search(&u), side_b.binary_search(&v)) {
                (Ok(i), Ok(j)) => (i, j),
                _ => match (side_a.binary_search(&v), side_b.binary_search(&u)) {
                    (Ok(i), Ok(j)) => (i, j),
                    _ => {
                        let known = |x: &Vertex| {
                            side_a.binary_search(x).is_ok() || side_b.binary_search(x).is_ok()
                        };
                        if !known(&u) {
                            return Err(GraphError::UnknownVertex(u));
                        }
                        if !known(&v) {
                            return Err(GraphError::UnknownVertex(v));
                        }
                        return Err(GraphError::NonCrossingEdge(u, v));
                    }
                },
            };
            adj_a[i].insert(j);
        }
        Ok(Self::from_sets(side_a, side_b, adj_a))
    }

    /// Side A labelled `0..na`, side B labelled `na..na+nb`; edges are given as
    /// `(a_index, b_index)`.
    ///
    /// # Panics
    /// If an index is out of range.
    pub fn from_indices(na: usize, nb: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj_a = vec![BTreeSet::new(); na];
        for &(i, j) in edges {
            assert!(i < na && j < nb, "edge ({i}, {j}) out of range");
            adj_a[i].insert(j);
        }
        Self::from_sets((0..na).collect(), (na..na + nb).collect(), adj_a)
    }

    fn from_sets(side_a: Vec<Vertex>, side_b: Vec<Vertex>, adj_a: Vec<BTreeSet<usize>>) -> Self {
        let mut adj_b = vec![Vec::new(); side_b.len()];
        for (i, n) in adj_a.iter().enumerate() {
            for &j in n {
                adj_b[j].push(i);
            }
        }
        Self {
            side_a,
            side_b,
            adj_a: adj_a.into_iter().map(|s| s.into_iter().collect()).collect(),
            adj_b,
        }
    }

    pub fn num_a(&self) -> usize {
        self.side_a.len()
    }

    pub fn num_b(&self) -> usize {
        self.side_b.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj_a.iter().map(Vec::len).sum()
    }

    pub fn side_a(&self) -> &[Vertex] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[Vertex] {
        &self.side_b
    }

    pub fn a_label(&self, i: usize) -> Vertex {
        self.side_a[i]
    }

    pub fn b_label(&self, j: usize) -> Vertex {
        self.side_b[j]
    }

    pub fn a_index(&self, v: Vertex) -> Option<usize> {
        self.side_a.binary_search(&v).ok()
    }

    pub fn b_index(&self, v: Vertex) -> Option<usize> {
        self.side_b.binary_search(&v).ok()
    }

    /// B-indices adjacent to A-index `i`, ascending.
    pub fn neighbors_a(&self, i: usize) -> &[usize] {
        &self.adj_a[i]
    }

    /// A-indices adjacent to B-index `j`, ascending.
    pub fn neighbors_b(&self, j: usize) -> &[usize] {
        &self.adj_b[j]
    }

    pub fn adjacency_a(&self) -> &[Vec<usize>] {
        &self.adj_a
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj_a[i].binary_search(&j).is_ok()
    }

    /// Edge test by labels, in either orientation.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.a_index(u), self.b_index(v)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => match (self.a_index(v), self.b_index(u)) {
                (Some(i), Some(j)) => self.has_edge_idx(i, j),
                _ => false,
            },
        }
    }

    /// Edges as `(a_index, b_index)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.iter().map(move |&j| (i, j)))
    }

    /// Neighbour labels of any vertex label.
    pub fn neighbors_of(&self, v: Vertex) -> Vec<Vertex> {
        if let Some(i) = self.a_index(v) {
            self.adj_a[i].iter().map(|&j| self.side_b[j]).collect()
        } else if let Some(j) = self.b_index(v) {
            self.adj_b[j].iter().map(|&i| self.side_a[i]).collect()
        } else {
            Vec::new()
        }
    }

    /// The same graph as a plain [`Graph`] on the union of both sides.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new();
        for &v in self.side_a.iter().chain(&self.side_b) {
            g.add_vertex(v);
        }
        for (i, j) in self.edges() {
            g.add_edge(self.side_a[i], self.side_b[j])
                .expect("bipartite edges are simple");
        }
        g
    }

    /// Subgraph induced by the given index sets (labels preserved).
    pub fn restrict(&self, keep_a: &[usize], keep_b: &[usize]) -> BipartiteGraph {
        let sorted_a: BTreeSet<usize> = keep_a.iter().copied().collect();
        let sorted_b: BTreeSet<usize> = keep_b.iter().copied().collect();
        let side_a = sorted_a.iter().map(|&i| self.side_a[i]).collect();
        let side_b = sorted_b.iter().map(|&j| self.side_b[j]).collect();
        let b_pos: BTreeMap<usize, usize> = sorted_b.iter().enumerate().map(|(p, &j)| (j, p)).collect();
        let adj_a = sorted_a
            .iter()
            .map(|&i| self.adj_a[i].iter().filter_map(|j| b_pos.get(j).copied()).collect())
            .collect();
        Self::from_sets(side_a, side_b, adj_a)
    }

    /// Subgraph induced by label sets; labels not on the matching side are ignored.
    pub fn restrict_labels(&self, keep_a: &BTreeSet<Vertex>, keep_b: &BTreeSet<Vertex>) -> BipartiteGraph {
        let ia: Vec<usize> = keep_a.iter().filter_map(|&v| self.a_index(v)).collect();
        let ib: Vec<usize> = keep_b.iter().filter_map(|&v| self.b_index(v)).collect();
        self.restrict(&ia, &ib)
    }

    /// First isolated vertex of side B, if any.
    pub fn isolated_b(&self) -> Option<Vertex> {
        self.adj_b
            .iter()
            .position(Vec::is_empty)
            .map(|j| self.side_b[j])
    }

    pub fn isolated_a(&self) -> Option<Vertex> {
        self.adj_a
            .iter()
            .position(Vec::is_empty)
            .map(|i| self.side_a[i])
    }
}

/// A bipartite graph with positive integer weights on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBipartiteGraph {
    base: BipartiteGraph,
    weight_a: Vec<u64>,
    weight_b: Vec<u64>,
    w_b_max: u64,
}

impl WeightedBipartiteGraph {
    /// Weights are looked up by label; missing labels get weight 1.
    pub fn new(base: BipartiteGraph, weights: &BTreeMap<Vertex, u64>) -> Result<Self, GraphError> {
        let lookup = |v: &Vertex| -> Result<u64, GraphError> {
            match weights.get(v).copied().unwrap_or(1) {
                0 => Err(GraphError::ZeroWeight(*v)),
                w => Ok(w),
            }
        };
        let weight_a = base.side_a.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        let weight_b = base.side_b.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_parts(base, weight_a, weight_b))
    }

    /// All weights 1.
    pub fn unit(base: BipartiteGraph) -> Self {
        let (na, nb) = (base.num_a(), base.num_b());
        Self::from_parts(base, vec![1; na], vec![1; nb])
    }

    /// Index-aligned weights.
    ///
    /// # Panics
    /// If a length does not match its side or a weight is 0.
    pub fn from_index_weights(base: BipartiteGraph, weight_a: Vec<u64>, weight_b: Vec<u64>) -> Self {
        assert_eq!(weight_a.len(), base.num_a());
        assert_eq!(weight_b.len(), base.num_b());
        assert!(weight_a.iter().chain(&weight_b).all(|&w| w >= 1), "weights must be positive");
        Self::from_parts(base, weight_a, weight_b)
    }

    fn from_parts(base: BipartiteGraph, weight_a: Vec<u64>, weight_b: Vec<u64>) -> Self {
        let w_b_max = weight_b.iter().copied().max().unwrap_or(0);
        Self {
            base,
            weight_a,
            weight_b,
            w_b_max,
        }
    }

    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn weight_a(&self, i: usize) -> u64 {
        self.weight_a[i]
    }

    pub fn weight_b(&self, j: usize) -> u64 {
        self.weight_b[j]
    }

    /// Weight of any label, `None` if unknown.
    pub fn weight(&self, v: Vertex) -> Option<u64> {
        self.base
            .a_index(v)
            .map(|i| self.weight_a[i])
            .or_else(|| self.base.b_index(v).map(|j| self.weight_b[j]))
    }

    /// Maximum weight over side B; 0 when B is empty.
    pub fn w_b_max(&self) -> u64 {
        self.w_b_max
    }

    pub fn total_weight_a(&self) -> u64 {
        self.weight_a.iter().sum()
    }

    pub fn total_weight_b(&self) -> u64 {
        self.weight_b.iter().sum()
    }
}
