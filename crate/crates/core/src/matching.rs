//! Maximum bipartite matching, Hall violators and capacitated assignment.
//!
//! The index-level routines take a left adjacency list (`adj[i]` = right
//! vertices adjacent to left vertex `i`) so callers can run them on derived
//! graphs (clones, blow-ups) without materialising a [`BipartiteGraph`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::bipartite::BipartiteGraph;
use crate::graph::Vertex;

/// A set of vertex-disjoint edges, stored as sorted label pairs.
///
/// For bipartite hosts the pair is `(a, b)`; for crown witnesses it is
/// `(head, crown)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(Vertex, Vertex)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Self { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// The partner of `v`, looking at both ends of each pair.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(x, y)| {
            if x == v {
                Some(y)
            } else if y == v {
                Some(x)
            } else {
                None
            }
        })
    }

    /// True if no vertex appears in two pairs and no pair is a loop.
    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(x, y)| x != y && seen.insert(x) && seen.insert(y))
    }

    /// Vertex-disjoint and every pair `(a, b)` is an edge of `g` with `a ∈ A`.
    pub fn is_valid_in(&self, g: &BipartiteGraph) -> bool {
        self.is_vertex_disjoint()
            && self
                .edges
                .iter()
                .all(|&(a, b)| g.a_index(a).is_some() && g.b_index(b).is_some() && g.has_edge(a, b))
    }
}

/// Index-level matching between a left side and a right side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMatching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
}

impl IndexMatching {
    pub fn size(&self) -> usize {
        self.mate_left.iter().filter(|m| m.is_some()).count()
    }

    pub fn saturates_left(&self) -> bool {
        self.mate_left.iter().all(Option::is_some)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate_left
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|j| (i, j)))
    }
}

/// Maximum matching by phases of BFS layering followed by layered DFS
/// augmentation (Hopcroft–Karp). Neighbours are scanned in the order given,
/// so the result is deterministic.
pub fn max_matching_indices(num_right: usize, adj: &[Vec<usize>]) -> IndexMatching {
    const INF: usize = usize::MAX;
    let n = adj.len();
    let mut mate_left: Vec<Option<usize>> = vec![None; n];
    let mut mate_right: Vec<Option<usize>> = vec![None; num_right];
    let mut dist = vec![INF; n];

    loop {
        // Layer the free left vertices.
        let mut queue = VecDeque::new();
        for i in 0..n {
            if mate_left[i].is_none() {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = INF;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                match mate_right[j] {
                    None => found = true,
                    Some(i2) if dist[i2] == INF => {
                        dist[i2] = dist[i] + 1;
                        queue.push_back(i2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; n];
        let mut augmented = false;
        for i in 0..n {
            if mate_left[i].is_none()
                && augment(i, adj, &mut mate_left, &mut mate_right, &mut dist, &mut next)
            {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    IndexMatching {
        mate_left,
        mate_right,
    }
}

/// Iterative layered DFS from free left vertex `root`.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    // Stack of left vertices; the edge taken out of stack[d] is adj[stack[d]][next[stack[d]]].
    let mut stack = vec![root];
    while let Some(&i) = stack.last() {
        if next[i] >= adj[i].len() {
            dist[i] = usize::MAX;
            stack.pop();
            if let Some(&parent) = stack.last() {
                next[parent] += 1;
            }
            continue;
        }
        let j = adj[i][next[i]];
        match mate_right[j] {
            None => {
                // Flip the path.
                for &l in stack.iter().rev() {
                    let r = adj[l][next[l]];
                    mate_left[l] = Some(r);
                    mate_right[r] = Some(l);
                }
                for &l in &stack {
                    dist[l] = usize::MAX;
                }
                return true;
            }
            Some(i2) if dist[i2] != usize::MAX && dist[i2] == dist[i] + 1 => {
                stack.push(i2);
            }
            Some(_) => next[i] += 1,
        }
    }
    false
}

/// Maximum cardinality matching of `g`, as `(a, b)` label pairs.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let m = max_matching_indices(g.num_b(), g.adjacency_a());
    Matching::new(m.pairs().map(|(i, j)| (g.a_label(i), g.b_label(j))).collect())
}

/// Left vertices reachable from `root` by alternating paths
/// (left → any edge → right → matched edge → left), and the right vertices
/// visited on the way. `root` must be unmatched; the matching maximum.
pub fn alternating_reach(
    adj: &[Vec<usize>],
    m: &IndexMatching,
    roots: impl IntoIterator<Item = usize>,
) -> (Vec<bool>, Vec<bool>) {
    let mut left = vec![false; adj.len()];
    let mut right = vec![false; m.mate_right.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for r in roots {
        if !left[r] {
            left[r] = true;
            queue.push_back(r);
        }
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if right[j] {
                continue;
            }
            right[j] = true;
            if let Some(i2) = m.mate_right[j] {
                if !left[i2] {
                    left[i2] = true;
                    queue.push_back(i2);
                }
            }
        }
    }
    (left, right)
}

/// Minimal hall-set by indices: the alternating-reachable set of the smallest
/// unsaturated left vertex of a maximum matching, and its neighbourhood.
///
/// Every left vertex reached other than the root is matched into the reached
/// right set, so the set has deficiency exactly one and any violator inside it
/// must contain the root and be closed under the same reachability; hence it
/// is minimal.
pub fn hall_violator_indices(num_right: usize, adj: &[Vec<usize>], m: &IndexMatching) -> Option<(Vec<usize>, Vec<usize>)> {
    let root = m.mate_left.iter().position(Option::is_none)?;
    let (left, right) = alternating_reach(adj, m, [root]);
    debug_assert_eq!(right.len(), num_right);
    let x: Vec<usize> = (0..adj.len()).filter(|&i| left[i]).collect();
    let nx: Vec<usize> = (0..num_right).filter(|&j| right[j]).collect();
    debug_assert!(nx.len() < x.len());
    Some((x, nx))
}

/// A set `X ⊆ A` with `|N(X)| < |X|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub x: BTreeSet<Vertex>,
    pub neighborhood: BTreeSet<Vertex>,
}

/// `None` iff `g` has a matching saturating side A; otherwise a minimal
/// hall-set and its neighbourhood.
pub fn minimal_hall_set(g: &BipartiteGraph) -> Option<HallViolator> {
    let m = max_matching_indices(g.num_b(), g.adjacency_a());
    let (x, nx) = hall_violator_indices(g.num_b(), g.adjacency_a(), &m)?;
    Some(HallViolator {
        x: x.into_iter().map(|i| g.a_label(i)).collect(),
        neighborhood: nx.into_iter().map(|j| g.b_label(j)).collect(),
    })
}

/// Result of cloning each left vertex `caps[i]` times.
pub(crate) struct CloneMatching {
    /// Left vertex owning each clone.
    pub owner: Vec<usize>,
    pub adj: Vec<Vec<usize>>,
    pub matching: IndexMatching,
}

pub(crate) fn clone_matching(num_right: usize, adj: &[Vec<usize>], caps: &[usize]) -> CloneMatching {
    let mut owner = Vec::new();
    let mut cadj = Vec::new();
    for (i, &c) in caps.iter().enumerate() {
        for _ in 0..c {
            owner.push(i);
            cadj.push(adj[i].clone());
        }
    }
    let matching = max_matching_indices(num_right, &cadj);
    CloneMatching {
        owner,
        adj: cadj,
        matching,
    }
}

/// Integral assignment of B-vertices to A-vertices along edges: every b is
/// assigned at most once, every a receives at most `cap_a(a)` vertices, and
/// the total is maximum. Keys are `(a, b)` label pairs carrying a positive
/// amount; edges not listed carry 0. A-vertices missing from `cap_a` have
/// capacity 0.
pub fn capacitated_assignment(g: &BipartiteGraph, cap_a: &BTreeMap<Vertex, usize>) -> BTreeMap<(Vertex, Vertex), usize> {
    let caps: Vec<usize> = g
        .side_a()
        .iter()
        .map(|v| cap_a.get(v).copied().unwrap_or(0))
        .collect();
    let cm = clone_matching(g.num_b(), g.adjacency_a(), &caps);
    let mut out = BTreeMap::new();
    for (c, j) in cm.matching.pairs() {
        *out.entry((g.a_label(cm.owner[c]), g.b_label(j))).or_insert(0) += 1;
    }
    out
}

/// Index-level search for `X ⊆ A`, `X ≠ ∅`, with `|N(X)| < |X| + q`, using
/// the replication criterion: add `q` extra clones of one vertex at a time and
/// look for a matching saturating the enlarged side.
pub(crate) fn surplus_violator_indices(num_right: usize, adj: &[Vec<usize>], q: usize) -> Option<Vec<usize>> {
    if adj.is_empty() {
        return None;
    }
    let base = max_matching_indices(num_right, adj);
    if !base.saturates_left() {
        let (x, _) = hall_violator_indices(num_right, adj, &base)?;
        return Some(x);
    }
    if q == 0 {
        return None;
    }
    for a in 0..adj.len() {
        let mut caps = vec![1; adj.len()];
        caps[a] += q;
        let cm = clone_matching(num_right, adj, &caps);
        if let Some((x, _)) = hall_violator_indices(num_right, &cm.adj, &cm.matching) {
            let mut orig: Vec<usize> = x.into_iter().map(|c| cm.owner[c]).collect();
            orig.dedup();
            return Some(orig);
        }
    }
    None
}

/// True iff `|N(X)| ≥ |X| + q` for every non-empty `X ⊆ A` (vacuously true
/// when A is empty).
pub fn has_surplus_q(g: &BipartiteGraph, q: usize) -> bool {
    surplus_violator_indices(g.num_b(), g.adjacency_a(), q).is_none()
}
