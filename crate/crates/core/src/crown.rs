//! Crown decompositions: construction from a graph with few disjoint edges,
//! construction from a bipartite graph without a saturating matching, and an
//! independent checker.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::BipartiteGraph;
use crate::error::LemmaError;
use crate::format::{join_list, Record};
use crate::graph::{Graph, Vertex};
use crate::matching::{alternating_reach, max_matching, max_matching_indices, minimal_hall_set, Matching};

/// A partition `(C, H, R)` of the host's vertices with an independent crown
/// `C`, a head `H` separating `C` from `R`, and a matching of `H` into `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrownDecomposition {
    pub crown: BTreeSet<Vertex>,
    pub head: BTreeSet<Vertex>,
    pub rest: BTreeSet<Vertex>,
    /// Pairs `(h, c)` with `h ∈ H`, `c ∈ C`.
    pub witness: Matching,
}

impl CrownDecomposition {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "crown")
            .with("crown", join_list(&self.crown))
            .with("head", join_list(&self.head))
            .with("rest", join_list(&self.rest))
            .with(
                "witness",
                join_list(self.witness.edges().iter().map(|(h, c)| format!("{h}:{c}"))),
            )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrownOrMatching {
    Matching(Matching),
    Crown(CrownDecomposition),
}

/// Checks the four crown invariants against `host`.
pub fn verify_crown(host: &Graph, cd: &CrownDecomposition) -> bool {
    let all = host.vertex_set();
    let mut seen = BTreeSet::new();
    for v in cd.crown.iter().chain(&cd.head).chain(&cd.rest) {
        if !all.contains(v) || !seen.insert(*v) {
            return false;
        }
    }
    if seen.len() != all.len() || cd.crown.is_empty() {
        return false;
    }
    for &c in &cd.crown {
        for u in host.neighbors(c) {
            if cd.crown.contains(u) || cd.rest.contains(u) {
                return false;
            }
        }
    }
    let mut used = BTreeSet::new();
    let mut covered = BTreeSet::new();
    for &(h, c) in cd.witness.edges() {
        if !cd.head.contains(&h) || !cd.crown.contains(&c) || !host.has_edge(h, c) {
            return false;
        }
        if !used.insert(h) || !used.insert(c) {
            return false;
        }
        covered.insert(h);
    }
    covered == cd.head
}

/// [`verify_crown`] on the underlying graph of a bipartite host.
pub fn verify_crown_bipartite(host: &BipartiteGraph, cd: &CrownDecomposition) -> bool {
    verify_crown(&host.to_graph(), cd)
}

/// Returns `k + 1` pairwise disjoint edges of `g`, or a crown decomposition.
///
/// A greedy maximal matching `M` in vertex order is taken first. When it is
/// small, `I = V ∖ V(M)` is independent and the crown is read off a maximum
/// matching between `I` and `V(M)` by alternating reachability from the
/// unmatched vertices of `I`.
pub fn crown_or_matching(g: &Graph, k: usize) -> Result<CrownOrMatching, LemmaError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(LemmaError::IsolatedVertex(v));
    }
    let n = g.num_vertices();
    if n < 3 * k + 1 {
        return Err(LemmaError::SizeCondition(format!(
            "graph has {n} vertices, need at least 3k+1 = {}",
            3 * k + 1
        )));
    }

    let mut in_m = BTreeSet::new();
    let mut greedy = Vec::new();
    for (u, v) in g.edges() {
        if !in_m.contains(&u) && !in_m.contains(&v) {
            in_m.insert(u);
            in_m.insert(v);
            greedy.push((u, v));
        }
    }
    if greedy.len() > k {
        greedy.truncate(k + 1);
        return Ok(CrownOrMatching::Matching(Matching::new(greedy)));
    }

    let outside: Vec<Vertex> = g.vertices().filter(|v| !in_m.contains(v)).collect();
    let inside: Vec<Vertex> = in_m.iter().copied().collect();
    let pos: BTreeMap<Vertex, usize> = inside.iter().enumerate().map(|(j, &v)| (v, j)).collect();
    let adj: Vec<Vec<usize>> = outside
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|u| pos[u]).collect())
        .collect();
    let m = max_matching_indices(inside.len(), &adj);
    if m.size() > k {
        let edges = m
            .pairs()
            .take(k + 1)
            .map(|(i, j)| (outside[i], inside[j]))
            .collect();
        return Ok(CrownOrMatching::Matching(Matching::new(edges)));
    }

    let roots = (0..outside.len()).filter(|&i| m.mate_left[i].is_none());
    let (left, right) = alternating_reach(&adj, &m, roots);
    let crown: BTreeSet<Vertex> = (0..outside.len()).filter(|&i| left[i]).map(|i| outside[i]).collect();
    let mut head = BTreeSet::new();
    let mut witness = Vec::new();
    for j in (0..inside.len()).filter(|&j| right[j]) {
        let i = m.mate_right[j].expect("reached head vertex is matched in a maximum matching");
        head.insert(inside[j]);
        witness.push((inside[j], outside[i]));
    }
    let rest = g
        .vertices()
        .filter(|v| !crown.contains(v) && !head.contains(v))
        .collect();
    Ok(CrownOrMatching::Crown(CrownDecomposition {
        crown,
        head,
        rest,
        witness: Matching::new(witness),
    }))
}

/// Either a matching saturating side A, or a crown with `C ⊆ A`, `H ⊆ B`.
///
/// Isolated side-A vertices are rejected as well, since they would give a
/// crown whose head is empty; callers strip them first.
pub fn bipartite_crown(g: &BipartiteGraph) -> Result<CrownOrMatching, LemmaError> {
    if let Some(b) = g.isolated_b() {
        return Err(LemmaError::IsolatedInB(b));
    }
    if let Some(a) = g.isolated_a() {
        return Err(LemmaError::IsolatedInA(a));
    }
    if g.num_b() < g.num_a() {
        return Err(LemmaError::SizeCondition(format!(
            "|B| = {} is smaller than |A| = {}",
            g.num_b(),
            g.num_a()
        )));
    }
    Ok(match crown_from_hall_set(g) {
        Some(cd) => CrownOrMatching::Crown(cd),
        None => CrownOrMatching::Matching(max_matching(g)),
    })
}

/// Crown built from a minimal hall-set of side A, or `None` if A can be
/// saturated. No preconditions; the head is empty only if the hall-set is a
/// single isolated vertex.
pub(crate) fn crown_from_hall_set(g: &BipartiteGraph) -> Option<CrownDecomposition> {
    let violator = minimal_hall_set(g)?;
    let sub = g.restrict_labels(&violator.x, &violator.neighborhood);
    let inner = max_matching(&sub);
    debug_assert_eq!(inner.len(), violator.neighborhood.len());
    let witness = Matching::new(inner.edges().iter().map(|&(a, b)| (b, a)).collect());
    let rest = g
        .side_a()
        .iter()
        .chain(g.side_b())
        .filter(|v| !violator.x.contains(v) && !violator.neighborhood.contains(v))
        .copied()
        .collect();
    Some(CrownDecomposition {
        crown: violator.x,
        head: violator.neighborhood,
        rest,
        witness,
    })
}
