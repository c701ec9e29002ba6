//! Expansion lemmas and their certificates.
//!
//! All constructions share one primitive: clone every A-vertex according to a
//! demand, compute a maximum matching into B (or into unit copies of weighted
//! B-vertices), and take the set `D` of A-vertices reachable by alternating
//! paths from unsaturated clones. Every B-vertex adjacent to `D` is matched
//! into `D`, and every vertex of `A ∖ D` is fully served by B-vertices whose
//! neighbourhood avoids `D`. The lemmas differ in how they read certificates
//! off this split.

mod additive;
mod balanced;
mod plain;
mod stronger;
mod verify;
mod weighted;

use std::collections::{BTreeMap, BTreeSet};

use crate::format::{join_list, Record};
use crate::graph::Vertex;
use crate::matching::{alternating_reach, clone_matching};

pub use additive::additive_expansion_lemma;
pub use balanced::balanced_expansion;
pub use plain::expansion_lemma;
pub use stronger::stronger_expansion_lemma;
pub use verify::{
    verify_additive, verify_balanced, verify_expansion, verify_stronger, verify_weighted_expansion,
};
pub use weighted::weighted_expansion_lemma;

/// A q-expansion of `x` into `y`: every vertex of `x` has exactly `q` edges
/// in `m`, the edges use distinct vertices of `y`, and `N(y) ⊆ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCertificate {
    pub x: BTreeSet<Vertex>,
    pub y: BTreeSet<Vertex>,
    /// Pairs `(a, b)` with `a ∈ x`, `b ∈ y`.
    pub m: Vec<(Vertex, Vertex)>,
    pub q: usize,
}

/// A weighted q-expansion: `f` sends every vertex of `y` to a neighbour in
/// `x`, and each `a ∈ x` receives weight at least `q − w_cap + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedExpansionCertificate {
    pub x: BTreeSet<Vertex>,
    pub y: BTreeSet<Vertex>,
    pub f: BTreeMap<Vertex, Vertex>,
    pub q: usize,
    pub w_cap: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongerExpansionCertificate {
    pub a_hat: BTreeSet<Vertex>,
    pub b_hat: BTreeSet<Vertex>,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveExpansionCertificate {
    pub a_hat: BTreeSet<Vertex>,
    pub b_hat: BTreeSet<Vertex>,
    pub q: usize,
}

/// A total assignment `f: B → A` splitting A into heavy heads `a1` and light
/// heads `a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedExpansionResult {
    pub a1: BTreeSet<Vertex>,
    pub a2: BTreeSet<Vertex>,
    pub f: BTreeMap<Vertex, Vertex>,
    pub q: u64,
}

fn map_list(f: &BTreeMap<Vertex, Vertex>) -> String {
    join_list(f.iter().map(|(b, a)| format!("{b}:{a}")))
}

impl ExpansionCertificate {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "expansion")
            .with("q", self.q)
            .with("x", join_list(&self.x))
            .with("y", join_list(&self.y))
            .with("m", join_list(self.m.iter().map(|(a, b)| format!("{a}:{b}"))))
    }
}

impl WeightedExpansionCertificate {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "weighted")
            .with("q", self.q)
            .with("w_cap", self.w_cap)
            .with("x", join_list(&self.x))
            .with("y", join_list(&self.y))
            .with("f", map_list(&self.f))
    }
}

impl StrongerExpansionCertificate {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "stronger")
            .with("q", self.q)
            .with("a_hat", join_list(&self.a_hat))
            .with("b_hat", join_list(&self.b_hat))
    }
}

impl AdditiveExpansionCertificate {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "additive")
            .with("q", self.q)
            .with("a_hat", join_list(&self.a_hat))
            .with("b_hat", join_list(&self.b_hat))
    }
}

impl BalancedExpansionResult {
    pub fn to_record(&self) -> Record {
        Record::new()
            .with("cert", "balanced")
            .with("q", self.q)
            .with("a1", join_list(&self.a1))
            .with("a2", join_list(&self.a2))
            .with("f", map_list(&self.f))
    }
}

/// Outcome of the clone-and-match step.
struct Closure {
    /// `deficient[i]`: A-vertex `i` is reachable from an unsaturated clone.
    deficient: Vec<bool>,
    /// `load[i][j]`: number of clones of A-vertex `i` matched to right vertex `j`,
    /// stored sparsely.
    load: Vec<BTreeMap<usize, usize>>,
}

/// Clones left vertex `i` `caps[i]` times and matches the clones into the
/// right side.
fn closure(num_right: usize, adj: &[Vec<usize>], caps: &[usize]) -> Closure {
    let cm = clone_matching(num_right, adj, caps);
    let roots = (0..cm.owner.len()).filter(|&c| cm.matching.mate_left[c].is_none());
    let (reached, _) = alternating_reach(&cm.adj, &cm.matching, roots);
    let mut deficient = vec![false; adj.len()];
    for (c, &r) in reached.iter().enumerate() {
        if r {
            deficient[cm.owner[c]] = true;
        }
    }
    let mut load = vec![BTreeMap::new(); adj.len()];
    for (c, j) in cm.matching.pairs() {
        *load[cm.owner[c]].entry(j).or_insert(0) += 1;
    }
    Closure { deficient, load }
}

/// Unit copies of weighted right vertices: returns the left adjacency into
/// copies and the owner of each copy.
fn blow_up(adj: &[Vec<usize>], weights: &[u64]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut first = Vec::with_capacity(weights.len());
    let mut owner = Vec::new();
    for (j, &w) in weights.iter().enumerate() {
        first.push(owner.len());
        owner.extend(std::iter::repeat_n(j, w as usize));
    }
    let cadj = adj
        .iter()
        .map(|ns| {
            ns.iter()
                .flat_map(|&j| first[j]..first[j] + weights[j] as usize)
                .collect()
        })
        .collect();
    (cadj, owner)
}

/// An integral flow on bipartite edges `(a, b)`, keyed by index pairs.
type EdgeFlow = BTreeMap<(usize, usize), u64>;

/// Moves flow around cycles of the support graph until it is a forest.
/// Per-vertex totals are unchanged.
fn cancel_cycles(flow: &mut EdgeFlow) {
    while let Some(cycle) = find_cycle(flow) {
        // cycle alternates a-b-a-b...; edges at even positions gain, odd lose.
        let edges: Vec<(usize, usize)> = (0..cycle.len())
            .map(|t| {
                let (u, v) = (cycle[t], cycle[(t + 1) % cycle.len()]);
                match (u, v) {
                    (Node::A(a), Node::B(b)) | (Node::B(b), Node::A(a)) => (a, b),
                    _ => unreachable!("support graph is bipartite"),
                }
            })
            .collect();
        let delta = edges.iter().skip(1).step_by(2).map(|e| flow[e]).min().unwrap_or(0);
        for (t, e) in edges.iter().enumerate() {
            let v = flow.get_mut(e).expect("cycle edge in support");
            if t % 2 == 0 {
                *v += delta;
            } else {
                *v -= delta;
            }
        }
        flow.retain(|_, v| *v > 0);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    A(usize),
    B(usize),
}

fn support_adjacency(flow: &EdgeFlow) -> BTreeMap<Node, Vec<Node>> {
    let mut adj: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
    for &(a, b) in flow.keys() {
        adj.entry(Node::A(a)).or_default().push(Node::B(b));
        adj.entry(Node::B(b)).or_default().push(Node::A(a));
    }
    adj
}

/// Some cycle of the support graph as a vertex sequence starting at an A node.
fn find_cycle(flow: &EdgeFlow) -> Option<Vec<Node>> {
    let adj = support_adjacency(flow);
    let mut parent: BTreeMap<Node, Option<Node>> = BTreeMap::new();
    for &start in adj.keys() {
        if parent.contains_key(&start) {
            continue;
        }
        parent.insert(start, None);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[&u] {
                if parent[&u] == Some(v) {
                    continue;
                }
                if parent.contains_key(&v) {
                    // Non-tree edge u-v closes a cycle through their common ancestor.
                    let path_to_root = |mut x: Node| {
                        let mut p = vec![x];
                        while let Some(Some(y)) = parent.get(&x) {
                            p.push(*y);
                            x = *y;
                        }
                        p
                    };
                    let pu = path_to_root(u);
                    let pv = path_to_root(v);
                    let set_v: BTreeSet<Node> = pv.iter().copied().collect();
                    let lca_pos = pu.iter().position(|x| set_v.contains(x))?;
                    let lca = pu[lca_pos];
                    let mut cycle: Vec<Node> = pu[..=lca_pos].to_vec();
                    let v_pos = pv.iter().position(|&x| x == lca)?;
                    cycle.extend(pv[..v_pos].iter().rev());
                    // cycle: u .. lca .. v, closed by v-u.
                    let a_pos = cycle.iter().position(|n| matches!(n, Node::A(_)))?;
                    cycle.rotate_left(a_pos);
                    return Some(cycle);
                }
                parent.insert(v, Some(u));
                stack.push(v);
            }
        }
    }
    None
}

/// Roots each tree of the (acyclic) support graph at its smallest A node and
/// returns the parent of every node (`None` for roots) and the children in
/// ascending order.
fn root_forest(flow: &EdgeFlow) -> (BTreeMap<Node, Option<Node>>, BTreeMap<Node, Vec<Node>>) {
    let adj = support_adjacency(flow);
    let mut parent: BTreeMap<Node, Option<Node>> = BTreeMap::new();
    let mut children: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
    // BTreeMap order puts every A node before every B node, so the first
    // unvisited node of a tree is its smallest A node.
    for &root in adj.keys() {
        if parent.contains_key(&root) {
            continue;
        }
        parent.insert(root, None);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &v in &adj[&u] {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(v) {
                    e.insert(Some(u));
                    children.entry(u).or_default().push(v);
                    stack.push(v);
                }
            }
        }
    }
    for c in children.values_mut() {
        c.sort_unstable();
    }
    (parent, children)
}

/// Collapses a copy-level matching load into per-(a, b) flow.
fn collapse(load: &[BTreeMap<usize, usize>], copy_owner: &[usize], keep_a: impl Fn(usize) -> bool) -> EdgeFlow {
    let mut flow = EdgeFlow::new();
    for (a, row) in load.iter().enumerate() {
        if !keep_a(a) {
            continue;
        }
        for (&copy, &cnt) in row {
            *flow.entry((a, copy_owner[copy])).or_insert(0) += cnt as u64;
        }
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancel_cycles_keeps_totals() {
        // 4-cycle a0-b0-a1-b1 with flow 1 everywhere.
        let mut flow: EdgeFlow = [((0, 0), 1), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)].into_iter().collect();
        cancel_cycles(&mut flow);
        assert!(find_cycle(&flow).is_none());
        let sum_a = |a: usize| flow.iter().filter(|((x, _), _)| *x == a).map(|(_, v)| v).sum::<u64>();
        let sum_b = |b: usize| flow.iter().filter(|((_, y), _)| *y == b).map(|(_, v)| v).sum::<u64>();
        assert_eq!((sum_a(0), sum_a(1), sum_b(0), sum_b(1)), (2, 2, 2, 2));
    }

    #[test]
    fn forest_roots_at_smallest_a() {
        let flow: EdgeFlow = [((1, 0), 1), ((2, 0), 1), ((2, 3), 1)].into_iter().collect();
        let (parent, _) = root_forest(&flow);
        assert_eq!(parent[&Node::A(1)], None);
        assert_eq!(parent[&Node::B(0)], Some(Node::A(1)));
        assert_eq!(parent[&Node::B(3)], Some(Node::A(2)));
    }
}
