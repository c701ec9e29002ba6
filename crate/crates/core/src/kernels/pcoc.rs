use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{KernelOutcome, RuleApplication};
use crate::bipartite::{BipartiteGraph, WeightedBipartiteGraph};
use crate::expansion::{expansion_lemma, weighted_expansion_lemma};
use crate::format::{join_list, Record};
use crate::graph::{Graph, Vertex};
use crate::instance::{Problem, ProblemInstance};

/// Greedy packing of vertex-disjoint connected sets of `size` vertices.
///
/// Vertices are tried in increasing order; from each unused vertex a BFS over
/// unused vertices collects up to `size` vertices. The packing is maximal:
/// no connected set of `size` unused vertices remains.
pub fn greedy_connected_packing(g: &Graph, size: usize) -> Vec<Vec<Vertex>> {
    let mut used = BTreeSet::new();
    let mut packing = Vec::new();
    for start in g.vertices() {
        if used.contains(&start) {
            continue;
        }
        let mut seen = BTreeSet::from([start]);
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if order.len() >= size {
                    break 'bfs;
                }
                if !used.contains(&w) && seen.insert(w) {
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() >= size {
            order.truncate(size);
            used.extend(order.iter().copied());
            order.sort_unstable();
            packing.push(order);
        }
    }
    packing
}

/// Connected components of `g − x`, each sorted, ordered by smallest vertex.
pub fn small_components(g: &Graph, x: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
    g.without_vertices(x).connected_components()
}

fn packing_record(packing: &[Vec<Vertex>]) -> Record {
    Record::new()
        .with("cert", "packing")
        .with("sets", packing.iter().map(join_list).collect::<Vec<_>>().join("/"))
}

/// Modulator, components of `G − X` adjacent to it, and the component
/// incidence graph with each component labelled by its smallest vertex.
struct Layout {
    x: BTreeSet<Vertex>,
    comps: BTreeMap<Vertex, Vec<Vertex>>,
    incidence: BipartiteGraph,
}

enum Step {
    Decided(bool, RuleApplication),
    Delete(RuleApplication),
    Layout(Layout),
}

fn layout(g: &Graph, k: usize, p: usize) -> Step {
    let packing = greedy_connected_packing(g, p + 1);
    if packing.len() > k {
        return Step::Decided(
            false,
            RuleApplication::new("packing-exceeds-budget").certificate(&packing_record(&packing)),
        );
    }
    if packing.is_empty() {
        return Step::Decided(true, RuleApplication::new("components-already-small"));
    }
    let x: BTreeSet<Vertex> = packing.iter().flatten().copied().collect();
    let (attached, detached): (Vec<_>, Vec<_>) = small_components(g, &x)
        .into_iter()
        .partition(|c| c.iter().any(|v| g.neighbors(*v).iter().any(|u| x.contains(u))));
    if !detached.is_empty() {
        return Step::Delete(RuleApplication::new("delete-detached-components").deleting(detached.into_iter().flatten()));
    }
    let comps: BTreeMap<Vertex, Vec<Vertex>> = attached.into_iter().map(|c| (c[0], c)).collect();
    let edges: Vec<(Vertex, Vertex)> = comps
        .iter()
        .flat_map(|(&rep, c)| {
            let touching: BTreeSet<Vertex> = c
                .iter()
                .flat_map(|v| g.neighbors(*v).iter().copied())
                .filter(|u| x.contains(u))
                .collect();
            touching.into_iter().map(move |u| (u, rep))
        })
        .collect();
    let incidence = BipartiteGraph::new(x.iter().copied(), comps.keys().copied(), edges)
        .expect("modulator and components are disjoint");
    Step::Layout(Layout { x, comps, incidence })
}

fn run(g: &Graph, k: usize, p: usize, weighted: bool) -> KernelOutcome {
    assert!(p >= 1, "p must be positive");
    let problem = if weighted { Problem::PcocWeighted } else { Problem::Pcoc };
    let mut g = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let lay = match layout(&g, k, p) {
            Step::Decided(answer, rule) => {
                trace.push(rule);
                return KernelOutcome::decided(answer, trace);
            }
            Step::Delete(rule) => {
                g = g.without_vertices(&rule.deleted);
                trace.push(rule);
                continue;
            }
            Step::Layout(l) => l,
        };
        let found = if weighted {
            let q = 2 * p - 1;
            let total: usize = lay.comps.values().map(Vec::len).sum();
            if total < q * lay.x.len() {
                None
            } else {
                let sizes: BTreeMap<Vertex, u64> = lay.comps.iter().map(|(&r, c)| (r, c.len() as u64)).collect();
                let wg = WeightedBipartiteGraph::new(lay.incidence.clone(), &sizes).expect("sizes are positive");
                let cert = weighted_expansion_lemma(&wg, q).expect("weighted expansion preconditions hold");
                Some((cert.x.clone(), cert.y.clone(), cert.to_record()))
            }
        } else if lay.comps.len() < p * lay.x.len() {
            None
        } else {
            let cert = expansion_lemma(&lay.incidence, p).expect("expansion preconditions hold");
            Some((cert.x.clone(), cert.y.clone(), cert.to_record()))
        };
        let Some((head, crown, rec)) = found else {
            let inst = ProblemInstance::graph(problem, g, k).with_p(p);
            return KernelOutcome::reduced(inst, trace);
        };
        if head.len() > k {
            trace.push(RuleApplication::new("expansion-head-exceeds-budget").certificate(&rec));
            return KernelOutcome::decided(false, trace);
        }
        let rule = RuleApplication::new("expansion")
            .certificate(&rec)
            .deleting(head.iter().copied())
            .deleting(crown.iter().flat_map(|r| lay.comps[r].iter().copied()))
            .budget(-(head.len() as i64));
        g = g.without_vertices(&rule.deleted);
        k -= head.len();
        trace.push(rule);
    }
}

/// p-Component Order Connectivity: delete at most `k` vertices so that every
/// component has at most `p` vertices. Reduced instances have fewer than
/// `p(p+1)k'` components outside the packing modulator.
pub fn kernelize_pcoc(g: &Graph, k: usize, p: usize) -> KernelOutcome {
    run(g, k, p, false)
}

/// The same problem reduced with the weighted expansion lemma at
/// `q = 2p − 1`, components weighted by size: reduced instances have fewer
/// than `(2p−1)(p+1)k'` vertices outside the modulator.
pub fn kernelize_pcoc_weighted(g: &Graph, k: usize, p: usize) -> KernelOutcome {
    run(g, k, p, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_with_zero_budget_is_no() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(kernelize_pcoc(&g, 0, 2).decided_answer(), Some(false));
        assert_eq!(kernelize_pcoc_weighted(&g, 0, 2).decided_answer(), Some(false));
    }

    #[test]
    fn packing_is_maximal_and_connected() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(greedy_connected_packing(&g, 3), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn big_star_reduces_to_decision() {
        // Star with 12 leaves, p = 2: deleting the centre is enough.
        let edges: Vec<_> = (1..13).map(|v| (0, v)).collect();
        let g = Graph::from_edges(13, &edges).unwrap();
        assert_eq!(kernelize_pcoc(&g, 1, 2).decided_answer(), Some(true));
        assert_eq!(kernelize_pcoc_weighted(&g, 1, 2).decided_answer(), Some(true));
    }
}
