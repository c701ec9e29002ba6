use std::collections::{BTreeMap, BTreeSet};

use super::{KernelOutcome, RuleApplication};
use crate::bipartite::BipartiteGraph;
use crate::expansion::expansion_lemma;
use crate::format::{join_list, Record};
use crate::graph::{Graph, Vertex};
use crate::instance::{Problem, ProblemInstance};

/// Maximal packing of vertex-disjoint induced paths on three vertices, found
/// by scanning triples `u < v < w` in lexicographic order.
pub fn greedy_p3_packing(g: &Graph) -> Vec<[Vertex; 3]> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut used = BTreeSet::new();
    let mut packing = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if used.contains(&u) {
                break;
            }
            if used.contains(&v) {
                continue;
            }
            for &w in &vs[j + 1..] {
                if used.contains(&w) {
                    continue;
                }
                let edges = [g.has_edge(u, v), g.has_edge(v, w), g.has_edge(u, w)];
                if edges.iter().filter(|&&e| e).count() == 2 {
                    used.extend([u, v, w]);
                    packing.push([u, v, w]);
                    break;
                }
            }
        }
    }
    packing
}

/// Components of `g − s`; when `s` is the vertex set of a maximal P3
/// packing they are cliques.
pub fn cluster_components(g: &Graph, s: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
    g.without_vertices(s).connected_components()
}

/// Cluster Vertex Deletion clique-bounding rule: afterwards `G − S` has fewer
/// than `6k'` cliques for the recomputed P3-packing modulator `S`.
///
/// A vertex of `S` with two private cliques is the middle of an induced P3,
/// so a 2-expansion from heads into cliques certifies that some optimal
/// solution takes all heads and leaves the crown cliques isolated.
pub fn bound_cvd_cliques(g: &Graph, k: usize) -> KernelOutcome {
    let mut g = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let packing = greedy_p3_packing(&g);
        if packing.len() > k {
            let cert = Record::new()
                .with("cert", "p3-packing")
                .with("paths", packing.iter().map(join_list).collect::<Vec<_>>().join("/"));
            trace.push(RuleApplication::new("packing-exceeds-budget").certificate(&cert));
            return KernelOutcome::decided(false, trace);
        }
        if packing.is_empty() {
            trace.push(RuleApplication::new("already-cluster"));
            return KernelOutcome::decided(true, trace);
        }
        let s: BTreeSet<Vertex> = packing.iter().flatten().copied().collect();
        let (attached, detached): (Vec<_>, Vec<_>) = cluster_components(&g, &s)
            .into_iter()
            .partition(|c| c.iter().any(|v| g.neighbors(*v).iter().any(|u| s.contains(u))));
        if !detached.is_empty() {
            let rule = RuleApplication::new("delete-detached-cliques").deleting(detached.into_iter().flatten());
            g = g.without_vertices(&rule.deleted);
            trace.push(rule);
            continue;
        }
        if attached.len() < 2 * s.len() {
            return KernelOutcome::reduced(ProblemInstance::graph(Problem::CvdCliqueBound, g, k), trace);
        }
        let cliques: BTreeMap<Vertex, Vec<Vertex>> = attached.into_iter().map(|c| (c[0], c)).collect();
        let edges: Vec<(Vertex, Vertex)> = cliques
            .iter()
            .flat_map(|(&rep, c)| {
                let touching: BTreeSet<Vertex> = c
                    .iter()
                    .flat_map(|v| g.neighbors(*v).iter().copied())
                    .filter(|u| s.contains(u))
                    .collect();
                touching.into_iter().map(move |u| (u, rep))
            })
            .collect();
        let incidence = BipartiteGraph::new(s.iter().copied(), cliques.keys().copied(), edges)
            .expect("modulator and cliques are disjoint");
        let cert = expansion_lemma(&incidence, 2).expect("expansion preconditions hold");
        if cert.x.len() > k {
            trace.push(RuleApplication::new("expansion-head-exceeds-budget").certificate(&cert.to_record()));
            return KernelOutcome::decided(false, trace);
        }
        let rule = RuleApplication::new("expansion")
            .certificate(&cert.to_record())
            .deleting(cert.x.iter().copied())
            .deleting(cert.y.iter().flat_map(|r| cliques[r].iter().copied()))
            .budget(-(cert.x.len() as i64));
        g = g.without_vertices(&rule.deleted);
        k -= cert.x.len();
        trace.push(rule);
    }
}
