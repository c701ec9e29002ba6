use std::collections::{BTreeMap, BTreeSet};

use super::{KernelOutcome, RuleApplication};
use crate::bipartite::BipartiteGraph;
use crate::crown::crown_from_hall_set;
use crate::error::KernelError;
use crate::format::{join_list, ColorLists, Record};
use crate::graph::{Graph, Vertex};
use crate::instance::{Problem, ProblemInstance};

/// Result of the colour-reduction rule. `k` may become negative, in which
/// case every list is longer than the number of remaining vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListColoringReduction {
    pub graph: Graph,
    pub k: i64,
    pub lists: ColorLists,
    /// Colours fixed for the deleted vertices.
    pub precolored: BTreeMap<Vertex, u64>,
    pub trace: Vec<RuleApplication>,
}

fn check_lists(g: &Graph, k: usize, lists: &ColorLists) -> Result<(), KernelError> {
    ProblemInstance::graph(Problem::NkListColoring, g.clone(), k)
        .with_lists(lists.clone())
        .validate()
}

/// Reduces the number of distinct colours to at most the number of vertices.
///
/// While there are more colours than vertices, the colour–vertex incidence
/// graph has a crown with colours `C` as crown and vertices `H = N(C)` as
/// head. The heads are coloured through the witness matching and removed;
/// colours of `C` appear in no other list, so the rest is unaffected.
pub fn reduce_list_coloring_colors(
    g: &Graph,
    k: usize,
    lists: &ColorLists,
) -> Result<ListColoringReduction, KernelError> {
    check_lists(g, k, lists)?;
    let mut g = g.clone();
    let mut lists = lists.clone();
    let mut k = k as i64;
    let mut precolored = BTreeMap::new();
    let mut trace = Vec::new();
    loop {
        let colors: Vec<u64> = lists
            .values()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if colors.len() <= g.num_vertices() {
            break;
        }
        let offset = g.vertices().max().map_or(0, |v| v + 1);
        let color_label = |c: &u64| offset + colors.binary_search(c).expect("known colour");
        let edges: Vec<(Vertex, Vertex)> = lists
            .iter()
            .flat_map(|(&v, cs)| cs.iter().map(move |c| (color_label(c), v)))
            .collect();
        let bg = BipartiteGraph::new((0..colors.len()).map(|i| offset + i), g.vertices(), edges)
            .expect("colour labels are disjoint from vertex labels");
        let cd = crown_from_hall_set(&bg).expect("more colours than vertices gives a hall set");
        let mut assigned = Vec::new();
        for &(v, cl) in cd.witness.edges() {
            let c = colors[cl - offset];
            precolored.insert(v, c);
            assigned.push(format!("{v}:{c}"));
        }
        let cert = Record::new()
            .with("cert", "color-crown")
            .with("colors", join_list(cd.crown.iter().map(|cl| colors[cl - offset])))
            .with("head", join_list(&cd.head))
            .with("precolor", join_list(assigned));
        let rule = RuleApplication::new("color-crown")
            .certificate(&cert)
            .deleting(cd.head.iter().copied())
            .budget(-(cd.head.len() as i64));
        g = g.without_vertices(&rule.deleted);
        lists.retain(|v, _| !rule.deleted.contains(v));
        k -= cd.head.len() as i64;
        trace.push(rule);
    }
    Ok(ListColoringReduction {
        graph: g,
        k,
        lists,
        precolored,
        trace,
    })
}

/// Applies [`reduce_list_coloring_colors`] and decides the instances it
/// settles: no vertices left, or lists longer than the vertex count.
pub fn kernelize_list_coloring(g: &Graph, k: usize, lists: &ColorLists) -> Result<KernelOutcome, KernelError> {
    let red = reduce_list_coloring_colors(g, k, lists)?;
    let mut trace = red.trace;
    if red.k < 0 || red.graph.num_vertices() == 0 {
        trace.push(RuleApplication::new("lists-exceed-vertices"));
        return Ok(KernelOutcome::decided(true, trace));
    }
    let inst = ProblemInstance::graph(Problem::NkListColoring, red.graph, red.k as usize).with_lists(red.lists);
    Ok(KernelOutcome::reduced(inst, trace))
}
