//! Brute-force exact solvers used as ground truth.
//!
//! Nothing here calls into the matching, crown, expansion or kernel code.
//! Graphs are first compacted to bitmasks over `0..n`.

use std::collections::BTreeMap;

use crate::cnf::CnfFormula;
use crate::error::OracleError;
use crate::format::ColorLists;
use crate::graph::{Graph, Vertex};
use crate::instance::{Payload, Problem, ProblemInstance};

pub const VC_LIMIT: usize = 20;
pub const CHROMATIC_LIMIT: usize = 10;
pub const MAXSAT_LIMIT: usize = 16;
pub const DELETION_LIMIT: usize = 14;
pub const CYCLE_LIMIT: usize = 12;
pub const LIST_COLORING_LIMIT: usize = 8;

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<(), OracleError> {
    if actual > limit {
        Err(OracleError::TooLarge { what, actual, limit })
    } else {
        Ok(())
    }
}

/// Adjacency bitmasks over positions `0..n` in label order, and the labels.
fn masks(g: &Graph) -> (Vec<u32>, Vec<Vertex>) {
    let labels: Vec<Vertex> = g.vertices().collect();
    let pos: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj = labels
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << pos[u]))
        .collect();
    (adj, labels)
}

/// Minimum vertex cover size, by branching on a vertex `u` with a live
/// neighbour: either `u` or all of its live neighbours are in the cover.
pub fn exact_vertex_cover(g: &Graph) -> Result<usize, OracleError> {
    guard("vertex count", g.num_vertices(), VC_LIMIT)?;
    let (adj, _) = masks(g);
    fn solve(adj: &[u32], live: u32) -> usize {
        let Some(u) = (0..adj.len()).find(|&u| live >> u & 1 == 1 && adj[u] & live != 0) else {
            return 0;
        };
        let nb = adj[u] & live;
        let take_u = 1 + solve(adj, live & !(1 << u));
        let take_nb = nb.count_ones() as usize + solve(adj, live & !nb & !(1 << u));
        take_u.min(take_nb)
    }
    let all = if adj.is_empty() { 0 } else { u32::MAX >> (32 - adj.len()) };
    Ok(solve(&adj, all))
}

/// Chromatic number by trying `c = 1, 2, …` with backtracking.
pub fn exact_chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    let n = g.num_vertices();
    guard("vertex count", n, CHROMATIC_LIMIT)?;
    let (adj, _) = masks(g);
    fn color(adj: &[u32], colors: &mut Vec<usize>, c: usize) -> bool {
        let v = colors.len();
        if v == adj.len() {
            return true;
        }
        // Symmetry: vertex v may open at most one new colour.
        let limit = colors.iter().copied().max().map_or(1, |m| m + 2).min(c);
        for x in 0..limit {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || colors[u] != x) {
                colors.push(x);
                if color(adj, colors, c) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    Ok((0..=n).find(|&c| color(&adj, &mut Vec::new(), c)).unwrap_or(n))
}

/// Largest number of clauses satisfied by one assignment.
pub fn exact_maxsat(f: &CnfFormula) -> Result<usize, OracleError> {
    guard("variable count", f.num_vars(), MAXSAT_LIMIT)?;
    let clauses: Vec<(u32, u32)> = f
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0u32, 0u32), |(pos, neg), &l| {
                let bit = 1 << (l.unsigned_abs() - 1);
                if l > 0 {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect();
    Ok((0u32..1 << f.num_vars())
        .map(|a| clauses.iter().filter(|&&(p, n)| a & p != 0 || !a & n != 0).count())
        .max()
        .unwrap_or(0))
}

/// Subsets of `0..n` in order of increasing size.
fn subsets_by_size(n: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0u32..1 << n).collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    all
}

/// Largest component of the graph induced by `live`.
fn largest_component(adj: &[u32], live: u32) -> usize {
    let mut left = live;
    let mut best = 0;
    while left != 0 {
        let start = left.trailing_zeros();
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & live & !comp;
            comp |= new;
            frontier |= new;
        }
        best = best.max(comp.count_ones() as usize);
        left &= !comp;
    }
    best
}

/// Fewest deletions leaving only components of at most `p` vertices.
pub fn exact_pcoc(g: &Graph, p: usize) -> Result<usize, OracleError> {
    let n = g.num_vertices();
    guard("vertex count", n, DELETION_LIMIT)?;
    let (adj, _) = masks(g);
    let all = (1u32 << n) - 1;
    Ok(subsets_by_size(n)
        .into_iter()
        .find(|&s| largest_component(&adj, all & !s) <= p)
        .map_or(n, |s| s.count_ones() as usize))
}

/// Fewest deletions leaving a disjoint union of cliques.
pub fn exact_cvd(g: &Graph) -> Result<usize, OracleError> {
    let n = g.num_vertices();
    guard("vertex count", n, DELETION_LIMIT)?;
    let (adj, _) = masks(g);
    let all = (1u32 << n) - 1;
    let is_cluster = |live: u32| {
        (0..n).filter(|&v| live >> v & 1 == 1).all(|v| {
            let closed = (adj[v] & live) | 1 << v;
            // every live neighbour must have the same closed neighbourhood
            (0..n)
                .filter(|&u| (adj[v] & live) >> u & 1 == 1)
                .all(|u| (adj[u] & live) | 1 << u == closed)
        })
    };
    Ok(subsets_by_size(n)
        .into_iter()
        .find(|&s| is_cluster(all & !s))
        .map_or(n, |s| s.count_ones() as usize))
}

/// Whether `g` has a simple cycle with exactly `ell` vertices.
pub fn has_cycle_of_length(g: &Graph, ell: usize) -> Result<bool, OracleError> {
    let n = g.num_vertices();
    guard("vertex count", n, CYCLE_LIMIT)?;
    if ell < 3 || ell > n {
        return Ok(false);
    }
    let (adj, _) = masks(g);
    // Paths starting at their smallest vertex `s`, extended only through larger vertices.
    fn extend(adj: &[u32], s: usize, v: usize, used: u32, len: usize, ell: usize) -> bool {
        if len == ell {
            return adj[v] >> s & 1 == 1;
        }
        let mut cand = adj[v] & !used & !((1u32 << (s + 1)) - 1);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if extend(adj, s, w, used | 1 << w, len + 1, ell) {
                return true;
            }
        }
        false
    }
    Ok((0..n).any(|s| extend(&adj, s, s, 1 << s, 1, ell)))
}

/// Whether every vertex can take a colour from its list with adjacent
/// vertices coloured differently.
pub fn exact_list_coloring(g: &Graph, lists: &ColorLists) -> Result<bool, OracleError> {
    let n = g.num_vertices();
    guard("vertex count", n, LIST_COLORING_LIMIT)?;
    let (adj, labels) = masks(g);
    let options: Vec<Vec<u64>> = labels
        .iter()
        .map(|v| lists.get(v).map(|l| l.iter().copied().collect()).unwrap_or_default())
        .collect();
    fn assign(adj: &[u32], options: &[Vec<u64>], chosen: &mut Vec<u64>) -> bool {
        let v = chosen.len();
        if v == options.len() {
            return true;
        }
        for &c in &options[v] {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || chosen[u] != c) {
                chosen.push(c);
                if assign(adj, options, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(assign(&adj, &options, &mut Vec::new()))
}

/// Yes/no answer of an instance by brute force.
pub fn oracle_answer(inst: &ProblemInstance) -> Result<bool, OracleError> {
    let invalid = |m: &str| OracleError::InvalidInstance(m.to_string());
    let g = match &inst.payload {
        Payload::Cnf(f) => {
            return if inst.problem == Problem::MaxSat {
                Ok(exact_maxsat(f)? >= inst.k)
            } else {
                Err(invalid("CNF payload for a graph problem"))
            };
        }
        Payload::Graph(g) => g,
    };
    match inst.problem {
        Problem::VertexCover => Ok(exact_vertex_cover(g)? <= inst.k),
        Problem::NkColoring => {
            let n = g.num_vertices();
            Ok(inst.k <= n && exact_chromatic_number(g)? <= n - inst.k)
        }
        Problem::MaxSat => Err(invalid("maxsat needs a CNF payload")),
        Problem::NkListColoring => {
            exact_list_coloring(g, inst.lists.as_ref().ok_or_else(|| invalid("missing lists"))?)
        }
        Problem::LongestCycleVc => has_cycle_of_length(g, inst.ell.ok_or_else(|| invalid("missing ell"))?),
        Problem::Pcoc | Problem::PcocWeighted => {
            Ok(exact_pcoc(g, inst.p.ok_or_else(|| invalid("missing p"))?)? <= inst.k)
        }
        Problem::CvdCliqueBound => Ok(exact_cvd(g)? <= inst.k),
    }
}
