//! Seeded instance generators for tests, the acceptance suite and the
//! `verify --random` command.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipartite::{BipartiteGraph, WeightedBipartiteGraph};
use crate::cnf::CnfFormula;
use crate::format::ColorLists;
use crate::graph::Graph;
use crate::instance::{Problem, ProblemInstance};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, density)` on vertices `0..n`.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Random bipartite graph with `A = 0..na`, `B = na..na+nb`. With
/// `cover_b`, every B-vertex gets at least one neighbour (when A is non-empty).
pub fn random_bipartite(rng: &mut impl Rng, na: usize, nb: usize, density: f64, cover_b: bool) -> BipartiteGraph {
    let mut edges = BTreeSet::new();
    for i in 0..na {
        for j in 0..nb {
            if rng.gen_bool(density) {
                edges.insert((i, j));
            }
        }
    }
    if cover_b && na > 0 {
        for j in 0..nb {
            if !(0..na).any(|i| edges.contains(&(i, j))) {
                edges.insert((rng.gen_range(0..na), j));
            }
        }
    }
    BipartiteGraph::from_indices(na, nb, &edges.into_iter().collect::<Vec<_>>())
}

/// Weights drawn uniformly from `1..=max_w` for every vertex.
pub fn random_weights(rng: &mut impl Rng, g: BipartiteGraph, max_w_a: u64, max_w_b: u64) -> WeightedBipartiteGraph {
    let wa = (0..g.num_a()).map(|_| rng.gen_range(1..=max_w_a)).collect();
    let wb = (0..g.num_b()).map(|_| rng.gen_range(1..=max_w_b)).collect();
    WeightedBipartiteGraph::from_index_weights(g, wa, wb)
}

/// `m` clauses over `n ≥ 1` variables, each with `1..=max_width` distinct
/// variables and random signs.
pub fn random_cnf(rng: &mut impl Rng, n: usize, m: usize, max_width: usize) -> CnfFormula {
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=max_width.min(n));
            vars.choose_multiple(rng, width)
                .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("generated clauses are valid")
}

/// Lists of exactly `n − k` colours per vertex drawn from `0..palette`.
pub fn random_lists(rng: &mut impl Rng, g: &Graph, k: usize, palette: u64) -> ColorLists {
    let size = g.num_vertices() - k;
    let colors: Vec<u64> = (0..palette.max(size as u64)).collect();
    let mut out = BTreeMap::new();
    for v in g.vertices() {
        out.insert(v, colors.choose_multiple(rng, size).copied().collect());
    }
    out
}

/// A vertex cover: a random subset topped up greedily until every edge is
/// covered.
pub fn random_vertex_cover(rng: &mut impl Rng, g: &Graph) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = g.vertices().filter(|_| rng.gen_bool(0.3)).collect();
    for (u, v) in g.edges() {
        if !s.contains(&u) && !s.contains(&v) {
            s.insert(if rng.gen_bool(0.5) { u } else { v });
        }
    }
    s
}

/// A small instance of `problem`, sized to stay within the oracle guards.
pub fn random_instance(rng: &mut impl Rng, problem: Problem) -> ProblemInstance {
    let density = rng.gen_range(0.1..0.6);
    match problem {
        Problem::MaxSat => {
            let n = rng.gen_range(1..=10);
            let m = rng.gen_range(1..=16);
            let width = rng.gen_range(1..=3);
            let f = random_cnf(rng, n, m, width);
            let k = rng.gen_range(0..=m + 1);
            ProblemInstance::maxsat(f, k)
        }
        Problem::NkListColoring => {
            let n = rng.gen_range(1..=7);
            let g = random_graph(rng, n, density);
            let k = rng.gen_range(0..=2.min(n - 1));
            let palette = rng.gen_range((n - k) as u64..=(n + 2) as u64);
            let lists = random_lists(rng, &g, k, palette);
            ProblemInstance::graph(problem, g, k).with_lists(lists)
        }
        Problem::LongestCycleVc => {
            let n = rng.gen_range(3..=10);
            let g = random_graph(rng, n, density);
            let s = random_vertex_cover(rng, &g);
            let ell = rng.gen_range(3..=6);
            ProblemInstance::graph(problem, g, s.len()).with_ell(ell).with_modulator(s)
        }
        Problem::NkColoring => {
            let n = rng.gen_range(1..=9);
            let k = rng.gen_range(0..=3);
            ProblemInstance::graph(problem, random_graph(rng, n, density), k)
        }
        Problem::Pcoc | Problem::PcocWeighted => {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(1..=3);
            let k = rng.gen_range(0..=3);
            ProblemInstance::graph(problem, random_graph(rng, n, density), k).with_p(p)
        }
        Problem::VertexCover | Problem::CvdCliqueBound => {
            let n = rng.gen_range(1..=12);
            let k = rng.gen_range(0..=4);
            ProblemInstance::graph(problem, random_graph(rng, n, density), k)
        }
    }
}
