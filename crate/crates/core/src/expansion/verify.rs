//! Certificate checkers. They only use graph accessors and the matching
//! primitives, never the constructors.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    AdditiveExpansionCertificate, BalancedExpansionResult, ExpansionCertificate, StrongerExpansionCertificate,
    WeightedExpansionCertificate,
};
use crate::bipartite::{BipartiteGraph, WeightedBipartiteGraph};
use crate::graph::Vertex;
use crate::matching::{capacitated_assignment, has_surplus_q};

fn within_a(g: &BipartiteGraph, s: &BTreeSet<Vertex>) -> bool {
    s.iter().all(|&v| g.a_index(v).is_some())
}

fn within_b(g: &BipartiteGraph, s: &BTreeSet<Vertex>) -> bool {
    s.iter().all(|&v| g.b_index(v).is_some())
}

/// `N(s) ⊆ inside` for a set `s` of B-labels.
fn b_neighbors_inside(g: &BipartiteGraph, s: &BTreeSet<Vertex>, inside: &BTreeSet<Vertex>) -> bool {
    s.iter()
        .all(|&b| g.neighbors_of(b).iter().all(|a| inside.contains(a)))
}

pub fn verify_expansion(g: &BipartiteGraph, cert: &ExpansionCertificate) -> bool {
    if cert.q == 0 || cert.x.is_empty() || cert.y.is_empty() {
        return false;
    }
    if !within_a(g, &cert.x) || !within_b(g, &cert.y) {
        return false;
    }
    let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut used_b = BTreeSet::new();
    for &(a, b) in &cert.m {
        if !cert.x.contains(&a) || !cert.y.contains(&b) || !g.has_edge(a, b) || !used_b.insert(b) {
            return false;
        }
        *degree.entry(a).or_insert(0) += 1;
    }
    if cert.x.iter().any(|a| degree.get(a).copied().unwrap_or(0) != cert.q) {
        return false;
    }
    b_neighbors_inside(g, &cert.y, &cert.x)
}

pub fn verify_weighted_expansion(g: &WeightedBipartiteGraph, cert: &WeightedExpansionCertificate) -> bool {
    let base = g.base();
    if cert.q == 0 || cert.x.is_empty() || cert.y.is_empty() || cert.w_cap != g.w_b_max() {
        return false;
    }
    if !within_a(base, &cert.x) || !within_b(base, &cert.y) {
        return false;
    }
    if cert.f.len() != cert.y.len() || !cert.f.keys().all(|b| cert.y.contains(b)) {
        return false;
    }
    let mut load: BTreeMap<Vertex, u64> = BTreeMap::new();
    for (&b, &a) in &cert.f {
        if !cert.x.contains(&a) || !base.has_edge(a, b) {
            return false;
        }
        *load.entry(a).or_insert(0) += g.weight(b).unwrap_or(0);
    }
    let floor = cert.q as i128 - cert.w_cap as i128 + 1;
    if cert.x.iter().any(|a| (load.get(a).copied().unwrap_or(0) as i128) < floor) {
        return false;
    }
    b_neighbors_inside(base, &cert.y, &cert.x)
}

/// Exhaustive ratio check used for small heads.
fn stronger_by_subsets(g: &BipartiteGraph, a_hat: &[Vertex], b_hat: &BTreeSet<Vertex>, q: usize) -> bool {
    (1u32..(1 << a_hat.len())).all(|mask| {
        let mut nb = BTreeSet::new();
        let mut size = 0;
        for (t, &a) in a_hat.iter().enumerate() {
            if mask >> t & 1 == 1 {
                size += 1;
                nb.extend(g.neighbors_of(a).into_iter().filter(|b| b_hat.contains(b)));
            }
        }
        nb.len() >= q * size
    })
}

pub fn verify_stronger(g: &BipartiteGraph, cert: &StrongerExpansionCertificate) -> bool {
    if cert.q == 0 || !within_a(g, &cert.a_hat) || !within_b(g, &cert.b_hat) {
        return false;
    }
    if cert.b_hat.is_empty() && !cert.a_hat.is_empty() {
        return false;
    }
    if !b_neighbors_inside(g, &cert.b_hat, &cert.a_hat) {
        return false;
    }
    let outside_b = g.num_b() - cert.b_hat.len();
    let outside_a = g.num_a() - cert.a_hat.len();
    if outside_b > cert.q * outside_a {
        return false;
    }
    let sub = g.restrict_labels(&cert.a_hat, &cert.b_hat);
    let caps: BTreeMap<Vertex, usize> = cert.a_hat.iter().map(|&a| (a, cert.q)).collect();
    let total: usize = capacitated_assignment(&sub, &caps).values().sum();
    if total != cert.q * cert.a_hat.len() {
        return false;
    }
    let heads: Vec<Vertex> = cert.a_hat.iter().copied().collect();
    heads.len() > 7 || stronger_by_subsets(g, &heads, &cert.b_hat, cert.q)
}

pub fn verify_additive(g: &BipartiteGraph, cert: &AdditiveExpansionCertificate) -> bool {
    if cert.q == 0 || cert.a_hat.is_empty() || cert.b_hat.is_empty() {
        return false;
    }
    if !within_a(g, &cert.a_hat) || !within_b(g, &cert.b_hat) {
        return false;
    }
    b_neighbors_inside(g, &cert.b_hat, &cert.a_hat)
        && has_surplus_q(&g.restrict_labels(&cert.a_hat, &cert.b_hat), cert.q)
}

pub fn verify_balanced(g: &WeightedBipartiteGraph, res: &BalancedExpansionResult) -> bool {
    let base = g.base();
    if !within_a(base, &res.a1) || !within_a(base, &res.a2) {
        return false;
    }
    if !res.a1.is_disjoint(&res.a2) || res.a1.len() + res.a2.len() != base.num_a() {
        return false;
    }
    if res.f.len() != base.num_b() || !res.f.keys().all(|&b| base.b_index(b).is_some()) {
        return false;
    }
    let mut load: BTreeMap<Vertex, u64> = BTreeMap::new();
    for (&b, &a) in &res.f {
        if !base.has_edge(a, b) {
            return false;
        }
        *load.entry(a).or_insert(0) += g.weight(b).unwrap_or(0);
    }
    let w = g.w_b_max().max(1) as i128;
    let q = res.q as i128;
    let total = |a: &Vertex| (g.weight(*a).unwrap_or(0) + load.get(a).copied().unwrap_or(0)) as i128;
    if res.a1.iter().any(|a| total(a) < q - w + 1) || res.a2.iter().any(|a| total(a) > q + w - 1) {
        return false;
    }
    let heavy_share: BTreeSet<Vertex> = res
        .f
        .iter()
        .filter(|(_, a)| res.a1.contains(a))
        .map(|(&b, _)| b)
        .collect();
    b_neighbors_inside(base, &heavy_share, &res.a1)
}
