//! Brute-force reference computations shared by the integration tests.
//! Written against the public accessors only.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use kernelkit::{BipartiteGraph, Graph, Vertex, WeightedBipartiteGraph};

/// Maximum matching size by trying every choice for each A-vertex.
pub fn brute_bipartite_matching(g: &BipartiteGraph) -> usize {
    fn go(g: &BipartiteGraph, i: usize, used: &mut Vec<bool>) -> usize {
        if i == g.num_a() {
            return 0;
        }
        let mut best = go(g, i + 1, used);
        for &j in g.neighbors_a(i) {
            if !used[j] {
                used[j] = true;
                best = best.max(1 + go(g, i + 1, used));
                used[j] = false;
            }
        }
        best
    }
    go(g, 0, &mut vec![false; g.num_b()])
}

/// Same, restricted to A-indices in `a` and B-indices not in `removed_b`.
pub fn brute_matching_within(g: &BipartiteGraph, a: &[usize], removed_b: &BTreeSet<usize>) -> usize {
    fn go(g: &BipartiteGraph, a: &[usize], t: usize, used: &mut BTreeSet<usize>) -> usize {
        if t == a.len() {
            return 0;
        }
        let mut best = go(g, a, t + 1, used);
        for &j in g.neighbors_a(a[t]) {
            if used.insert(j) {
                best = best.max(1 + go(g, a, t + 1, used));
                used.remove(&j);
            }
        }
        best
    }
    go(g, a, 0, &mut removed_b.clone())
}

/// Maximum matching of a general graph by exhaustive search.
pub fn brute_general_matching(g: &Graph) -> usize {
    fn go(edges: &[(Vertex, Vertex)], t: usize, used: &mut BTreeSet<Vertex>) -> usize {
        if t == edges.len() {
            return 0;
        }
        let mut best = go(edges, t + 1, used);
        let (u, v) = edges[t];
        if !used.contains(&u) && !used.contains(&v) {
            used.insert(u);
            used.insert(v);
            best = best.max(1 + go(edges, t + 1, used));
            used.remove(&u);
            used.remove(&v);
        }
        best
    }
    let edges: Vec<_> = g.edges().collect();
    go(&edges, 0, &mut BTreeSet::new())
}

/// Neighbourhood of a set of A-indices, as B-indices.
pub fn nbhd(g: &BipartiteGraph, xs: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    xs.into_iter()
        .flat_map(|i| g.neighbors_a(i).iter().copied())
        .collect()
}

/// Non-empty subsets of `0..n` as index vectors.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Whether some non-empty `X ⊆ A` has `|N(X)| < |X|`.
pub fn brute_has_hall_violator(g: &BipartiteGraph) -> bool {
    subsets(g.num_a()).any(|x| nbhd(g, x.iter().copied()).len() < x.len())
}

/// Whether `|N(X)| ≥ |X| + q` for every non-empty `X ⊆ A`.
pub fn brute_surplus(g: &BipartiteGraph, q: usize) -> bool {
    subsets(g.num_a()).all(|x| nbhd(g, x.iter().copied()).len() >= x.len() + q)
}

/// Whether A can be saturated after deleting any `q` vertices of B.
pub fn brute_survives_q_deletions(g: &BipartiteGraph, q: usize) -> bool {
    let a: Vec<usize> = (0..g.num_a()).collect();
    if q > g.num_b() {
        return a.is_empty();
    }
    let nb = g.num_b();
    (0u32..1 << nb)
        .filter(|m| m.count_ones() as usize == q)
        .all(|m| {
            let removed: BTreeSet<usize> = (0..nb).filter(|&j| m >> j & 1 == 1).collect();
            brute_matching_within(g, &a, &removed) == a.len()
        })
}

/// Minimum vertex cover of a bipartite graph over all subsets of `A ∪ B`.
pub fn brute_bipartite_vertex_cover(g: &BipartiteGraph) -> usize {
    let (na, nb) = (g.num_a(), g.num_b());
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << (na + nb))
        .filter(|m| edges.iter().all(|&(i, j)| m >> i & 1 == 1 || m >> (na + j) & 1 == 1))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Largest total assignment of B-vertices to A-neighbours within capacities.
pub fn brute_capacitated(g: &BipartiteGraph, caps: &[usize]) -> usize {
    fn go(g: &BipartiteGraph, j: usize, left: &mut Vec<usize>) -> usize {
        if j == g.num_b() {
            return 0;
        }
        let mut best = go(g, j + 1, left);
        for &i in g.neighbors_b(j) {
            if left[i] > 0 {
                left[i] -= 1;
                best = best.max(1 + go(g, j + 1, left));
                left[i] += 1;
            }
        }
        best
    }
    go(g, 0, &mut caps.to_vec())
}

/// Union-find components, each sorted, ordered by smallest vertex.
pub fn union_find_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let idx: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (u, v) in g.edges() {
        let (ru, rv) = (find(&mut parent, idx[&u]), find(&mut parent, idx[&v]));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (i, &v) in vs.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
    out.sort();
    out
}

/// Whether a weighted q-expansion exists for some non-empty `X ⊆ A`.
///
/// For a fixed `X` it suffices to take every B-vertex whose neighbourhood
/// lies in `X`, since extra B-vertices only add load.
pub fn brute_weighted_expansion_exists(g: &WeightedBipartiteGraph, q: usize) -> bool {
    let base = g.base();
    let floor = q as i64 - g.w_b_max() as i64 + 1;
    subsets(base.num_a()).any(|x| {
        let xs: BTreeSet<usize> = x.iter().copied().collect();
        let y: Vec<usize> = (0..base.num_b())
            .filter(|&j| base.neighbors_b(j).iter().all(|i| xs.contains(i)) && !base.neighbors_b(j).is_empty())
            .collect();
        if y.is_empty() {
            return false;
        }
        fn assign(g: &WeightedBipartiteGraph, y: &[usize], t: usize, load: &mut BTreeMap<usize, i64>, xs: &BTreeSet<usize>, floor: i64) -> bool {
            if t == y.len() {
                return xs.iter().all(|i| load.get(i).copied().unwrap_or(0) >= floor);
            }
            for &i in g.base().neighbors_b(y[t]) {
                *load.entry(i).or_insert(0) += g.weight_b(y[t]) as i64;
                let ok = assign(g, y, t + 1, load, xs, floor);
                *load.get_mut(&i).unwrap() -= g.weight_b(y[t]) as i64;
                if ok {
                    return true;
                }
            }
            false
        }
        assign(g, &y, 0, &mut BTreeMap::new(), &xs, floor)
    })
}

/// Whether a balanced expansion exists, by enumerating partitions and maps.
pub fn brute_balanced_exists(g: &WeightedBipartiteGraph, q: u64) -> bool {
    let base = g.base();
    let (na, nb) = (base.num_a(), base.num_b());
    let w = g.w_b_max().max(1) as i64;
    let q = q as i64;
    let mut f = vec![0usize; nb];
    fn maps(base: &BipartiteGraph, t: usize, f: &mut Vec<usize>, check: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if t == f.len() {
            return check(f);
        }
        for &i in base.neighbors_b(t) {
            f[t] = i;
            if maps(base, t + 1, f, check) {
                return true;
            }
        }
        false
    }
    (0u32..1 << na).any(|heavy| {
        let mut check = |f: &[usize]| {
            let mut load = vec![0i64; na];
            for (j, &i) in f.iter().enumerate() {
                load[i] += g.weight_b(j) as i64;
            }
            (0..na).all(|i| {
                let total = g.weight_a(i) as i64 + load[i];
                if heavy >> i & 1 == 1 {
                    total > q - w
                } else {
                    total < q + w
                }
            }) && f.iter().enumerate().all(|(j, &i)| {
                heavy >> i & 1 == 0 || base.neighbors_b(j).iter().all(|&a| heavy >> a & 1 == 1)
            })
        };
        maps(base, 0, &mut f, &mut check)
    })
}

// Definitional checkers for certificates, written from the definitions with
// exhaustive subset enumeration where the library uses flows.

use kernelkit::crown::CrownDecomposition;
use kernelkit::expansion::{
    AdditiveExpansionCertificate, BalancedExpansionResult, ExpansionCertificate, StrongerExpansionCertificate,
    WeightedExpansionCertificate,
};

fn label_nbrs(g: &BipartiteGraph, v: Vertex) -> BTreeSet<Vertex> {
    g.neighbors_of(v).into_iter().collect()
}

fn in_a(g: &BipartiteGraph, s: &BTreeSet<Vertex>) -> bool {
    s.iter().all(|&v| g.a_index(v).is_some())
}

fn in_b(g: &BipartiteGraph, s: &BTreeSet<Vertex>) -> bool {
    s.iter().all(|&v| g.b_index(v).is_some())
}

fn closed_into(g: &BipartiteGraph, bs: &BTreeSet<Vertex>, a: &BTreeSet<Vertex>) -> bool {
    bs.iter().all(|&b| label_nbrs(g, b).is_subset(a))
}

pub fn def_expansion(g: &BipartiteGraph, c: &ExpansionCertificate) -> bool {
    if c.q == 0 || c.x.is_empty() || c.y.is_empty() || !in_a(g, &c.x) || !in_b(g, &c.y) {
        return false;
    }
    let ends: BTreeSet<Vertex> = c.m.iter().map(|e| e.1).collect();
    ends.len() == c.m.len()
        && ends.len() == c.q * c.x.len()
        && c.m.iter().all(|&(a, b)| c.x.contains(&a) && c.y.contains(&b) && g.has_edge(a, b))
        && c.x.iter().all(|a| c.m.iter().filter(|e| e.0 == *a).count() == c.q)
        && closed_into(g, &c.y, &c.x)
}

pub fn def_weighted(g: &WeightedBipartiteGraph, c: &WeightedExpansionCertificate) -> bool {
    let base = g.base();
    if c.q == 0 || c.x.is_empty() || c.y.is_empty() || !in_a(base, &c.x) || !in_b(base, &c.y) {
        return false;
    }
    if c.w_cap != g.w_b_max() || c.f.keys().copied().collect::<BTreeSet<_>>() != c.y {
        return false;
    }
    if !c.f.iter().all(|(&b, &a)| c.x.contains(&a) && base.has_edge(a, b)) {
        return false;
    }
    c.x.iter().all(|&a| {
        let load: u64 = c.f.iter().filter(|e| *e.1 == a).map(|e| g.weight(*e.0).unwrap()).sum();
        load as i64 > c.q as i64 - c.w_cap as i64
    }) && closed_into(base, &c.y, &c.x)
}

pub fn def_stronger(g: &BipartiteGraph, c: &StrongerExpansionCertificate) -> bool {
    if c.q == 0 || !in_a(g, &c.a_hat) || !in_b(g, &c.b_hat) {
        return false;
    }
    if c.b_hat.is_empty() && !c.a_hat.is_empty() {
        return false;
    }
    let heads: Vec<Vertex> = c.a_hat.iter().copied().collect();
    let ratio = subsets(heads.len()).all(|x| {
        let n: BTreeSet<Vertex> = x
            .iter()
            .flat_map(|&t| label_nbrs(g, heads[t]))
            .filter(|b| c.b_hat.contains(b))
            .collect();
        n.len() >= c.q * x.len()
    });
    ratio
        && closed_into(g, &c.b_hat, &c.a_hat)
        && g.num_b() - c.b_hat.len() <= c.q * (g.num_a() - c.a_hat.len())
}

pub fn def_additive(g: &BipartiteGraph, c: &AdditiveExpansionCertificate) -> bool {
    if c.q == 0 || c.a_hat.is_empty() || c.b_hat.is_empty() || !in_a(g, &c.a_hat) || !in_b(g, &c.b_hat) {
        return false;
    }
    closed_into(g, &c.b_hat, &c.a_hat) && brute_surplus(&g.restrict_labels(&c.a_hat, &c.b_hat), c.q)
}

pub fn def_balanced(g: &WeightedBipartiteGraph, r: &BalancedExpansionResult) -> bool {
    let base = g.base();
    let all_a: BTreeSet<Vertex> = base.side_a().iter().copied().collect();
    let all_b: BTreeSet<Vertex> = base.side_b().iter().copied().collect();
    if !r.a1.is_disjoint(&r.a2) || r.a1.union(&r.a2).copied().collect::<BTreeSet<_>>() != all_a {
        return false;
    }
    if r.f.keys().copied().collect::<BTreeSet<_>>() != all_b || !r.f.iter().all(|(&b, &a)| base.has_edge(a, b)) {
        return false;
    }
    let w = g.w_b_max().max(1) as i64;
    let q = r.q as i64;
    let total = |a: Vertex| {
        g.weight(a).unwrap() as i64
            + r.f.iter().filter(|e| *e.1 == a).map(|e| g.weight(*e.0).unwrap() as i64).sum::<i64>()
    };
    let pre: BTreeSet<Vertex> = r.f.iter().filter(|e| r.a1.contains(e.1)).map(|e| *e.0).collect();
    r.a1.iter().all(|&a| total(a) > q - w)
        && r.a2.iter().all(|&a| total(a) < q + w)
        && closed_into(base, &pre, &r.a1)
}

pub fn def_crown(g: &Graph, c: &CrownDecomposition) -> bool {
    let mut all = c.crown.clone();
    all.extend(&c.head);
    all.extend(&c.rest);
    let sizes = c.crown.len() + c.head.len() + c.rest.len();
    if all != g.vertex_set() || sizes != all.len() || c.crown.is_empty() {
        return false;
    }
    let independent = c.crown.iter().all(|&u| c.crown.iter().all(|&v| !g.has_edge(u, v)));
    let separated = c.crown.iter().all(|&u| c.rest.iter().all(|&v| !g.has_edge(u, v)));
    let pairs = c.witness.edges();
    let heads: BTreeSet<Vertex> = pairs.iter().map(|e| e.0).collect();
    let crowns: BTreeSet<Vertex> = pairs.iter().map(|e| e.1).collect();
    let matched = heads == c.head
        && heads.len() == pairs.len()
        && crowns.len() == pairs.len()
        && crowns.is_subset(&c.crown)
        && pairs.iter().all(|&(h, v)| g.has_edge(h, v));
    independent && separated && matched
}

// Random certificate mutations. A mutation may happen to keep a certificate
// valid; callers compare the verifier against the definitional checker.

use rand::seq::IteratorRandom;
use rand::Rng;

fn pick<T: Copy + Ord>(r: &mut impl Rng, s: &BTreeSet<T>) -> Option<T> {
    s.iter().copied().choose(r)
}

fn a_labels(g: &BipartiteGraph) -> BTreeSet<Vertex> {
    g.side_a().iter().copied().collect()
}

fn b_labels(g: &BipartiteGraph) -> BTreeSet<Vertex> {
    g.side_b().iter().copied().collect()
}

pub fn mutate_expansion(g: &BipartiteGraph, c: &ExpansionCertificate, r: &mut impl Rng) -> ExpansionCertificate {
    let mut m = c.clone();
    match r.gen_range(0..6) {
        0 if !m.m.is_empty() => {
            let i = r.gen_range(0..m.m.len());
            m.m.remove(i);
        }
        1 => {
            if let Some(a) = pick(r, &(&a_labels(g) - &m.x)) {
                m.x.insert(a);
            } else {
                m.q += 1;
            }
        }
        2 => {
            if let Some(b) = pick(r, &(&b_labels(g) - &m.y)) {
                m.y.insert(b);
            } else {
                m.q += 1;
            }
        }
        3 => {
            let b = m.m[0].1;
            m.y.remove(&b);
        }
        4 if m.m.len() > 1 => {
            let b = m.m[1].1;
            m.m[0].1 = b;
        }
        _ => m.q = if r.gen_bool(0.5) { m.q + 1 } else { m.q - 1 },
    }
    m
}

pub fn mutate_weighted(g: &WeightedBipartiteGraph, c: &WeightedExpansionCertificate, r: &mut impl Rng) -> WeightedExpansionCertificate {
    let base = g.base();
    let mut m = c.clone();
    match r.gen_range(0..6) {
        0 => {
            let b = pick(r, &m.y).unwrap();
            m.f.remove(&b);
        }
        1 => {
            let b = pick(r, &m.y).unwrap();
            let a = pick(r, &a_labels(base)).unwrap();
            m.f.insert(b, a);
        }
        2 => {
            if let Some(b) = pick(r, &(&b_labels(base) - &m.y)) {
                m.y.insert(b);
                m.f.insert(b, base.neighbors_of(b)[0]);
            } else {
                m.w_cap += 1;
            }
        }
        3 => m.q += r.gen_range(1..4),
        4 => m.w_cap = m.w_cap.saturating_sub(1),
        _ => {
            if let Some(a) = pick(r, &(&a_labels(base) - &m.x)) {
                m.x.insert(a);
            } else {
                m.q += 1;
            }
        }
    }
    m
}

pub fn mutate_stronger(g: &BipartiteGraph, c: &StrongerExpansionCertificate, r: &mut impl Rng) -> StrongerExpansionCertificate {
    let mut m = c.clone();
    match r.gen_range(0..5) {
        0 if !m.a_hat.is_empty() => {
            let a = pick(r, &m.a_hat).unwrap();
            m.a_hat.remove(&a);
        }
        1 if !m.b_hat.is_empty() => {
            let b = pick(r, &m.b_hat).unwrap();
            m.b_hat.remove(&b);
        }
        2 => {
            if let Some(b) = pick(r, &(&b_labels(g) - &m.b_hat)) {
                m.b_hat.insert(b);
            } else {
                m.q += 1;
            }
        }
        3 => {
            if let Some(a) = pick(r, &(&a_labels(g) - &m.a_hat)) {
                m.a_hat.insert(a);
            } else {
                m.q += 1;
            }
        }
        _ => m.q += 1,
    }
    m
}

pub fn mutate_additive(g: &BipartiteGraph, c: &AdditiveExpansionCertificate, r: &mut impl Rng) -> AdditiveExpansionCertificate {
    let mut m = c.clone();
    match r.gen_range(0..5) {
        0 => {
            let a = pick(r, &m.a_hat).unwrap();
            m.a_hat.remove(&a);
        }
        1 => {
            let b = pick(r, &m.b_hat).unwrap();
            m.b_hat.remove(&b);
        }
        2 => {
            if let Some(b) = pick(r, &(&b_labels(g) - &m.b_hat)) {
                m.b_hat.insert(b);
            } else {
                m.q += 1;
            }
        }
        3 => m.q += r.gen_range(1..3),
        _ => {
            if let Some(a) = pick(r, &(&a_labels(g) - &m.a_hat)) {
                m.a_hat.insert(a);
            } else {
                m.q += 1;
            }
        }
    }
    m
}

pub fn mutate_balanced(g: &WeightedBipartiteGraph, c: &BalancedExpansionResult, r: &mut impl Rng) -> BalancedExpansionResult {
    let base = g.base();
    let mut m = c.clone();
    match r.gen_range(0..6) {
        0 if !m.f.is_empty() => {
            let b = *m.f.keys().choose(r).unwrap();
            m.f.remove(&b);
        }
        1 if !m.f.is_empty() => {
            let b = *m.f.keys().choose(r).unwrap();
            let a = pick(r, &a_labels(base)).unwrap();
            m.f.insert(b, a);
        }
        2 if !m.a1.is_empty() => {
            let a = pick(r, &m.a1).unwrap();
            m.a1.remove(&a);
            m.a2.insert(a);
        }
        3 if !m.a2.is_empty() => {
            let a = pick(r, &m.a2).unwrap();
            m.a2.remove(&a);
            m.a1.insert(a);
        }
        4 if !m.a1.is_empty() => {
            let a = pick(r, &m.a1).unwrap();
            m.a2.insert(a);
        }
        _ => m.q += g.w_b_max().max(1) * r.gen_range(1..4),
    }
    m
}

pub fn mutate_crown(g: &Graph, c: &CrownDecomposition, r: &mut impl Rng) -> CrownDecomposition {
    let mut m = c.clone();
    match r.gen_range(0..5) {
        0 if !m.head.is_empty() => {
            let h = pick(r, &m.head).unwrap();
            m.head.remove(&h);
            m.rest.insert(h);
        }
        1 if !m.rest.is_empty() => {
            let v = pick(r, &m.rest).unwrap();
            m.rest.remove(&v);
            m.crown.insert(v);
        }
        2 if !m.witness.is_empty() => {
            let mut e = m.witness.edges().to_vec();
            e.remove(r.gen_range(0..e.len()));
            m.witness = kernelkit::Matching::new(e);
        }
        3 => {
            let v = pick(r, &m.crown).unwrap();
            m.crown.remove(&v);
            m.rest.insert(v);
        }
        _ => {
            let v = pick(r, &g.vertex_set()).unwrap();
            m.rest.insert(v);
        }
    }
    m
}

// Feasible random inputs for each lemma.

use kernelkit::random::{random_bipartite, random_weights};

pub fn plain_input(r: &mut impl Rng) -> (BipartiteGraph, usize) {
    let q = r.gen_range(1..=3);
    let na = r.gen_range(1..=4);
    let nb = q * na + r.gen_range(0..=3);
    let d = r.gen_range(0.1..0.6);
    (random_bipartite(r, na, nb, d, true), q)
}

pub fn weighted_input(r: &mut impl Rng) -> (WeightedBipartiteGraph, usize) {
    loop {
        let q = r.gen_range(1..=4);
        let na = r.gen_range(1..=5);
        let nb = r.gen_range(1..=8);
        let d = r.gen_range(0.1..0.6);
        let base = random_bipartite(r, na, nb, d, true);
        let g = random_weights(r, base, 3, 3);
        if g.total_weight_b() >= (q * na) as u64 {
            return (g, q);
        }
    }
}

pub fn stronger_input(r: &mut impl Rng) -> (BipartiteGraph, usize) {
    let q = r.gen_range(1..=3);
    let na = r.gen_range(0..=6);
    let nb = r.gen_range(0..=10);
    let d = r.gen_range(0.05..0.6);
    let cover = r.gen_bool(0.7);
    (random_bipartite(r, na, nb, d, cover), q)
}

pub fn additive_input(r: &mut impl Rng) -> (BipartiteGraph, usize) {
    let q = r.gen_range(1..=3);
    let na = r.gen_range(1..=3);
    let nb = (q * na + r.gen_range(1..=4)).min(10).max(q * na + 1);
    let d = r.gen_range(0.1..0.7);
    (random_bipartite(r, na, nb, d, true), q)
}

pub fn balanced_input(r: &mut impl Rng) -> (WeightedBipartiteGraph, u64) {
    let na = r.gen_range(0..=4);
    let nb = if na == 0 { 0 } else { r.gen_range(0..=6) };
    let d = r.gen_range(0.1..0.7);
    let base = random_bipartite(r, na, nb, d, true);
    let g = random_weights(r, base, 3, 2);
    let q = g.w_b_max() + r.gen_range(0..=4);
    (g, q)
}

pub fn crown_input(r: &mut impl Rng) -> (Graph, usize) {
    loop {
        let core = r.gen_range(1..=5);
        let leaves = r.gen_range(1..=10);
        let d = r.gen_range(0.2..0.7);
        let mut g = kernelkit::random::random_graph(r, core, d);
        for v in core..core + leaves {
            g.add_vertex(v);
            let u = r.gen_range(0..core);
            g.add_edge(u, v).unwrap();
        }
        let iso: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
        let g = g.without_vertices(&iso);
        if g.num_vertices() >= 4 {
            let k = r.gen_range(1..=(g.num_vertices() - 1) / 3);
            return (g, k);
        }
    }
}

pub fn crown2_input(r: &mut impl Rng) -> BipartiteGraph {
    loop {
        let na = r.gen_range(1..=5);
        let nb = r.gen_range(na..=8);
        let d = r.gen_range(0.1..0.5);
        let g = random_bipartite(r, na, nb, d, true);
        if g.isolated_a().is_none() {
            return g;
        }
    }
}

/// Like [`crown2_input`], but the first `s` vertices of A only see the first
/// `s - 1` vertices of B, so a Hall violator always exists. B may keep
/// isolated vertices when `s = |A|`.
pub fn crown2_violating_input(r: &mut impl Rng) -> BipartiteGraph {
    let na = r.gen_range(2..=6);
    let nb = r.gen_range(na..=9);
    let s = r.gen_range(2..=na);
    let d = r.gen_range(0.2..0.6);
    let mut edges = Vec::new();
    for i in 0..na {
        let reach = if i < s { s - 1 } else { nb };
        let j0 = r.gen_range(0..reach);
        edges.push((i, j0));
        edges.extend((0..reach).filter(|&j| j != j0 && r.gen_bool(d)).map(|j| (i, j)));
    }
    for j in s - 1..nb {
        if s < na && !edges.iter().any(|&(_, b)| b == j) {
            edges.push((r.gen_range(s..na), j));
        }
    }
    BipartiteGraph::from_indices(na, nb, &edges)
}

// Kernel instances and the equivalence / size-bound check.

use kernelkit::oracles::oracle_answer;
use kernelkit::random::{random_cnf, random_graph, random_lists, random_vertex_cover};
use kernelkit::{kernelize, replay, Payload, Problem, ProblemInstance};

/// Either `G(n, d)` or a sparse core with pendant vertices, where crowns and
/// expansions fire often.
pub fn mixed_graph(r: &mut impl Rng, n: usize) -> Graph {
    if n < 2 || r.gen_bool(0.5) {
        let d = r.gen_range(0.05..0.5);
        return random_graph(r, n, d);
    }
    let core = r.gen_range(1..=(n / 3).max(1));
    let d = r.gen_range(0.2..0.8);
    let mut g = random_graph(r, core, d);
    for v in core..n {
        g.add_vertex(v);
        let u = r.gen_range(0..core);
        g.add_edge(u, v).unwrap();
        if r.gen_bool(0.3) {
            let w = r.gen_range(0..v);
            if w != u {
                g.add_edge(w, v).unwrap();
            }
        }
    }
    g
}

pub fn random_instance(problem: Problem, r: &mut impl Rng) -> ProblemInstance {
    match problem {
        Problem::VertexCover => {
            let n = r.gen_range(1..=12);
            let g = mixed_graph(r, n);
            ProblemInstance::graph(problem, g, r.gen_range(0..=5))
        }
        Problem::NkColoring => {
            let n = r.gen_range(1..=9);
            let g = if r.gen_bool(0.5) { mixed_graph(r, n).complement() } else { mixed_graph(r, n) };
            ProblemInstance::graph(problem, g, r.gen_range(0..=3))
        }
        Problem::MaxSat => {
            let n = r.gen_range(1..=12);
            let m = r.gen_range(1..=20);
            let w = r.gen_range(1..=3);
            let f = random_cnf(r, n, m, w);
            let k = r.gen_range(0..=m + 1);
            ProblemInstance::maxsat(f, k)
        }
        Problem::NkListColoring => {
            let n = r.gen_range(1..=8);
            let k = r.gen_range(0..=2.min(n));
            let g = mixed_graph(r, n);
            let palette = r.gen_range(1..=2 * n as u64 + 2);
            let lists = random_lists(r, &g, k, palette);
            ProblemInstance::graph(problem, g, k).with_lists(lists)
        }
        Problem::LongestCycleVc => {
            let n = r.gen_range(3..=10);
            let g = if r.gen_bool(0.5) {
                let d = r.gen_range(0.2..0.7);
                random_graph(r, n, d)
            } else {
                mixed_graph(r, n)
            };
            let s = random_vertex_cover(r, &g);
            let ell = r.gen_range(3..=6);
            ProblemInstance::graph(problem, g, s.len()).with_ell(ell).with_modulator(s)
        }
        Problem::Pcoc | Problem::PcocWeighted => {
            let n = r.gen_range(1..=12);
            let g = mixed_graph(r, n);
            let p = r.gen_range(1..=3);
            ProblemInstance::graph(problem, g, r.gen_range(0..=3)).with_p(p)
        }
        Problem::CvdCliqueBound => {
            let n = r.gen_range(1..=12);
            let g = mixed_graph(r, n);
            ProblemInstance::graph(problem, g, r.gen_range(0..=4))
        }
    }
}

/// Size bound a reduced instance must meet.
pub fn size_bound_holds(red: &ProblemInstance) -> Result<(), String> {
    let k = red.k;
    let fail = |what: String| Err(format!("{} bound violated: {what}", red.problem));
    match &red.payload {
        Payload::Cnf(f) => {
            if !(f.num_vars() < k && f.num_clauses() < 2 * k) {
                return fail(format!("n' = {}, m' = {}, k' = {k}", f.num_vars(), f.num_clauses()));
            }
        }
        Payload::Graph(g) => {
            let n = g.num_vertices();
            match red.problem {
                Problem::VertexCover | Problem::NkColoring if n > 3 * k => {
                    return fail(format!("n' = {n} > 3k' = {}", 3 * k));
                }
                Problem::NkListColoring => {
                    let colors: BTreeSet<u64> = red.lists.as_ref().unwrap().values().flatten().copied().collect();
                    if colors.len() > n {
                        return fail(format!("{} colours for {n} vertices", colors.len()));
                    }
                }
                Problem::LongestCycleVc if n > k + k * k.saturating_sub(1) / 2 => {
                    return fail(format!("n' = {n} with k = {k}"));
                }
                Problem::Pcoc | Problem::PcocWeighted => {
                    let p = red.p.unwrap();
                    let packing = kernelkit::kernels::greedy_connected_packing(g, p + 1);
                    let x: BTreeSet<Vertex> = packing.iter().flatten().copied().collect();
                    let comps = kernelkit::kernels::small_components(g, &x);
                    let outside: usize = comps.iter().map(Vec::len).sum();
                    if x.len() > (p + 1) * k {
                        return fail(format!("modulator {} > (p+1)k'", x.len()));
                    }
                    if comps.iter().any(|c| c.len() > p) {
                        return fail("component larger than p".into());
                    }
                    if red.problem == Problem::Pcoc && comps.len() > p * (p + 1) * k {
                        return fail(format!("{} components > p(p+1)k' = {}", comps.len(), p * (p + 1) * k));
                    }
                    if red.problem == Problem::PcocWeighted && outside > (2 * p - 1) * (p + 1) * k {
                        return fail(format!("weight {outside} > (2p-1)(p+1)k' = {}", (2 * p - 1) * (p + 1) * k));
                    }
                }
                Problem::CvdCliqueBound => {
                    let s: BTreeSet<Vertex> = kernelkit::kernels::greedy_p3_packing(g).into_iter().flatten().collect();
                    let cliques = kernelkit::kernels::cluster_components(g, &s).len();
                    if cliques > 6 * k {
                        return fail(format!("{cliques} cliques > 6k' = {}", 6 * k));
                    }
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Runs the kernelizer and checks every universal property against the
/// oracle. Returns the outcome's decided answer, if any.
pub fn check_kernel(inst: &ProblemInstance) -> Result<Option<bool>, String> {
    let truth = oracle_answer(inst).map_err(|e| e.to_string())?;
    let out = kernelize(inst).map_err(|e| e.to_string())?;
    for rule in &out.trace {
        if rule.budget_delta > 0 {
            return Err(format!("rule {} raises the budget", rule.rule));
        }
    }
    match out.decided_answer() {
        Some(a) if a != truth => Err(format!("decided {a}, oracle says {truth}")),
        Some(a) => Ok(Some(a)),
        None => {
            let red = out.reduced_instance().unwrap();
            if red.k > inst.k {
                return Err(format!("budget grew from {} to {}", inst.k, red.k));
            }
            red.validate().map_err(|e| format!("reduced instance invalid: {e}"))?;
            let reduced_truth = oracle_answer(red).map_err(|e| e.to_string())?;
            if reduced_truth != truth {
                return Err(format!("reduced instance answers {reduced_truth}, original {truth}"));
            }
            size_bound_holds(red)?;
            let replayed = replay(inst, &out.trace).map_err(|e| e.to_string())?;
            if replayed.canonical() != red.canonical() {
                return Err("replayed trace differs from the reduced instance".into());
            }
            Ok(None)
        }
    }
}
