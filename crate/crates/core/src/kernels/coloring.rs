use std::collections::BTreeSet;

use super::{KernelOutcome, RuleApplication};
use crate::crown::{crown_or_matching, CrownOrMatching};
use crate::format::{join_list, Record};
use crate::graph::Graph;
use crate::instance::{Problem, ProblemInstance};

/// Kernel for "is `g` colourable with `n − k` colours", at most `3k'` vertices.
///
/// Works on the complement: `k` disjoint non-edges let `k` pairs share
/// colours. A crown `(C, H, R)` of the complement makes `C` a clique joined
/// to all of `R`, and matching `H` into `C` lets each head reuse its partner's
/// colour, so `χ(G) = |C| + χ(G[R])` and the budget drops by `|H|`.
pub fn kernelize_nk_coloring(g: &Graph, k: usize) -> KernelOutcome {
    let mut g = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let n = g.num_vertices();
        if k == 0 {
            trace.push(RuleApplication::new("no-saving-needed"));
            return KernelOutcome::decided(true, trace);
        }
        if k >= n {
            trace.push(RuleApplication::new("budget-exceeds-vertices"));
            return KernelOutcome::decided(false, trace);
        }
        let universal: BTreeSet<_> = g.vertices().filter(|&v| g.degree(v) + 1 == n).collect();
        if !universal.is_empty() {
            g = g.without_vertices(&universal);
            trace.push(RuleApplication::new("delete-universal").deleting(universal));
            continue;
        }
        if g.num_edges() == 0 {
            trace.push(RuleApplication::new("edgeless"));
            return KernelOutcome::decided(true, trace);
        }
        let comp = g.complement();
        let mut used = BTreeSet::new();
        let mut pairs = Vec::new();
        for (u, v) in comp.edges() {
            if pairs.len() == k {
                break;
            }
            if !used.contains(&u) && !used.contains(&v) {
                used.insert(u);
                used.insert(v);
                pairs.push((u, v));
            }
        }
        if pairs.len() == k {
            let cert = Record::new()
                .with("cert", "non-edge-matching")
                .with("edges", join_list(pairs.iter().map(|(u, v)| format!("{u}:{v}"))));
            trace.push(RuleApplication::new("complement-matching").certificate(&cert));
            return KernelOutcome::decided(true, trace);
        }
        if n <= 3 * k {
            return KernelOutcome::reduced(ProblemInstance::graph(Problem::NkColoring, g, k), trace);
        }
        match crown_or_matching(&comp, k - 1).expect("complement has no isolated vertex and n > 3k") {
            CrownOrMatching::Matching(m) => {
                let cert = Record::new()
                    .with("cert", "non-edge-matching")
                    .with("edges", join_list(m.edges().iter().map(|(u, v)| format!("{u}:{v}"))));
                trace.push(RuleApplication::new("complement-matching").certificate(&cert));
                return KernelOutcome::decided(true, trace);
            }
            CrownOrMatching::Crown(cd) => {
                let h = cd.head.len();
                if h >= k {
                    trace.push(RuleApplication::new("complement-crown-covers-budget").certificate(&cd.to_record()));
                    return KernelOutcome::decided(true, trace);
                }
                let rule = RuleApplication::new("complement-crown")
                    .certificate(&cd.to_record())
                    .deleting(cd.crown.iter().chain(&cd.head).copied())
                    .budget(-(h as i64));
                g = g.without_vertices(&rule.deleted);
                k -= h;
                trace.push(rule);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_is_no() {
        let edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(kernelize_nk_coloring(&g, 1).decided_answer(), Some(false));
    }

    #[test]
    fn empty_graph_is_yes() {
        assert_eq!(kernelize_nk_coloring(&Graph::with_vertices(5), 3).decided_answer(), Some(true));
    }
}
