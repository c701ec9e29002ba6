use std::collections::BTreeSet;

use super::{KernelOutcome, RuleApplication};
use crate::crown::{crown_or_matching, CrownOrMatching};
use crate::format::join_list;
use crate::format::Record;
use crate::graph::Graph;
use crate::instance::{Problem, ProblemInstance};

/// Vertex cover kernel with at most `3k'` vertices.
pub fn kernelize_vertex_cover(g: &Graph, k: usize) -> KernelOutcome {
    let mut g = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let isolated: BTreeSet<_> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
        if !isolated.is_empty() {
            g = g.without_vertices(&isolated);
            trace.push(RuleApplication::new("delete-isolated").deleting(isolated));
            continue;
        }
        if g.num_edges() == 0 {
            trace.push(RuleApplication::new("edgeless"));
            return KernelOutcome::decided(true, trace);
        }
        if k == 0 {
            trace.push(RuleApplication::new("no-budget-left"));
            return KernelOutcome::decided(false, trace);
        }
        if g.num_vertices() <= 3 * k {
            return KernelOutcome::reduced(ProblemInstance::graph(Problem::VertexCover, g, k), trace);
        }
        match crown_or_matching(&g, k).expect("no isolated vertices and n > 3k") {
            CrownOrMatching::Matching(m) => {
                let cert = Record::new()
                    .with("cert", "matching")
                    .with("edges", join_list(m.edges().iter().map(|(u, v)| format!("{u}:{v}"))));
                trace.push(RuleApplication::new("matching-exceeds-budget").certificate(&cert));
                return KernelOutcome::decided(false, trace);
            }
            CrownOrMatching::Crown(cd) => {
                let h = cd.head.len();
                let rule = RuleApplication::new("crown")
                    .certificate(&cd.to_record())
                    .deleting(cd.crown.iter().chain(&cd.head).copied())
                    .budget(-(h as i64));
                if h > k {
                    trace.push(RuleApplication::new("crown-head-exceeds-budget").certificate(&cd.to_record()));
                    return KernelOutcome::decided(false, trace);
                }
                g = g.without_vertices(&rule.deleted);
                k -= h;
                trace.push(rule);
            }
        }
    }
}
