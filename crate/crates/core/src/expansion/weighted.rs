use std::collections::{BTreeMap, BTreeSet};

use super::{blow_up, cancel_cycles, closure, collapse, root_forest, Node, WeightedExpansionCertificate};
use crate::bipartite::WeightedBipartiteGraph;
use crate::error::LemmaError;

/// Weighted q-expansion with `W = w^B_max`.
///
/// Every B-vertex `b` is split into `w(b)` unit copies and the unweighted
/// construction is run with `q` clones per A-vertex. The resulting copy
/// counts on `X × Y` are moved around cycles until their support is a forest;
/// rooting each tree at its smallest A-vertex and sending each `b` to its
/// parent loses at most `W − 1` of every head's load.
pub fn weighted_expansion_lemma(
    g: &WeightedBipartiteGraph,
    q: usize,
) -> Result<WeightedExpansionCertificate, LemmaError> {
    let base = g.base();
    if q == 0 {
        return Err(LemmaError::ZeroQ);
    }
    if base.num_a() == 0 && base.num_b() == 0 {
        return Err(LemmaError::EmptyInput("both sides are empty".into()));
    }
    if let Some(b) = base.isolated_b() {
        return Err(LemmaError::IsolatedInB(b));
    }
    let need = q as u64 * base.num_a() as u64;
    if g.total_weight_b() < need {
        return Err(LemmaError::WeightCondition(format!(
            "w(B) = {} is smaller than q|A| = {need}",
            g.total_weight_b()
        )));
    }

    let weights: Vec<u64> = (0..base.num_b()).map(|j| g.weight_b(j)).collect();
    let (cadj, copy_owner) = blow_up(base.adjacency_a(), &weights);
    let cl = closure(copy_owner.len(), &cadj, &vec![q; base.num_a()]);
    let in_x = |i: usize| !cl.deficient[i];

    let mut flow = collapse(&cl.load, &copy_owner, in_x);
    cancel_cycles(&mut flow);
    let (parent, _) = root_forest(&flow);

    let x: BTreeSet<_> = (0..base.num_a()).filter(|&i| in_x(i)).map(|i| base.a_label(i)).collect();
    let mut y = BTreeSet::new();
    let mut f = BTreeMap::new();
    for j in 0..base.num_b() {
        let ns = base.neighbors_b(j);
        if !ns.iter().all(|&i| in_x(i)) {
            continue;
        }
        let head = match parent.get(&Node::B(j)) {
            Some(Some(Node::A(i))) => *i,
            _ => *ns.iter().min().expect("B-vertex is not isolated"),
        };
        y.insert(base.b_label(j));
        f.insert(base.b_label(j), base.a_label(head));
    }
    assert!(!x.is_empty(), "weighted expansion construction produced an empty X");
    Ok(WeightedExpansionCertificate {
        x,
        y,
        f,
        q,
        w_cap: g.w_b_max(),
    })
}
