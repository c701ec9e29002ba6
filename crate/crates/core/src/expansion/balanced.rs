use std::collections::{BTreeMap, BTreeSet};

use super::{blow_up, cancel_cycles, closure, collapse, root_forest, BalancedExpansionResult, Node};
use crate::bipartite::WeightedBipartiteGraph;
use crate::error::LemmaError;

/// Balanced expansion of A into B at threshold `q`.
///
/// Each A-vertex demands `max(q − w(a), 0)` units from the unit copies of B.
/// A maximum assignment is computed and `A2` is the set of A-vertices
/// reachable from an unmet demand. Every B-vertex adjacent to `A2` is then
/// fully absorbed by `A2`, and every other B-vertex only sees `A1 = A ∖ A2`.
///
/// Both parts are rounded on a forest: B-vertices seen only by `A1` go to
/// their parent (losing at most `W − 1` per head), B-vertices absorbed by `A2`
/// go to their first child when they have one, otherwise to their parent
/// (gaining at most `W − 1` per head). Here `W = max(w^B_max, 1)`.
pub fn balanced_expansion(g: &WeightedBipartiteGraph, q: u64) -> Result<BalancedExpansionResult, LemmaError> {
    let base = g.base();
    if let Some(b) = base.isolated_b() {
        return Err(LemmaError::IsolatedInB(b));
    }
    if q < g.w_b_max() {
        return Err(LemmaError::WeightCondition(format!(
            "q = {q} is smaller than the largest B-weight {}",
            g.w_b_max()
        )));
    }

    let weights: Vec<u64> = (0..base.num_b()).map(|j| g.weight_b(j)).collect();
    let demand: Vec<usize> = (0..base.num_a())
        .map(|i| q.saturating_sub(g.weight_a(i)) as usize)
        .collect();
    let (cadj, copy_owner) = blow_up(base.adjacency_a(), &weights);
    let cl = closure(copy_owner.len(), &cadj, &demand);
    let light = |i: usize| cl.deficient[i];

    let mut heavy_flow = collapse(&cl.load, &copy_owner, |i| !light(i));
    cancel_cycles(&mut heavy_flow);
    let (heavy_parent, _) = root_forest(&heavy_flow);

    let mut light_flow = collapse(&cl.load, &copy_owner, light);
    cancel_cycles(&mut light_flow);
    let (light_parent, light_children) = root_forest(&light_flow);

    let mut f = BTreeMap::new();
    for j in 0..base.num_b() {
        let ns = base.neighbors_b(j);
        let node = Node::B(j);
        let head = if ns.iter().any(|&i| light(i)) {
            let first_child = light_children.get(&node).and_then(|c| c.first());
            match (first_child, light_parent.get(&node)) {
                (Some(Node::A(i)), _) => *i,
                (_, Some(Some(Node::A(i)))) => *i,
                _ => unreachable!("B-vertex next to A2 is fully matched into A2"),
            }
        } else {
            match heavy_parent.get(&node) {
                Some(Some(Node::A(i))) => *i,
                _ => *ns.iter().min().expect("B-vertex is not isolated"),
            }
        };
        f.insert(base.b_label(j), base.a_label(head));
    }
    let a2: BTreeSet<_> = (0..base.num_a()).filter(|&i| light(i)).map(|i| base.a_label(i)).collect();
    let a1 = (0..base.num_a()).filter(|&i| !light(i)).map(|i| base.a_label(i)).collect();
    Ok(BalancedExpansionResult { a1, a2, f, q })
}
