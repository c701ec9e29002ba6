use std::collections::BTreeSet;

use super::{closure, ExpansionCertificate};
use crate::bipartite::BipartiteGraph;
use crate::error::LemmaError;

/// q-expansion of a non-empty `X ⊆ A` into `Y ⊆ B` with `N(Y) ⊆ X`.
///
/// `X` is the set of A-vertices not reachable from an unsaturated clone when
/// each A-vertex is cloned `q` times; `Y` is every B-vertex without a
/// neighbour outside `X`, so it contains the `q|X|` matched partners and
/// possibly some unmatched B-vertices as well.
pub fn expansion_lemma(g: &BipartiteGraph, q: usize) -> Result<ExpansionCertificate, LemmaError> {
    if q == 0 {
        return Err(LemmaError::ZeroQ);
    }
    if g.num_a() == 0 && g.num_b() == 0 {
        return Err(LemmaError::EmptyInput("both sides are empty".into()));
    }
    if let Some(b) = g.isolated_b() {
        return Err(LemmaError::IsolatedInB(b));
    }
    if g.num_b() < q * g.num_a() {
        return Err(LemmaError::SizeCondition(format!(
            "|B| = {} is smaller than q|A| = {}",
            g.num_b(),
            q * g.num_a()
        )));
    }

    let cl = closure(g.num_b(), g.adjacency_a(), &vec![q; g.num_a()]);
    let keep = |i: usize| !cl.deficient[i];
    let x: BTreeSet<_> = (0..g.num_a()).filter(|&i| keep(i)).map(|i| g.a_label(i)).collect();
    let y = (0..g.num_b())
        .filter(|&j| g.neighbors_b(j).iter().all(|&i| keep(i)))
        .map(|j| g.b_label(j))
        .collect();
    let m = (0..g.num_a())
        .filter(|&i| keep(i))
        .flat_map(|i| cl.load[i].keys().map(move |&j| (i, j)))
        .map(|(i, j)| (g.a_label(i), g.b_label(j)))
        .collect();
    assert!(!x.is_empty(), "expansion construction produced an empty X");
    Ok(ExpansionCertificate { x, y, m, q })
}
