use super::{closure, StrongerExpansionCertificate};
use crate::bipartite::BipartiteGraph;
use crate::error::LemmaError;

/// `Â ⊆ A` with a stronger q-expansion into `B̂ ⊆ B`, `N(B̂) ⊆ Â` and
/// `|B ∖ B̂| ≤ q|A ∖ Â|`.
///
/// `A ∖ Â` is the set reachable from unsaturated clones (q clones per
/// A-vertex) and `B ∖ B̂` its neighbourhood, which is matched into it. The
/// result is the largest pair this construction can certify: every A-vertex
/// that is fully served stays in `Â`.
pub fn stronger_expansion_lemma(g: &BipartiteGraph, q: usize) -> Result<StrongerExpansionCertificate, LemmaError> {
    if q == 0 {
        return Err(LemmaError::ZeroQ);
    }
    let cl = closure(g.num_b(), g.adjacency_a(), &vec![q; g.num_a()]);
    let a_hat = (0..g.num_a())
        .filter(|&i| !cl.deficient[i])
        .map(|i| g.a_label(i))
        .collect();
    let b_hat = (0..g.num_b())
        .filter(|&j| g.neighbors_b(j).iter().all(|&i| !cl.deficient[i]))
        .map(|j| g.b_label(j))
        .collect();
    Ok(StrongerExpansionCertificate { a_hat, b_hat, q })
}
