use std::collections::BTreeSet;

use super::AdditiveExpansionCertificate;
use crate::bipartite::BipartiteGraph;
use crate::error::LemmaError;
use crate::matching::surplus_violator_indices;

/// `Â ⊆ A`, `B̂ ⊆ B`, both non-empty, with `|N(X) ∩ B̂| ≥ |X| + q` for every
/// non-empty `X ⊆ Â` and `N(B̂) ⊆ Â`.
///
/// Peels off violators: while some `X ⊆ Â` has fewer than `|X| + q`
/// neighbours in `B̂`, both `X` and those neighbours are removed. Each step
/// removes at most `q|X|` B-vertices, so `|B̂| > q|Â|` survives and the
/// final pair is non-empty.
pub fn additive_expansion_lemma(g: &BipartiteGraph, q: usize) -> Result<AdditiveExpansionCertificate, LemmaError> {
    if q == 0 {
        return Err(LemmaError::ZeroQ);
    }
    if let Some(b) = g.isolated_b() {
        return Err(LemmaError::IsolatedInB(b));
    }
    if g.num_b() <= q * g.num_a() {
        return Err(LemmaError::SizeCondition(format!(
            "|B| = {} is not larger than q|A| = {}",
            g.num_b(),
            q * g.num_a()
        )));
    }

    let mut a_hat: BTreeSet<usize> = (0..g.num_a()).collect();
    let mut b_hat: BTreeSet<usize> = (0..g.num_b()).collect();
    loop {
        let ia: Vec<usize> = a_hat.iter().copied().collect();
        let ib: Vec<usize> = b_hat.iter().copied().collect();
        let pos_b: std::collections::BTreeMap<usize, usize> = ib.iter().enumerate().map(|(p, &j)| (j, p)).collect();
        let adj: Vec<Vec<usize>> = ia
            .iter()
            .map(|&i| g.neighbors_a(i).iter().filter_map(|j| pos_b.get(j).copied()).collect())
            .collect();
        let Some(x) = surplus_violator_indices(ib.len(), &adj, q) else {
            break;
        };
        for p in x {
            for &jp in &adj[p] {
                b_hat.remove(&ib[jp]);
            }
            a_hat.remove(&ia[p]);
        }
    }
    assert!(
        !a_hat.is_empty() && !b_hat.is_empty(),
        "additive expansion peeling emptied a side"
    );
    Ok(AdditiveExpansionCertificate {
        a_hat: a_hat.into_iter().map(|i| g.a_label(i)).collect(),
        b_hat: b_hat.into_iter().map(|j| g.b_label(j)).collect(),
        q,
    })
}
