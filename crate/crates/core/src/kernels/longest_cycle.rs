use std::collections::{BTreeMap, BTreeSet};

use super::{KernelOutcome, RuleApplication};
use crate::error::KernelError;
use crate::format::{join_list, Record};
use crate::graph::{Graph, Vertex};
use crate::instance::{Problem, ProblemInstance};
use crate::matching::{alternating_reach, max_matching_indices};

/// Cycle of length exactly `ell`, parameterised by a vertex cover `S` with
/// `|S| = k`. The reduced graph has at most `k + k(k−1)/2` vertices.
///
/// Each vertex of `I = V ∖ S` is attached to the pairs of `S` it is adjacent
/// to. While `I` cannot be matched into the pairs, a minimal hall-set of `I`
/// and its pairs form a crown; crown vertices left unmatched by the witness
/// can be swapped out of any cycle and are deleted.
///
/// For `ell = 4` a swap can fail on the cycle `s1 v s2 v'`, so a pair with
/// two common neighbours in `I` decides the instance first.
pub fn reduce_longest_cycle_vc(
    g: &Graph,
    k: usize,
    ell: usize,
    s: &BTreeSet<Vertex>,
) -> Result<KernelOutcome, KernelError> {
    ProblemInstance::graph(Problem::LongestCycleVc, g.clone(), k)
        .with_ell(ell)
        .with_modulator(s.clone())
        .validate()?;
    let mut trace = Vec::new();
    if ell < 3 {
        trace.push(RuleApplication::new("cycle-too-short"));
        return Ok(KernelOutcome::decided(false, trace));
    }
    if ell > 2 * s.len() {
        // Every vertex of I on a cycle sits between two cover vertices.
        trace.push(RuleApplication::new("cycle-longer-than-twice-cover"));
        return Ok(KernelOutcome::decided(false, trace));
    }
    let mut g = g.clone();
    loop {
        let pairs = common_pairs(&g, s);
        if ell == 4 {
            if let Some(((s1, s2), vs)) = pairs.iter().find(|(_, vs)| vs.len() >= 2) {
                let cert = Record::new()
                    .with("cert", "four-cycle")
                    .with("cycle", join_list([*s1, vs[0], *s2, vs[1]]));
                trace.push(RuleApplication::new("shared-pair").certificate(&cert));
                return Ok(KernelOutcome::decided(true, trace));
            }
        }
        let outside: Vec<Vertex> = g.vertices().filter(|v| !s.contains(v)).collect();
        let pair_keys: Vec<(Vertex, Vertex)> = pairs.keys().copied().collect();
        let pos: BTreeMap<Vertex, usize> = outside.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); outside.len()];
        for (j, key) in pair_keys.iter().enumerate() {
            for v in &pairs[key] {
                adj[pos[v]].push(j);
            }
        }
        let m = max_matching_indices(pair_keys.len(), &adj);
        let Some(root) = m.mate_left.iter().position(Option::is_none) else {
            let inst = ProblemInstance::graph(Problem::LongestCycleVc, g, k)
                .with_ell(ell)
                .with_modulator(s.clone());
            return Ok(KernelOutcome::reduced(inst, trace));
        };
        // The alternating closure of one unmatched vertex is a minimal
        // hall-set; its reached pairs are matched inside it.
        let (crown, head) = alternating_reach(&adj, &m, [root]);
        let unmatched: BTreeSet<Vertex> = (0..outside.len())
            .filter(|&i| crown[i] && m.mate_left[i].is_none())
            .map(|i| outside[i])
            .collect();
        let pair_name = |j: usize| format!("{}+{}", pair_keys[j].0, pair_keys[j].1);
        let cert = Record::new()
            .with("cert", "pair-crown")
            .with("crown", join_list((0..outside.len()).filter(|&i| crown[i]).map(|i| outside[i])))
            .with("head", join_list((0..pair_keys.len()).filter(|&j| head[j]).map(pair_name)))
            .with(
                "witness",
                join_list(
                    (0..pair_keys.len())
                        .filter(|&j| head[j])
                        .map(|j| format!("{}:{}", pair_name(j), outside[m.mate_right[j].expect("head pair matched")])),
                ),
            );
        let rule = RuleApplication::new("unmatched-crown-vertex")
            .certificate(&cert)
            .deleting(unmatched);
        g = g.without_vertices(&rule.deleted);
        trace.push(rule);
    }
}

/// Pairs `s1 < s2` of cover vertices with their common neighbours outside
/// the cover.
fn common_pairs(g: &Graph, s: &BTreeSet<Vertex>) -> BTreeMap<(Vertex, Vertex), Vec<Vertex>> {
    let mut out: BTreeMap<(Vertex, Vertex), Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices().filter(|v| !s.contains(v)) {
        let ns: Vec<Vertex> = g.neighbors(v).iter().copied().collect();
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                out.entry((a, b)).or_default().push(v);
            }
        }
    }
    out
}
