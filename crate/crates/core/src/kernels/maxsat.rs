use std::collections::{BTreeMap, BTreeSet};

use super::{KernelOutcome, RuleApplication};
use crate::bipartite::BipartiteGraph;
use crate::cnf::CnfFormula;
use crate::crown::crown_from_hall_set;
use crate::format::{join_list, Record};
use crate::instance::ProblemInstance;
use crate::matching::max_matching;

/// The formula left after deleting variables and clauses, with surviving
/// variables renumbered `1..` in their original order.
pub fn reduced_formula(f: &CnfFormula, vars: &BTreeSet<usize>, clauses: &BTreeSet<usize>) -> CnfFormula {
    let kept: Vec<usize> = (1..=f.num_vars()).filter(|v| !vars.contains(v)).collect();
    let new_id: BTreeMap<usize, i32> = kept.iter().enumerate().map(|(i, &v)| (v, i as i32 + 1)).collect();
    let out: Vec<Vec<i32>> = f
        .clauses()
        .iter()
        .enumerate()
        .filter(|(ci, _)| !clauses.contains(ci))
        .map(|(_, c)| {
            c.iter()
                .map(|&l| {
                    let id = new_id[&(l.unsigned_abs() as usize)];
                    if l > 0 {
                        id
                    } else {
                        -id
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(kept.len(), out).expect("subformula of a valid formula is valid")
}

/// Max-SAT kernel: "can at least `k` clauses be satisfied?". A reduced
/// instance has fewer than `k'` variables and fewer than `2k'` clauses.
///
/// The variable–clause incidence graph drives the rules: a matching that
/// saturates the clauses satisfies all of them, one that saturates the
/// variables satisfies `n` of them, and otherwise a crown lets the head
/// clauses be satisfied by the crown variables, which occur nowhere else.
pub fn kernelize_maxsat(f: &CnfFormula, k: usize) -> KernelOutcome {
    let mut gone_vars = BTreeSet::new();
    let mut gone_clauses = BTreeSet::new();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let live: Vec<usize> = (0..f.num_clauses()).filter(|c| !gone_clauses.contains(c)).collect();
        let m = live.len();
        if k == 0 {
            trace.push(RuleApplication::new("no-clauses-needed"));
            return KernelOutcome::decided(true, trace);
        }
        if 2 * k <= m {
            trace.push(RuleApplication::new("half-of-clauses"));
            return KernelOutcome::decided(true, trace);
        }
        if k > m {
            trace.push(RuleApplication::new("budget-exceeds-clauses"));
            return KernelOutcome::decided(false, trace);
        }
        let used: BTreeSet<usize> = live.iter().flat_map(|&c| f.clause_vars(c)).collect();
        let unused: BTreeSet<usize> = (1..=f.num_vars())
            .filter(|v| !gone_vars.contains(v) && !used.contains(v))
            .collect();
        if !unused.is_empty() {
            gone_vars.extend(&unused);
            trace.push(RuleApplication::new("delete-unused-variables").deleting(unused));
            continue;
        }

        // Variables are labelled by themselves, clause c by num_vars + 1 + c.
        let clause_label = |c: usize| f.num_vars() + 1 + c;
        let edges: Vec<(usize, usize)> = live
            .iter()
            .flat_map(|&c| f.clause_vars(c).map(move |v| (v, clause_label(c))))
            .collect();
        let g = BipartiteGraph::new(used.iter().copied(), live.iter().map(|&c| clause_label(c)), edges)
            .expect("incidence graph is bipartite");
        let mm = max_matching(&g);
        let matching_cert = || {
            Record::new().with("cert", "matching").with(
                "edges",
                join_list(mm.edges().iter().map(|(v, c)| format!("x{v}:c{}", c - f.num_vars() - 1))),
            )
        };
        if mm.len() == m {
            trace.push(RuleApplication::new("clauses-saturated").certificate(&matching_cert()));
            return KernelOutcome::decided(true, trace);
        }
        let n = used.len();
        if n < k {
            let inst = ProblemInstance::maxsat(reduced_formula(f, &gone_vars, &gone_clauses), k);
            return KernelOutcome::reduced(inst, trace);
        }
        let Some(cd) = crown_from_hall_set(&g) else {
            trace.push(RuleApplication::new("variables-saturated").certificate(&matching_cert()));
            return KernelOutcome::decided(true, trace);
        };
        let h = cd.head.len();
        if h >= k {
            trace.push(RuleApplication::new("crown-head-covers-budget").certificate(&cd.to_record()));
            return KernelOutcome::decided(true, trace);
        }
        let mut rule = RuleApplication::new("variable-crown")
            .certificate(&cd.to_record())
            .deleting(cd.crown.iter().copied())
            .budget(-(h as i64));
        rule.deleted_clauses = cd.head.iter().map(|&c| c - f.num_vars() - 1).collect();
        gone_vars.extend(&rule.deleted);
        gone_clauses.extend(&rule.deleted_clauses);
        k -= h;
        trace.push(rule);
    }
}
