//! Kernelizers. Each one loops its rules to a fixpoint and returns either a
//! decided answer or a reduced instance, together with the list of rules that
//! fired.

mod coloring;
mod cvd;
mod list_coloring;
mod longest_cycle;
mod maxsat;
mod pcoc;
mod vc;

use std::collections::BTreeSet;

use crate::error::{KernelError, ParseError};
use crate::format::{join_list, split_list, Record};
use crate::graph::Vertex;
use crate::instance::{Payload, Problem, ProblemInstance};

pub use coloring::kernelize_nk_coloring;
pub use cvd::{bound_cvd_cliques, cluster_components, greedy_p3_packing};
pub use list_coloring::{kernelize_list_coloring, reduce_list_coloring_colors, ListColoringReduction};
pub use longest_cycle::reduce_longest_cycle_vc;
pub use maxsat::{kernelize_maxsat, reduced_formula};
pub use pcoc::{greedy_connected_packing, kernelize_pcoc, kernelize_pcoc_weighted, small_components};
pub use vc::kernelize_vertex_cover;

/// One fired rule. For CNF instances `deleted` holds variables (1-based) and
/// `deleted_clauses` original clause indices; for graphs `deleted` holds
/// vertex labels of the original instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: String,
    pub certificate: String,
    pub deleted: BTreeSet<Vertex>,
    pub deleted_clauses: BTreeSet<usize>,
    pub budget_delta: i64,
}

impl RuleApplication {
    pub(crate) fn new(rule: &str) -> Self {
        Self {
            rule: rule.to_string(),
            certificate: "-".to_string(),
            deleted: BTreeSet::new(),
            deleted_clauses: BTreeSet::new(),
            budget_delta: 0,
        }
    }

    pub(crate) fn certificate(mut self, rec: &Record) -> Self {
        self.certificate = rec.compact();
        self
    }

    pub(crate) fn deleting(mut self, vs: impl IntoIterator<Item = Vertex>) -> Self {
        self.deleted.extend(vs);
        self
    }

    pub(crate) fn budget(mut self, delta: i64) -> Self {
        self.budget_delta = delta;
        self
    }

    pub fn to_record(&self) -> Record {
        Record::new()
            .with("rule", &self.rule)
            .with("deleted", join_list(&self.deleted))
            .with("clauses", join_list(&self.deleted_clauses))
            .with("budget_delta", self.budget_delta)
            .with("certificate", &self.certificate)
    }

    pub fn from_record(rec: &Record, line: usize) -> Result<Self, ParseError> {
        let field = |k: &str| {
            rec.get(k)
                .ok_or_else(|| ParseError::new(line, format!("missing field '{k}'")))
        };
        let list = |k: &str| -> Result<BTreeSet<usize>, ParseError> {
            split_list(field(k)?)
                .map(|v: Vec<usize>| v.into_iter().collect())
                .ok_or_else(|| ParseError::new(line, format!("bad list in '{k}'")))
        };
        Ok(Self {
            rule: field("rule")?.to_string(),
            certificate: field("certificate")?.to_string(),
            deleted: list("deleted")?,
            deleted_clauses: list("clauses")?,
            budget_delta: field("budget_delta")?
                .parse()
                .map_err(|_| ParseError::new(line, "bad budget_delta"))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Decided(bool),
    Reduced(ProblemInstance),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOutcome {
    pub verdict: Verdict,
    pub trace: Vec<RuleApplication>,
}

impl KernelOutcome {
    pub(crate) fn decided(answer: bool, trace: Vec<RuleApplication>) -> Self {
        Self {
            verdict: Verdict::Decided(answer),
            trace,
        }
    }

    pub(crate) fn reduced(inst: ProblemInstance, trace: Vec<RuleApplication>) -> Self {
        Self {
            verdict: Verdict::Reduced(inst),
            trace,
        }
    }

    pub fn decided_answer(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Decided(a) => Some(a),
            Verdict::Reduced(_) => None,
        }
    }

    pub fn reduced_instance(&self) -> Option<&ProblemInstance> {
        match &self.verdict {
            Verdict::Reduced(i) => Some(i),
            Verdict::Decided(_) => None,
        }
    }

    pub fn trace_records(&self) -> Vec<Record> {
        self.trace.iter().map(RuleApplication::to_record).collect()
    }
}

/// Runs the kernelizer matching the instance's problem tag.
pub fn kernelize(inst: &ProblemInstance) -> Result<KernelOutcome, KernelError> {
    inst.validate()?;
    let graph = || inst.as_graph().expect("validated graph payload");
    match inst.problem {
        Problem::VertexCover => Ok(kernelize_vertex_cover(graph(), inst.k)),
        Problem::NkColoring => Ok(kernelize_nk_coloring(graph(), inst.k)),
        Problem::MaxSat => Ok(kernelize_maxsat(inst.as_cnf().expect("validated cnf payload"), inst.k)),
        Problem::NkListColoring => kernelize_list_coloring(graph(), inst.k, inst.lists.as_ref().expect("validated lists")),
        Problem::LongestCycleVc => reduce_longest_cycle_vc(
            graph(),
            inst.k,
            inst.ell.expect("validated ell"),
            inst.modulator.as_ref().expect("validated modulator"),
        ),
        Problem::Pcoc => Ok(kernelize_pcoc(graph(), inst.k, inst.p.expect("validated p"))),
        Problem::PcocWeighted => Ok(kernelize_pcoc_weighted(graph(), inst.k, inst.p.expect("validated p"))),
        Problem::CvdCliqueBound => Ok(bound_cvd_cliques(graph(), inst.k)),
    }
}

/// Applies the deletions and budget changes of `trace` to `original`.
///
/// For a reduced outcome the result equals the reduced instance.
pub fn replay(original: &ProblemInstance, trace: &[RuleApplication]) -> Result<ProblemInstance, KernelError> {
    let mut k = original.k as i64;
    let mut out = original.clone();
    match &original.payload {
        Payload::Graph(g) => {
            let mut removed = BTreeSet::new();
            for r in trace {
                for &v in &r.deleted {
                    if !g.contains(v) || !removed.insert(v) {
                        return Err(KernelError::InvalidInstance(format!(
                            "rule {} deletes vertex {v}, which is not present",
                            r.rule
                        )));
                    }
                }
                k += r.budget_delta;
            }
            out.payload = Payload::Graph(g.without_vertices(&removed));
            if let Some(s) = &mut out.modulator {
                s.retain(|v| !removed.contains(v));
            }
            if let Some(l) = &mut out.lists {
                l.retain(|v, _| !removed.contains(v));
            }
        }
        Payload::Cnf(f) => {
            let mut vars = BTreeSet::new();
            let mut clauses = BTreeSet::new();
            for r in trace {
                let vars_ok = r.deleted.iter().all(|&v| v >= 1 && v <= f.num_vars() && vars.insert(v));
                let clauses_ok = r.deleted_clauses.iter().all(|&c| c < f.num_clauses() && clauses.insert(c));
                if !vars_ok || !clauses_ok {
                    return Err(KernelError::InvalidInstance(format!(
                        "rule {} deletes an element that is not present",
                        r.rule
                    )));
                }
                k += r.budget_delta;
            }
            out.payload = Payload::Cnf(reduced_formula(f, &vars, &clauses));
        }
    }
    out.k = usize::try_from(k)
        .map_err(|_| KernelError::InvalidInstance(format!("replayed budget {k} is negative")))?;
    Ok(out)
}
