//! Problem instances: a tagged payload plus the budgets each problem needs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cnf::CnfFormula;
use crate::error::KernelError;
use crate::format::{write_cnf, write_graph, write_lists, write_vertex_list, ColorLists, Record};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    VertexCover,
    NkColoring,
    MaxSat,
    NkListColoring,
    LongestCycleVc,
    Pcoc,
    PcocWeighted,
    CvdCliqueBound,
}

impl Problem {
    pub const ALL: [Problem; 8] = [
        Problem::VertexCover,
        Problem::NkColoring,
        Problem::MaxSat,
        Problem::NkListColoring,
        Problem::LongestCycleVc,
        Problem::Pcoc,
        Problem::PcocWeighted,
        Problem::CvdCliqueBound,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Problem::VertexCover => "vc",
            Problem::NkColoring => "nk-coloring",
            Problem::MaxSat => "maxsat",
            Problem::NkListColoring => "list-coloring",
            Problem::LongestCycleVc => "longest-cycle",
            Problem::Pcoc => "pcoc",
            Problem::PcocWeighted => "pcoc-weighted",
            Problem::CvdCliqueBound => "cvd",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown problem '{0}'")]
pub struct UnknownProblem(pub String);

impl FromStr for Problem {
    type Err = UnknownProblem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| UnknownProblem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Graph(Graph),
    Cnf(CnfFormula),
}

/// A problem tag, its payload and the parameters the problem uses.
///
/// Graph payloads keep their original vertex labels through reductions;
/// [`ProblemInstance::canonical`] compacts them for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub problem: Problem,
    pub payload: Payload,
    pub k: usize,
    pub p: Option<usize>,
    pub ell: Option<usize>,
    pub modulator: Option<BTreeSet<Vertex>>,
    pub lists: Option<ColorLists>,
}

impl ProblemInstance {
    pub fn graph(problem: Problem, g: Graph, k: usize) -> Self {
        Self {
            problem,
            payload: Payload::Graph(g),
            k,
            p: None,
            ell: None,
            modulator: None,
            lists: None,
        }
    }

    pub fn maxsat(f: CnfFormula, k: usize) -> Self {
        Self {
            problem: Problem::MaxSat,
            payload: Payload::Cnf(f),
            k,
            p: None,
            ell: None,
            modulator: None,
            lists: None,
        }
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_ell(mut self, ell: usize) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn with_modulator(mut self, s: BTreeSet<Vertex>) -> Self {
        self.modulator = Some(s);
        self
    }

    pub fn with_lists(mut self, lists: ColorLists) -> Self {
        self.lists = Some(lists);
        self
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match &self.payload {
            Payload::Graph(g) => Some(g),
            Payload::Cnf(_) => None,
        }
    }

    pub fn as_cnf(&self) -> Option<&CnfFormula> {
        match &self.payload {
            Payload::Cnf(f) => Some(f),
            Payload::Graph(_) => None,
        }
    }

    /// Checks that the payload and optional fields fit the problem tag.
    pub fn validate(&self) -> Result<(), KernelError> {
        let bad = |m: String| Err(KernelError::InvalidInstance(m));
        match (self.problem, &self.payload) {
            (Problem::MaxSat, Payload::Cnf(_)) => return Ok(()),
            (Problem::MaxSat, _) => return bad("maxsat needs a CNF payload".into()),
            (_, Payload::Cnf(_)) => return bad(format!("{} needs a graph payload", self.problem)),
            _ => {}
        }
        let g = self.as_graph().expect("graph payload checked above");
        match self.problem {
            Problem::Pcoc | Problem::PcocWeighted => match self.p {
                Some(p) if p >= 1 => {}
                _ => return bad("p must be a positive integer".into()),
            },
            Problem::LongestCycleVc => {
                if self.ell.is_none() {
                    return bad("longest-cycle needs ell".into());
                }
                let Some(s) = &self.modulator else {
                    return bad("longest-cycle needs a modulator".into());
                };
                if let Some(v) = s.iter().find(|v| !g.contains(**v)) {
                    return bad(format!("modulator vertex {v} is not in the graph"));
                }
                if !g.is_vertex_cover(s) {
                    return bad("modulator is not a vertex cover".into());
                }
                if s.len() != self.k {
                    return bad(format!("modulator has {} vertices but k = {}", s.len(), self.k));
                }
            }
            Problem::NkListColoring => {
                let Some(lists) = &self.lists else {
                    return bad("list-coloring needs color lists".into());
                };
                let n = g.num_vertices();
                if self.k > n {
                    return bad(format!("k = {} exceeds the vertex count {n}", self.k));
                }
                for v in g.vertices() {
                    let size = lists.get(&v).map_or(0, BTreeSet::len);
                    if size != n - self.k {
                        return bad(format!("list of vertex {v} has {size} colors, expected n-k = {}", n - self.k));
                    }
                }
                if let Some(v) = lists.keys().find(|v| !g.contains(**v)) {
                    return bad(format!("list given for unknown vertex {v}"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Vertex count, or variable count for CNF payloads.
    pub fn size(&self) -> usize {
        match &self.payload {
            Payload::Graph(g) => g.num_vertices(),
            Payload::Cnf(f) => f.num_vars(),
        }
    }

    /// Canonical text: the payload with vertices compacted to `1..=n`, then
    /// one parameter record, then modulator and lists in the same numbering.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        let mut params = Record::new().with("problem", self.problem).with("k", self.k);
        if let Some(p) = self.p {
            params.push("p", p);
        }
        if let Some(ell) = self.ell {
            params.push("ell", ell);
        }
        match &self.payload {
            Payload::Cnf(f) => out.push_str(&write_cnf(f)),
            Payload::Graph(g) => out.push_str(&write_graph(g)),
        }
        out.push_str(&format!("c {params}\n"));
        if let Payload::Graph(g) = &self.payload {
            let labels: Vec<Vertex> = g.vertices().collect();
            if let Some(s) = &self.modulator {
                out.push_str(&write_vertex_list(s, &labels));
            }
            if let Some(l) = &self.lists {
                out.push_str(&write_lists(l, &labels));
            }
        }
        out
    }
}
