//! Plain-text formats.
//!
//! Graphs use a DIMACS-style layout with 1-based vertex ids:
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! w <v> <weight>     (optional, weight >= 1)
//! e <u> <v>
//! a <v> <v> ...      (bipartite files only: vertices of side A)
//! ```
//!
//! File id `i` is vertex label `i - 1`. Writers compact labels first, so the
//! output is canonical: vertices `1..=n`, weight lines by vertex, edges sorted.
//!
//! CNF formulas use DIMACS CNF (`p cnf <vars> <clauses>`, clauses as signed
//! integers terminated by `0`).
//!
//! Traces and certificates are line-oriented `key=value` records, see
//! [`Record`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bipartite::{BipartiteGraph, WeightedBipartiteGraph};
use crate::cnf::{CnfFormula, Literal};
use crate::error::ParseError;
use crate::graph::{Graph, Vertex};

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what} '{tok}'")))
}

struct RawGraph {
    graph: Graph,
    side_a: Option<BTreeSet<Vertex>>,
}

fn parse_raw_graph(text: &str, allow_sides: bool) -> Result<RawGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new();
    let mut edges_seen = 0usize;
    let mut side_a: Option<BTreeSet<Vertex>> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        if kind == "c" {
            continue;
        }
        if kind == "p" {
            if header.is_some() {
                return Err(ParseError::new(line, "duplicate header"));
            }
            if toks.next() != Some("edge") {
                return Err(ParseError::new(line, "expected 'p edge <n> <m>'"));
            }
            let n: usize = parse_num(toks.next(), line, "vertex count")?;
            let m: usize = parse_num(toks.next(), line, "edge count")?;
            graph = Graph::with_vertices(n);
            header = Some((n, m));
        } else {
            let Some((n, _)) = header else {
                return Err(ParseError::new(line, "line before 'p edge' header"));
            };
            let vertex = |tok: Option<&str>| -> Result<Vertex, ParseError> {
                let v: usize = parse_num(tok, line, "vertex id")?;
                if v == 0 || v > n {
                    return Err(ParseError::new(line, format!("vertex {v} out of range 1..={n}")));
                }
                Ok(v - 1)
            };
            match kind {
                "e" => {
                    let u = vertex(toks.next())?;
                    let v = vertex(toks.next())?;
                    graph
                        .add_edge(u, v)
                        .map_err(|e| ParseError::new(line, e.to_string()))?;
                    edges_seen += 1;
                }
                "w" => {
                    let v = vertex(toks.next())?;
                    let w: u64 = parse_num(toks.next(), line, "weight")?;
                    graph
                        .set_weight(v, w)
                        .map_err(|e| ParseError::new(line, e.to_string()))?;
                }
                "a" if allow_sides => {
                    let set = side_a.get_or_insert_with(BTreeSet::new);
                    for tok in toks.by_ref() {
                        set.insert(vertex(Some(tok))?);
                    }
                }
                other => {
                    return Err(ParseError::new(line, format!("unknown line type '{other}'")));
                }
            }
        }
        if toks.next().is_some() {
            return Err(ParseError::new(line, "trailing tokens"));
        }
    }
    let Some((_, m)) = header else {
        return Err(ParseError::new(last_line.max(1), "missing 'p edge' header"));
    };
    if edges_seen != m {
        return Err(ParseError::new(
            last_line.max(1),
            format!("header declares {m} edges, found {edges_seen}"),
        ));
    }
    Ok(RawGraph { graph, side_a })
}

/// Parses a DIMACS-style graph.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_raw_graph(text, false).map(|r| r.graph)
}

/// Writes a graph canonically (labels compacted to `1..=n`).
pub fn write_graph(g: &Graph) -> String {
    let (g, _) = g.compacted();
    let mut out = format!("p edge {} {}\n", g.num_vertices(), g.num_edges());
    if let Some(w) = g.weights() {
        for (v, x) in w {
            out.push_str(&format!("w {} {}\n", v + 1, x));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses a bipartite graph: graph format plus one or more `a` lines naming
/// side A. Every vertex not listed is on side B. Missing weights default to 1.
pub fn parse_bipartite(text: &str) -> Result<WeightedBipartiteGraph, ParseError> {
    let raw = parse_raw_graph(text, true)?;
    let side_a = raw
        .side_a
        .ok_or_else(|| ParseError::new(1, "missing side assignment line 'a ...'"))?;
    let g = raw.graph;
    let side_b: Vec<Vertex> = g.vertices().filter(|v| !side_a.contains(v)).collect();
    let base = BipartiteGraph::new(side_a, side_b, g.edges())
        .map_err(|e| ParseError::new(1, e.to_string()))?;
    let weights: BTreeMap<Vertex, u64> = g.vertices().map(|v| (v, g.weight(v))).collect();
    WeightedBipartiteGraph::new(base, &weights).map_err(|e| ParseError::new(1, e.to_string()))
}

/// Writes a bipartite graph; weight lines are emitted only if some weight is not 1.
pub fn write_bipartite(g: &WeightedBipartiteGraph) -> String {
    let base = g.base();
    let mut labels: Vec<Vertex> = base.side_a().iter().chain(base.side_b()).copied().collect();
    labels.sort_unstable();
    let pos = |v: Vertex| labels.binary_search(&v).expect("known label") + 1;
    let mut out = format!("p edge {} {}\n", labels.len(), base.num_edges());
    let weighted = (0..base.num_a()).any(|i| g.weight_a(i) != 1) || (0..base.num_b()).any(|j| g.weight_b(j) != 1);
    if weighted {
        for &v in &labels {
            out.push_str(&format!("w {} {}\n", pos(v), g.weight(v).expect("known label")));
        }
    }
    let mut edges: Vec<(usize, usize)> = base
        .edges()
        .map(|(i, j)| {
            let (x, y) = (pos(base.a_label(i)), pos(base.b_label(j)));
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    for (x, y) in edges {
        out.push_str(&format!("e {x} {y}\n"));
    }
    out.push('a');
    for &v in base.side_a() {
        out.push_str(&format!(" {}", pos(v)));
    }
    out.push('\n');
    out
}

/// Parses DIMACS CNF. Clauses may span lines; a `%` token ends the input.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 1;

    'lines: for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace().peekable();
        match toks.peek() {
            None => continue,
            Some(&"c") => continue,
            Some(&"p") => {
                toks.next();
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate header"));
                }
                if toks.next() != Some("cnf") {
                    return Err(ParseError::new(line, "expected 'p cnf <vars> <clauses>'"));
                }
                let n = parse_num(toks.next(), line, "variable count")?;
                let m = parse_num(toks.next(), line, "clause count")?;
                if toks.next().is_some() {
                    return Err(ParseError::new(line, "trailing tokens"));
                }
                header = Some((n, m));
                continue;
            }
            _ => {}
        }
        let Some((n, _)) = header else {
            return Err(ParseError::new(line, "clause before 'p cnf' header"));
        };
        for tok in toks {
            if tok == "%" {
                break 'lines;
            }
            let lit: Literal = parse_num(Some(tok), line, "literal")?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::new(line, "empty clause"));
                }
                let mut clause = std::mem::take(&mut current);
                clause.sort_unstable_by_key(|&l| (l.unsigned_abs(), l < 0));
                clause.dedup();
                if clause.windows(2).any(|w| w[0] == -w[1]) {
                    return Err(ParseError::new(line, "clause contains a variable and its negation"));
                }
                clauses.push(clause);
            } else {
                if lit.unsigned_abs() as usize > n {
                    return Err(ParseError::new(line, format!("literal {lit} out of range 1..={n}")));
                }
                current.push(lit);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::new(last_line, "missing 'p cnf' header"));
    };
    if !current.is_empty() {
        return Err(ParseError::new(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(ParseError::new(
            last_line,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses).map_err(|e| ParseError::new(last_line, e.to_string()))
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        for l in c {
            out.push_str(&format!("{l} "));
        }
        out.push_str("0\n");
    }
    out
}

/// Parses a whitespace-separated list of 1-based vertex ids (`c` lines are comments).
pub fn parse_vertex_list(text: &str) -> Result<BTreeSet<Vertex>, ParseError> {
    let mut out = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim_start().starts_with('c') {
            continue;
        }
        for tok in raw.split_whitespace() {
            let v: usize = parse_num(Some(tok), line, "vertex id")?;
            if v == 0 {
                return Err(ParseError::new(line, "vertex ids are 1-based"));
            }
            out.insert(v - 1);
        }
    }
    Ok(out)
}

/// Writes a vertex set as 1-based ids, positions taken from `labels` (the
/// sorted vertex labels of the graph the set belongs to).
pub fn write_vertex_list(set: &BTreeSet<Vertex>, labels: &[Vertex]) -> String {
    let ids: Vec<String> = set
        .iter()
        .filter_map(|v| labels.binary_search(v).ok())
        .map(|p| (p + 1).to_string())
        .collect();
    format!("{}\n", ids.join(" "))
}

/// Colour lists: one line per vertex, `<vertex> <colour> <colour> ...`.
pub type ColorLists = BTreeMap<Vertex, BTreeSet<u64>>;

pub fn parse_lists(text: &str) -> Result<ColorLists, ParseError> {
    let mut out = ColorLists::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(first) = toks.next() else { continue };
        if first == "c" {
            continue;
        }
        let v: usize = parse_num(Some(first), line, "vertex id")?;
        if v == 0 {
            return Err(ParseError::new(line, "vertex ids are 1-based"));
        }
        let colors = toks
            .map(|t| parse_num::<u64>(Some(t), line, "colour"))
            .collect::<Result<BTreeSet<_>, _>>()?;
        if out.insert(v - 1, colors).is_some() {
            return Err(ParseError::new(line, format!("duplicate list for vertex {v}")));
        }
    }
    Ok(out)
}

pub fn write_lists(lists: &ColorLists, labels: &[Vertex]) -> String {
    let mut out = String::new();
    for (v, colors) in lists {
        let Ok(p) = labels.binary_search(v) else { continue };
        out.push_str(&(p + 1).to_string());
        for c in colors {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

/// One `key=value` line. Keys keep insertion order; neither keys nor values
/// may contain whitespace or `=` in keys.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a field. Whitespace in the value is replaced by `_`.
    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        debug_assert!(!key.is_empty() && !key.contains(['=', ' ', '\t', '\n']));
        let value: String = value
            .to_string()
            .chars()
            .map(|c| if c.is_whitespace() { '_' } else { c })
            .collect();
        self.fields.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    /// Single-token form `k=v;k=v`, used to embed one record in another.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(";")
    }

    pub fn parse(line: &str, line_no: usize) -> Result<Self, ParseError> {
        let mut rec = Record::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| ParseError::new(line_no, format!("expected key=value, got '{tok}'")))?;
            if k.is_empty() {
                return Err(ParseError::new(line_no, "empty key"));
            }
            rec.fields.push((k.to_string(), v.to_string()));
        }
        Ok(rec)
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Parses a record file; blank lines and `#` comments are skipped.
pub fn parse_records(text: &str) -> Result<Vec<Record>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| Record::parse(l, i + 1))
        .collect()
}

pub fn write_records(records: &[Record]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

/// Comma-joined list, `-` when empty.
pub fn join_list<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let s: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if s.is_empty() {
        "-".to_string()
    } else {
        s.join(",")
    }
}

/// Inverse of [`join_list`].
pub fn split_list<T: std::str::FromStr>(s: &str) -> Option<Vec<T>> {
    if s == "-" || s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|x| x.parse().ok()).collect()
}
