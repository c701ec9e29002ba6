use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Duration;

use kernelkit::format::Record;
use kernelkit::kernels::{cluster_components, greedy_connected_packing, greedy_p3_packing, small_components};
use kernelkit::{KernelOutcome, Payload, Problem, ProblemInstance, Verdict};

/// Sizes of a graph or formula instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

impl Sizes {
    pub fn of(inst: &ProblemInstance) -> Self {
        let (n, m) = match &inst.payload {
            Payload::Graph(g) => (g.num_vertices(), g.num_edges()),
            Payload::Cnf(f) => (f.num_vars(), f.num_clauses()),
        };
        Sizes { n, m, k: inst.k }
    }
}

/// Summary of one kernelization run.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub problem: Problem,
    pub input: Sizes,
    pub p: Option<usize>,
    pub ell: Option<usize>,
    pub output: Option<Sizes>,
    pub decided: Option<bool>,
    pub rules: BTreeMap<String, usize>,
    /// Problem-specific structure of the reduced instance.
    pub extra: Vec<(String, usize)>,
    pub duration: Duration,
}

impl RunReport {
    pub fn new(inst: &ProblemInstance, out: &KernelOutcome, duration: Duration) -> Self {
        let mut rules = BTreeMap::new();
        for step in &out.trace {
            *rules.entry(step.rule.clone()).or_insert(0) += 1;
        }
        let (output, decided, extra) = match &out.verdict {
            Verdict::Decided(answer) => (None, Some(*answer), Vec::new()),
            Verdict::Reduced(red) => (Some(Sizes::of(red)), None, structure(red)),
        };
        RunReport {
            problem: inst.problem,
            input: Sizes::of(inst),
            p: inst.p,
            ell: inst.ell,
            output,
            decided,
            rules,
            extra,
            duration,
        }
    }

    /// `key=value` lines. The duration is left out so reports of identical
    /// runs compare equal.
    pub fn key_values(&self) -> String {
        let mut rec = Record::new()
            .with("problem", self.problem)
            .with("input_n", self.input.n)
            .with("input_m", self.input.m)
            .with("input_k", self.input.k);
        if let Some(p) = self.p {
            rec.push("p", p);
        }
        if let Some(ell) = self.ell {
            rec.push("ell", ell);
        }
        match (&self.output, self.decided) {
            (_, Some(answer)) => rec.push("decided", yes_no(answer)),
            (Some(o), None) => {
                rec.push("output_n", o.n);
                rec.push("output_m", o.m);
                rec.push("output_k", o.k);
            }
            (None, None) => {}
        }
        for (key, value) in &self.extra {
            rec.push(key, value);
        }
        rec.push("rules_fired", self.rules.values().sum::<usize>());
        for (rule, count) in &self.rules {
            rec.push(&format!("rule.{rule}"), count);
        }
        rec.fields().iter().fold(String::new(), |mut out, (k, v)| {
            let _ = writeln!(out, "{k}={v}");
            out
        })
    }

    pub fn human(&self) -> String {
        let unit = if self.problem == Problem::MaxSat { ("variables", "clauses") } else { ("vertices", "edges") };
        let mut out = format!(
            "{}: input {} {}, {} {}, k = {}",
            self.problem, self.input.n, unit.0, self.input.m, unit.1, self.input.k
        );
        if let Some(p) = self.p {
            let _ = write!(out, ", p = {p}");
        }
        if let Some(ell) = self.ell {
            let _ = write!(out, ", ell = {ell}");
        }
        out.push('\n');
        match (&self.output, self.decided) {
            (_, Some(answer)) => {
                let _ = writeln!(out, "decided {}", yes_no(answer));
            }
            (Some(o), None) => {
                let _ = writeln!(out, "reduced to {} {}, {} {}, k = {}", o.n, unit.0, o.m, unit.1, o.k);
            }
            (None, None) => {}
        }
        for (key, value) in &self.extra {
            let _ = writeln!(out, "  {key}: {value}");
        }
        if self.rules.is_empty() {
            out.push_str("no rules fired\n");
        }
        for (rule, count) in &self.rules {
            let _ = writeln!(out, "  {rule} x{count}");
        }
        let _ = writeln!(out, "took {:.3} ms", self.duration.as_secs_f64() * 1e3);
        out
    }
}

pub fn yes_no(answer: bool) -> &'static str {
    if answer {
        "YES"
    } else {
        "NO"
    }
}

/// Counts that the size bounds talk about, recomputed on the reduced instance.
fn structure(red: &ProblemInstance) -> Vec<(String, usize)> {
    let Some(g) = red.as_graph() else { return Vec::new() };
    match red.problem {
        Problem::Pcoc | Problem::PcocWeighted => {
            let p = red.p.unwrap_or(1);
            let x: BTreeSet<_> = greedy_connected_packing(g, p + 1).into_iter().flatten().collect();
            let comps = small_components(g, &x);
            vec![
                ("packing_vertices".into(), x.len()),
                ("outside_components".into(), comps.len()),
                ("outside_vertices".into(), comps.iter().map(Vec::len).sum()),
                ("largest_component".into(), comps.iter().map(Vec::len).max().unwrap_or(0)),
            ]
        }
        Problem::CvdCliqueBound => {
            let s: BTreeSet<_> = greedy_p3_packing(g).into_iter().flatten().collect();
            vec![
                ("packing_vertices".into(), s.len()),
                ("cliques".into(), cluster_components(g, &s).len()),
            ]
        }
        Problem::NkListColoring => {
            let colors: BTreeSet<u64> = red.lists.iter().flat_map(|l| l.values().flatten().copied()).collect();
            vec![("colors".into(), colors.len())]
        }
        _ => Vec::new(),
    }
}
