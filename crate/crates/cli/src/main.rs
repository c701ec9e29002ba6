//! `kernelkit` command-line front end.

mod report;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kernelkit::crown::{bipartite_crown, crown_or_matching, verify_crown, verify_crown_bipartite, CrownOrMatching};
use kernelkit::expansion::*;
use kernelkit::format::{join_list, parse_bipartite, parse_cnf, parse_graph, parse_lists, parse_vertex_list, write_records, Record};
use kernelkit::random::{random_instance, rng};
use kernelkit::{kernelize, LemmaError, OracleError, ParseError, Problem, ProblemInstance, Verdict};
use report::{yes_no, RunReport};
use verify::Agreement;

const EXIT_DISAGREE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "kernelkit", version, about = "Crown decompositions, expansion lemmas and kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a kernelizer to an instance file.
    Kernelize {
        #[arg(value_parser = parse_problem)]
        problem: Problem,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Where to write the reduced instance (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Where to write the rule trace (defaults to `<output>.trace`).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Run a crown or expansion lemma on a graph and print its certificate.
    Lemma {
        lemma: LemmaKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        q: Option<u64>,
        /// Budget for `crown`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare kernelizer answers with the brute-force oracle.
    Verify {
        /// Problem to check; with `--random`, all problems when omitted.
        #[arg(value_parser = parse_problem)]
        problem: Option<Problem>,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Check N seeded random instances instead of an input file.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Graph (DIMACS `p edge`) or, for maxsat, CNF (DIMACS `p cnf`).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Vertex cover file for longest-cycle.
    #[arg(long)]
    modulator: Option<PathBuf>,
    /// Colour lists file for list-coloring.
    #[arg(long)]
    lists: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaKind {
    /// Crown decomposition or k+1 disjoint edges of a graph.
    Crown,
    /// Crown in a bipartite graph with no isolated A-vertex.
    CrownBipartite,
    Expansion,
    Weighted,
    Stronger,
    Additive,
    Balanced,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: line {}: {}", .source.line, .source.message)]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Kernel(#[from] kernelkit::KernelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("lemma precondition unmet: {0}")]
    Precondition(#[from] LemmaError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Precondition(_) => EXIT_PRECONDITION,
            _ => EXIT_INPUT,
        }
    }
}

fn parse_problem(s: &str) -> Result<Problem, String> {
    s.parse().map_err(|e: kernelkit::instance::UnknownProblem| {
        let tags: Vec<_> = Problem::ALL.iter().map(|p| p.tag()).collect();
        format!("{e}; expected one of {}", tags.join(", "))
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn parsed<T>(path: &Path, f: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    f(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn load_instance(problem: Problem, args: &InstanceArgs) -> Result<ProblemInstance, CliError> {
    let input = args.input.as_deref().ok_or_else(|| CliError::Usage("--input is required".into()))?;
    let k = args.k.ok_or_else(|| CliError::Usage("--k is required".into()))?;
    let mut inst = if problem == Problem::MaxSat {
        ProblemInstance::maxsat(parsed(input, parse_cnf)?, k)
    } else {
        ProblemInstance::graph(problem, parsed(input, parse_graph)?, k)
    };
    inst.p = args.p;
    inst.ell = args.ell;
    if let Some(path) = &args.modulator {
        inst.modulator = Some(parsed(path, parse_vertex_list)?);
    }
    if let Some(path) = &args.lists {
        inst.lists = Some(parsed(path, parse_lists)?);
    }
    inst.validate()?;
    Ok(inst)
}

fn cmd_kernelize(
    problem: Problem,
    args: &InstanceArgs,
    output: Option<&Path>,
    trace: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let inst = load_instance(problem, args)?;
    let start = Instant::now();
    let out = kernelize(&inst)?;
    let report = RunReport::new(&inst, &out, start.elapsed());

    let trace_path = trace.map(Path::to_path_buf).or_else(|| output.map(|o| sidecar(o, "trace")));
    if let Some(path) = &trace_path {
        write(path, &write_records(&out.trace_records()))?;
    }
    match &out.verdict {
        Verdict::Decided(answer) => println!("DECIDED {}", yes_no(*answer)),
        Verdict::Reduced(red) => match output {
            Some(path) => {
                write(path, &red.canonical())?;
                println!("REDUCED {}", path.display());
            }
            None => print!("{}", red.canonical()),
        },
    }
    if output.is_some() || out.decided_answer().is_some() {
        print!("{}", report.key_values());
    }
    eprint!("{}", report.human());
    Ok(ExitCode::SUCCESS)
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    name.into()
}

/// Runs the lemma, re-checks its certificate and returns the record lines.
fn run_lemma(kind: LemmaKind, input: &Path, q: Option<u64>, k: Option<usize>) -> Result<(Vec<Record>, bool), CliError> {
    let need_q = || q.ok_or_else(|| CliError::Usage("--q is required for this lemma".into()));
    let q_usize = || need_q().map(|q| q as usize);
    match kind {
        LemmaKind::Crown => {
            let k = k.ok_or_else(|| CliError::Usage("--k is required for crown".into()))?;
            let g = parsed(input, parse_graph)?;
            match crown_or_matching(&g, k)? {
                CrownOrMatching::Crown(cd) => Ok((vec![cd.to_record()], verify_crown(&g, &cd))),
                CrownOrMatching::Matching(m) => {
                    let ok = m.len() == k + 1 && m.is_vertex_disjoint() && m.edges().iter().all(|&(u, v)| g.has_edge(u, v));
                    Ok((vec![matching_record(m.edges())], ok))
                }
            }
        }
        LemmaKind::CrownBipartite => {
            let g = parsed(input, parse_bipartite)?;
            let base = g.base();
            match bipartite_crown(base)? {
                CrownOrMatching::Crown(cd) => Ok((vec![cd.to_record()], verify_crown_bipartite(base, &cd))),
                CrownOrMatching::Matching(m) => {
                    let ok = m.len() == base.num_a() && m.is_valid_in(base);
                    Ok((vec![matching_record(m.edges())], ok))
                }
            }
        }
        LemmaKind::Expansion => {
            let g = parsed(input, parse_bipartite)?;
            let c = expansion_lemma(g.base(), q_usize()?)?;
            Ok((vec![c.to_record()], verify_expansion(g.base(), &c)))
        }
        LemmaKind::Weighted => {
            let g = parsed(input, parse_bipartite)?;
            let c = weighted_expansion_lemma(&g, q_usize()?)?;
            Ok((vec![c.to_record()], verify_weighted_expansion(&g, &c)))
        }
        LemmaKind::Stronger => {
            let g = parsed(input, parse_bipartite)?;
            let c = stronger_expansion_lemma(g.base(), q_usize()?)?;
            Ok((vec![c.to_record()], verify_stronger(g.base(), &c)))
        }
        LemmaKind::Additive => {
            let g = parsed(input, parse_bipartite)?;
            let c = additive_expansion_lemma(g.base(), q_usize()?)?;
            Ok((vec![c.to_record()], verify_additive(g.base(), &c)))
        }
        LemmaKind::Balanced => {
            let g = parsed(input, parse_bipartite)?;
            let c = balanced_expansion(&g, need_q()?)?;
            Ok((vec![c.to_record()], verify_balanced(&g, &c)))
        }
    }
}

fn matching_record(edges: &[(usize, usize)]) -> Record {
    Record::new()
        .with("cert", "matching")
        .with("edges", join_list(edges.iter().map(|(u, v)| format!("{u}:{v}"))))
}

fn cmd_lemma(kind: LemmaKind, input: &Path, q: Option<u64>, k: Option<usize>, output: Option<&Path>) -> Result<ExitCode, CliError> {
    let (records, verified) = run_lemma(kind, input, q, k)?;
    let text = write_records(&records);
    match output {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    if verified {
        eprintln!("certificate verified");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("certificate FAILED verification");
        Ok(ExitCode::from(EXIT_DISAGREE))
    }
}

fn cmd_verify(problem: Option<Problem>, args: &InstanceArgs, random: Option<usize>, seed: u64) -> Result<ExitCode, CliError> {
    let mut disagreements = 0;
    let mut report = |label: &str, inst: &ProblemInstance| -> Result<(), CliError> {
        let out = kernelize(inst)?;
        let verdict = verify::check(inst, &out)?;
        if matches!(verdict, Agreement::Disagree { .. }) {
            disagreements += 1;
        }
        println!("{label} {}", verdict.line());
        Ok(())
    };
    match random {
        Some(count) => {
            let problems = problem.map_or(Problem::ALL.to_vec(), |p| vec![p]);
            for (t, problem) in problems.into_iter().enumerate() {
                let mut r = rng(seed.wrapping_add(t as u64));
                for i in 0..count {
                    let inst = random_instance(&mut r, problem);
                    report(&format!("{problem} #{i}"), &inst)?;
                }
            }
        }
        None => {
            let problem = problem.ok_or_else(|| CliError::Usage("a problem is required without --random".into()))?;
            report(problem.tag(), &load_instance(problem, args)?)?;
        }
    }
    println!("disagreements={disagreements}");
    Ok(if disagreements == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DISAGREE) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Kernelize { problem, instance, output, trace } => {
            cmd_kernelize(*problem, instance, output.as_deref(), trace.as_deref())
        }
        Command::Lemma { lemma, input, q, k, output } => cmd_lemma(*lemma, input, *q, *k, output.as_deref()),
        Command::Verify { problem, instance, random, seed } => cmd_verify(*problem, instance, *random, *seed),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(e.exit_code())
    })
}
