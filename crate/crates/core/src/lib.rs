//! Crown decompositions, expansion lemmas and kernelization rules.
//!
//! Every lemma returns a certificate that can be re-checked by an independent
//! verifier, and every kernelizer returns either a decided answer or a reduced
//! instance together with a replayable trace.

pub mod bipartite;
pub mod cnf;
pub mod crown;
pub mod error;
pub mod expansion;
pub mod format;
pub mod graph;
pub mod instance;
pub mod kernels;
pub mod matching;
pub mod oracles;
pub mod random;

pub use bipartite::{BipartiteGraph, WeightedBipartiteGraph};
pub use cnf::{CnfError, CnfFormula, Literal};
pub use error::{GraphError, KernelError, LemmaError, OracleError, ParseError};
pub use graph::{Graph, IdMap, Vertex};
pub use matching::{HallViolator, Matching};
pub use instance::{Payload, Problem, ProblemInstance};
pub use kernels::{kernelize, replay, KernelOutcome, RuleApplication, Verdict};
