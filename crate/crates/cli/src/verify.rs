use kernelkit::oracles::oracle_answer;
use kernelkit::{KernelOutcome, OracleError, ProblemInstance, Verdict};

/// Result of comparing a kernelizer run against the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree { answer: bool },
    Disagree { expected: bool, reason: String },
}

impl Agreement {
    pub fn line(&self) -> String {
        match self {
            Agreement::Agree { answer } => format!("AGREE answer={}", crate::report::yes_no(*answer)),
            Agreement::Disagree { expected, reason } => {
                format!("DISAGREE expected={} {reason}", crate::report::yes_no(*expected))
            }
        }
    }
}

/// Decided answers must match the oracle; reduced instances must have the
/// same oracle answer as the input and never raise the budget.
pub fn check(inst: &ProblemInstance, out: &KernelOutcome) -> Result<Agreement, OracleError> {
    let expected = oracle_answer(inst)?;
    let disagree = |reason: String| Ok(Agreement::Disagree { expected, reason });
    match &out.verdict {
        Verdict::Decided(answer) if *answer != expected => {
            disagree(format!("kernel decided {}", crate::report::yes_no(*answer)))
        }
        Verdict::Decided(_) => Ok(Agreement::Agree { answer: expected }),
        Verdict::Reduced(red) => {
            if red.k > inst.k {
                return disagree(format!("budget grew from {} to {}", inst.k, red.k));
            }
            let reduced = oracle_answer(red)?;
            if reduced != expected {
                return disagree(format!("reduced instance answers {}", crate::report::yes_no(reduced)));
            }
            Ok(Agreement::Agree { answer: expected })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kernelkit::{kernelize, Graph, Problem};

    fn triangle_with_tail() -> ProblemInstance {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        ProblemInstance::graph(Problem::VertexCover, g, 2)
    }

    #[test]
    fn honest_run_agrees() {
        let inst = triangle_with_tail();
        let out = kernelize(&inst).unwrap();
        assert_eq!(check(&inst, &out).unwrap(), Agreement::Agree { answer: true });
    }

    #[test]
    fn tampered_outcomes_disagree() {
        let inst = triangle_with_tail();
        let mut flipped = kernelize(&inst).unwrap();
        flipped.verdict = Verdict::Decided(false);
        assert!(matches!(check(&inst, &flipped).unwrap(), Agreement::Disagree { .. }));

        // an over-eager rule that deletes vertex 2 without charging the budget
        let mut wrong = inst.clone();
        let g = inst.as_graph().unwrap().without_vertices(&[2].into());
        wrong.payload = kernelkit::Payload::Graph(g);
        wrong.k = 0;
        let tampered = KernelOutcome { verdict: Verdict::Reduced(wrong), trace: Vec::new() };
        assert!(matches!(check(&inst, &tampered).unwrap(), Agreement::Disagree { .. }));
    }
}
