//! CNF formulas.

use thiserror::Error;

/// Signed variable index: `v` is the positive literal of variable `v`, `-v`
/// the negative one. Variables are numbered from 1.
pub type Literal = i32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {0} contains a variable and its negation")]
    Tautology(usize),
    #[error("literal {literal} in clause {clause} is out of range 1..={num_vars}")]
    VariableOutOfRange {
        clause: usize,
        literal: Literal,
        num_vars: usize,
    },
}

/// A CNF formula. Each clause is a non-empty set of literals stored sorted by
/// `(variable, sign)`; duplicated literals are merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (ci, mut clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause(ci));
            }
            for &lit in &clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(CnfError::VariableOutOfRange {
                        clause: ci,
                        literal: lit,
                        num_vars,
                    });
                }
            }
            clause.sort_unstable_by_key(|&l| (l.unsigned_abs(), l < 0));
            clause.dedup();
            if clause.windows(2).any(|w| w[0] == -w[1]) {
                return Err(CnfError::Tautology(ci));
            }
            out.push(clause);
        }
        Ok(Self {
            num_vars,
            clauses: out,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Variables (1-based) that occur in clause `ci`.
    pub fn clause_vars(&self, ci: usize) -> impl Iterator<Item = usize> + '_ {
        self.clauses[ci].iter().map(|l| l.unsigned_abs() as usize)
    }

    /// Number of clauses satisfied by `assignment`, where `assignment[v - 1]`
    /// is the value of variable `v`.
    pub fn count_satisfied(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            })
            .count()
    }
}
