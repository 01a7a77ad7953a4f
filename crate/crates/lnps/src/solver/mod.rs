//! Complete branch-and-improve backend.
//!
//! A [`SolverSession`] owns one problem and answers repeated [`solve`] calls.
//! Each call runs conflict-driven clause learning with first-UIP analysis,
//! Luby restarts and an objective propagator that keeps a running lower bound
//! on the linear cost and prunes once it can no longer beat the best model of
//! the call. Calls are isolated: assumptions, branching directives and cost
//! bounds never survive the return, and two identical calls in a row behave
//! identically.
//!
//! Branching follows the directive contract: among unassigned variables the
//! one with the highest directive level decides first and is first tried with
//! the directive's sign; undirected variables (level 0) come afterwards from
//! the activity order with saved phases, initially `false`.
//!
//! [`solve`]: SolverSession::solve

mod core;

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::model::{Lit, Problem, Solution, Var};

use self::core::Search;

/// Branching directive for one variable. `level` must be finite and at least
/// one; atoms that should be frozen instead are passed as assumptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Directive {
    pub var: Var,
    pub level: u32,
    /// First polarity tried when the variable is decided.
    pub sign: bool,
}

/// Per-call search limits. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub max_conflicts: Option<u64>,
    pub wall_clock: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn conflicts(n: u64) -> Budget {
        assert!(n >= 1, "conflict budget must be at least 1");
        Budget {
            max_conflicts: Some(n),
            wall_clock: None,
        }
    }

    pub fn with_wall_clock(mut self, limit: Duration) -> Budget {
        self.wall_clock = Some(limit);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SolveStatus {
    /// Proven best among assignments consistent with the call's assumptions
    /// and initial bound.
    Optimum,
    /// A model was found, but the budget ran out before the proof.
    Satisfiable,
    /// No model exists under the call's assumptions and initial bound.
    Unsatisfiable,
    /// The budget ran out before any model was found.
    BudgetExhausted,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolveStatus::Optimum => "OPTIMUM",
            SolveStatus::Satisfiable => "SATISFIABLE",
            SolveStatus::Unsatisfiable => "UNSATISFIABLE",
            SolveStatus::BudgetExhausted => "BUDGET_EXHAUSTED",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Best model of the call; present exactly for `Optimum`/`Satisfiable`.
    pub model: Option<Solution>,
    pub conflicts_used: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("directive on variable {var} has level {level}; levels start at 1")]
    InvalidDirectiveLevel { var: u32, level: u32 },
    #[error("directive references variable {var}, problem has {num_vars}")]
    DirectiveOutOfRange { var: u32, num_vars: usize },
    #[error("assumption references variable {var}, problem has {num_vars}")]
    AssumptionOutOfRange { var: u32, num_vars: usize },
    #[error("conflict budget of 0 can make no progress")]
    ZeroConflictBudget,
    #[error("no solve call has completed yet")]
    NoSolveYet,
}

/// One problem, many solve calls.
pub struct SolverSession {
    problem: Problem,
    search: Search,
    last_first_decision: Option<Option<Lit>>,
}

impl SolverSession {
    pub fn new(problem: &Problem) -> SolverSession {
        SolverSession {
            search: Search::new(problem),
            problem: problem.clone(),
            last_first_decision: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.problem.num_vars
    }

    /// Minimize the objective under `assumptions`, branching per
    /// `directives`. Models with cost above `initial_bound` are excluded from
    /// the start when it is given. Nothing of this call leaks into the next.
    pub fn solve(
        &mut self,
        assumptions: &[Lit],
        directives: &[Directive],
        budget: Budget,
        initial_bound: Option<u64>,
    ) -> Result<SolveResult, SolveError> {
        let n = self.problem.num_vars;
        for a in assumptions {
            if a.var().index() >= n {
                return Err(SolveError::AssumptionOutOfRange {
                    var: a.var().number(),
                    num_vars: n,
                });
            }
        }
        for d in directives {
            if d.var.index() >= n {
                return Err(SolveError::DirectiveOutOfRange {
                    var: d.var.number(),
                    num_vars: n,
                });
            }
            if d.level == 0 {
                return Err(SolveError::InvalidDirectiveLevel {
                    var: d.var.number(),
                    level: 0,
                });
            }
        }
        if budget.max_conflicts == Some(0) {
            return Err(SolveError::ZeroConflictBudget);
        }

        let (status, model, conflicts_used) =
            self.search
                .run(assumptions, directives, budget, initial_bound);
        self.last_first_decision = Some(self.search.first_decision());

        let model = model.map(|(assignment, cost)| {
            let solution = Solution::new(&self.problem, assignment)
                .expect("solver returned an infeasible model");
            debug_assert_eq!(solution.cost, cost);
            debug_assert!(
                assumptions.iter().all(|a| a.eval(&solution.assignment)),
                "solver returned a model violating an assumption"
            );
            solution
        });
        Ok(SolveResult {
            status,
            model,
            conflicts_used,
        })
    }

    /// First branching decision of the most recent call, or `None` if that
    /// call's first model (or proof) needed no decision. Assumptions do not
    /// count as decisions.
    pub fn first_decision(&self) -> Result<Option<Lit>, SolveError> {
        self.last_first_decision.ok_or(SolveError::NoSolveYet)
    }

    /// Literals fixed by unit propagation alone, or `None` if the problem is
    /// already contradictory at the root.
    pub fn root_implied(&mut self) -> Option<Vec<Lit>> {
        self.last_first_decision = None;
        self.search.root_implied()
    }
}
