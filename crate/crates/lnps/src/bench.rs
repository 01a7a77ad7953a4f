//! Benchmark utilities: seeded random instances, an exhaustive reference
//! optimum, and batch runs comparing guided reconstruction against a plain
//! solve at the same conflict budget. Outputs carry no timing, so a suite is
//! byte-identical across reruns of the same spec.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::config::{DestroySpec, LnpsConfig, PrioritizeSpec, ProjectSpec, Weight};
use crate::engine::{self, EngineError, EngineParams};
use crate::model::{Lit, Problem, Solution, SymbolicAtom, Term, Var};
use crate::solver::{Budget, SolveError, SolveStatus, SolverSession};

/// Exhaustive search stays affordable up to this many variables.
pub const BRUTE_FORCE_MAX_VARS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("exhaustive search supports at most {max} variables, instance has {vars}")]
    TooManyVars { vars: usize, max: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Cheapest feasible assignment by enumeration, `None` when infeasible.
/// Ties break toward the lexicographically first assignment (variable 1
/// least significant, false before true).
pub fn brute_force_optimum(problem: &Problem) -> Result<Option<Solution>, BenchError> {
    let n = problem.num_vars;
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(BenchError::TooManyVars {
            vars: n,
            max: BRUTE_FORCE_MAX_VARS,
        });
    }
    // per clause: bitmasks of variables wanted true and wanted false
    let clause_masks: Vec<(u32, u32)> = problem
        .clauses
        .iter()
        .map(|c| {
            let mut pos = 0u32;
            let mut neg = 0u32;
            for l in c {
                let bit = 1u32 << l.var().index();
                if l.is_positive() {
                    pos |= bit;
                } else {
                    neg |= bit;
                }
            }
            (pos, neg)
        })
        .collect();
    let terms: Vec<(u64, u32, bool)> = problem
        .objective
        .iter()
        .map(|&(w, l)| (w, 1u32 << l.var().index(), l.is_positive()))
        .collect();

    let mut best: Option<(u32, u64)> = None;
    for m in 0..1u64 << n {
        let m = m as u32;
        if !clause_masks
            .iter()
            .all(|&(pos, neg)| m & pos != 0 || !m & neg != 0)
        {
            continue;
        }
        let cost: u64 = terms
            .iter()
            .filter(|&&(_, bit, sign)| (m & bit != 0) == sign)
            .map(|&(w, _, _)| w)
            .sum();
        if best.is_none_or(|(_, c)| cost < c) {
            best = Some((m, cost));
        }
    }
    Ok(best.map(|(m, cost)| {
        let assignment: Vec<bool> = (0..n).map(|i| m & (1 << i) != 0).collect();
        let s = Solution::new(problem, assignment).expect("enumerated assignment is feasible");
        debug_assert_eq!(s.cost, cost);
        s
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub num_vars: usize,
    /// Clauses per variable; the count is `max(1, round(density * vars))`.
    pub clause_density: f64,
    /// Probability that a variable carries an objective term.
    pub objective_density: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn standard(num_vars: usize, seed: u64) -> GenParams {
        GenParams {
            num_vars,
            clause_density: 2.5,
            objective_density: 0.7,
            seed,
        }
    }
}

/// Random ternary clauses over distinct variables plus a sparse signed
/// objective. Every variable is bound to a `sel(<id>)` atom. Instances small
/// enough to check are redrawn until satisfiable (up to a hundred draws), so
/// downstream runs start from a feasible problem.
pub fn generate_instance(params: &GenParams) -> Problem {
    assert!(params.num_vars >= 1, "instances need at least one variable");
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut last = draw(&mut rng, params);
    for _ in 1..100 {
        if params.num_vars > 20 || matches!(brute_force_optimum(&last), Ok(Some(_))) {
            return last;
        }
        last = draw(&mut rng, params);
    }
    last
}

fn draw(rng: &mut ChaCha8Rng, params: &GenParams) -> Problem {
    let n = params.num_vars;
    let clause_len = n.min(3);
    let num_clauses = ((params.clause_density * n as f64).round() as usize).max(1);
    let clauses: Vec<Vec<Lit>> = (0..num_clauses)
        .map(|_| {
            rand::seq::index::sample(rng, n, clause_len)
                .iter()
                .map(|i| Lit::new(Var::from_index(i), rng.random_bool(0.5)))
                .collect()
        })
        .collect();
    let mut objective: Vec<(u64, Lit)> = Vec::new();
    for i in 0..n {
        if rng.random_bool(params.objective_density) {
            let w = rng.random_range(1..=9u64);
            objective.push((w, Lit::new(Var::from_index(i), rng.random_bool(0.5))));
        }
    }
    if objective.is_empty() {
        objective.push((1, Lit::positive(Var::from_index(0))));
    }
    let atoms = (0..n)
        .map(|i| SymbolicAtom {
            var: Var::from_index(i),
            predicate: "sel".into(),
            args: vec![Term::Int(i as i64 + 1)],
        })
        .collect();
    Problem {
        num_vars: n,
        clauses,
        objective,
        atoms,
    }
}

/// The generated instances' one-size-fits-all configuration: destroy
/// `percent` of the selected atoms per round, prefer survivors true.
pub fn standard_config(percent: u8) -> LnpsConfig {
    LnpsConfig {
        projects: vec![ProjectSpec {
            predicate: "sel".into(),
            arity: 1,
        }],
        destroys: vec![DestroySpec {
            predicate: "sel".into(),
            arity: 1,
            arg_mask: 1,
            percent,
        }],
        prioritizes: vec![PrioritizeSpec {
            predicate: "sel".into(),
            arity: 1,
            weight: Weight::Level(1),
            sign: true,
        }],
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    /// How many instances to generate and run.
    pub instances: u32,
    pub vars: usize,
    pub clause_density: f64,
    pub objective_density: f64,
    /// Instance `i` is generated from `base_seed + i`.
    pub base_seed: u64,
    /// Guided runs per instance; run `k` uses engine seed `engine.seed + k`.
    pub seeds_per_instance: u32,
    pub engine: EngineParams,
    /// Destroy percentage of the standard configuration.
    pub config_percent: u8,
    /// Conflict budget of the plain reference solve. Defaults to the largest
    /// total the guided runs spent on that instance, so plain is never
    /// starved relative to them.
    pub plain_budget: Option<u64>,
}

/// One guided run beside its instance's reference data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunRow {
    pub instance: u32,
    pub vars: usize,
    pub seed: u64,
    pub optimum: Option<u64>,
    pub plain_budget: u64,
    pub plain_status: SolveStatus,
    pub plain_cost: Option<u64>,
    pub plain_conflicts: u64,
    pub lnps_cost: u64,
    pub lnps_conflicts: u64,
    pub lnps_iterations: u64,
    pub lnps_proven: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub rows: Vec<RunRow>,
}

impl RunReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "instance,vars,seed,optimum,plain_budget,plain_status,plain_cost,plain_conflicts,lnps_cost,lnps_conflicts,lnps_iterations,lnps_proven\n",
        );
        for r in &self.rows {
            let opt = r.optimum.map_or(String::new(), |v| v.to_string());
            let pc = r.plain_cost.map_or(String::new(), |v| v.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.instance,
                r.vars,
                r.seed,
                opt,
                r.plain_budget,
                r.plain_status,
                pc,
                r.plain_conflicts,
                r.lnps_cost,
                r.lnps_conflicts,
                r.lnps_iterations,
                r.lnps_proven,
            ));
        }
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("row serializes"));
            out.push('\n');
        }
        out
    }
}

/// Generate, solve, and compare. Each instance gets `seeds_per_instance`
/// guided runs and one plain reference solve.
pub fn run_suite(spec: &RunSpec) -> Result<RunReport, BenchError> {
    let config = standard_config(spec.config_percent);
    let mut rows = Vec::new();
    for i in 0..spec.instances {
        let problem = generate_instance(&GenParams {
            num_vars: spec.vars,
            clause_density: spec.clause_density,
            objective_density: spec.objective_density,
            seed: spec.base_seed + u64::from(i),
        });
        let optimum = match brute_force_optimum(&problem) {
            Ok(s) => s.map(|s| s.cost),
            Err(BenchError::TooManyVars { .. }) => None,
            Err(e) => return Err(e),
        };

        let mut guided = Vec::new();
        for k in 0..spec.seeds_per_instance {
            let params = EngineParams {
                seed: spec.engine.seed + u64::from(k),
                ..spec.engine.clone()
            };
            let out = engine::run(&problem, &config, &params)?;
            let total = out.initial_conflicts + out.trace.iter().map(|r| r.conflicts).sum::<u64>();
            guided.push((params.seed, out, total));
        }

        let plain_budget = spec
            .plain_budget
            .unwrap_or_else(|| guided.iter().map(|(_, _, t)| *t).max().unwrap_or(1))
            .max(1);
        let mut session = SolverSession::new(&problem);
        let plain = session.solve(&[], &[], Budget::conflicts(plain_budget), None)?;

        for (seed, out, total) in guided {
            rows.push(RunRow {
                instance: i,
                vars: spec.vars,
                seed,
                optimum,
                plain_budget,
                plain_status: plain.status,
                plain_cost: plain.model.as_ref().map(|m| m.cost),
                plain_conflicts: plain.conflicts_used,
                lnps_cost: out.best.cost,
                lnps_conflicts: total,
                lnps_iterations: out.iterations,
                lnps_proven: out.proven_optimal,
            });
        }
    }
    Ok(RunReport { rows })
}
