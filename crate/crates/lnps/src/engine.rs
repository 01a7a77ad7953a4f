//! The improvement loop: destroy part of the incumbent, compile the
//! survivors into branch guidance, resolve under an escalating conflict
//! budget, and accept or reject the result. With fully finite priorities the
//! loop can prove global optimality; with `inf` fixings it degrades to plain
//! large neighborhood search and never can.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::config::LnpsConfig;
use crate::destroy;
use crate::heuristics::{compile_directives, HeuristicError, StepRegistry};
use crate::model::{Problem, Solution};
use crate::solver::{Budget, SolveError, SolveStatus, SolverSession};

/// Exact nonnegative rational, kept reduced. Budget escalation must not go
/// through floating point: binary fractions misrepresent factors like 1.05,
/// and a one-conflict drift per step compounds across a long run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "denominator must be nonzero");
        let g = gcd(num.max(1), den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Ratio {
        Ratio { num: 1, den: 1 }
    }

    /// Parse `2`, `1.5`, `1.05`, `21/20`.
    pub fn parse(s: &str) -> Option<Ratio> {
        if let Some((n, d)) = s.split_once('/') {
            let num: u64 = n.parse().ok()?;
            let den: u64 = d.parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Ratio::new(num, den));
        }
        match s.split_once('.') {
            None => s.parse().ok().map(|n| Ratio::new(n, 1)),
            Some((int, frac)) => {
                if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                let scale = 10u64.checked_pow(frac.len() as u32)?;
                let whole: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
                let frac: u64 = frac.parse().ok()?;
                Some(Ratio::new(
                    whole.checked_mul(scale)?.checked_add(frac)?,
                    scale,
                ))
            }
        }
    }

    /// `ceil(x * self)`, saturating at `u64::MAX`.
    pub fn ceil_mul(self, x: u64) -> u64 {
        let p = u128::from(x) * u128::from(self.num);
        let v = p.div_ceil(u128::from(self.den));
        u64::try_from(v).unwrap_or(u64::MAX)
    }

    pub fn at_least_one(self) -> bool {
        self.num >= self.den
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// When a reconstruction replaces the incumbent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AcceptPolicy {
    /// Only strictly cheaper solutions move the incumbent.
    StrictImproving,
    /// Equal cost moves too, letting equally good assignments drift.
    NonWorsening,
}

impl AcceptPolicy {
    pub fn accepts(self, candidate: u64, current: u64) -> bool {
        match self {
            AcceptPolicy::StrictImproving => candidate < current,
            AcceptPolicy::NonWorsening => candidate <= current,
        }
    }
}

impl std::str::FromStr for AcceptPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<AcceptPolicy, String> {
        match s {
            "strict" => Ok(AcceptPolicy::StrictImproving),
            "nonworsening" => Ok(AcceptPolicy::NonWorsening),
            other => Err(format!(
                "unknown accept policy `{other}` (strict, nonworsening)"
            )),
        }
    }
}

impl std::fmt::Display for AcceptPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AcceptPolicy::StrictImproving => write!(f, "strict"),
            AcceptPolicy::NonWorsening => write!(f, "nonworsening"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineParams {
    /// Conflict budget of the initial solve.
    pub init_budget: u64,
    /// Conflict budget of the first iteration; later iterations escalate.
    pub iter_budget: u64,
    /// Per-iteration budget multiplier, applied with exact ceiling.
    pub escalation: Ratio,
    pub accept: AcceptPolicy,
    /// Bound each iteration by one less than the incumbent cost, so only
    /// strict improvements are reachable and misses come back provably empty.
    pub tighten_bound: bool,
    pub max_iterations: Option<u64>,
    /// Wall clock for the whole run. An iteration cut short by it is
    /// discarded, leaving the pre-iteration incumbent in place.
    pub time_limit: Option<Duration>,
    pub seed: u64,
}

impl Default for EngineParams {
    fn default() -> EngineParams {
        EngineParams {
            init_budget: 10_000,
            iter_budget: 4_000,
            escalation: Ratio::new(21, 20),
            accept: AcceptPolicy::StrictImproving,
            tighten_bound: true,
            max_iterations: None,
            time_limit: None,
            seed: 0,
        }
    }
}

/// One completed iteration, as recorded in the run trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IterationRecord {
    pub step: u64,
    /// Conflict budget this iteration's solve was given.
    pub budget: u64,
    /// Atoms removed by the destroy round.
    pub destroyed: usize,
    pub status: SolveStatus,
    /// Cost of the reconstruction, when the solve produced one.
    pub temporal_cost: Option<u64>,
    pub accepted: bool,
    /// Incumbent cost after the acceptance decision.
    pub current_cost: u64,
    /// Best cost after this iteration.
    pub best_cost: u64,
    pub conflicts: u64,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub best: Solution,
    /// True only when a fully variable iteration proved there is nothing
    /// cheaper: its solve came back `OPTIMUM`, or `UNSATISFIABLE` under a
    /// tightened bound.
    pub proven_optimal: bool,
    /// Completed iterations; discarded ones do not count.
    pub iterations: u64,
    pub initial_status: SolveStatus,
    pub initial_cost: u64,
    pub initial_conflicts: u64,
    pub trace: Vec<IterationRecord>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("the problem is unsatisfiable")]
    Infeasible,
    #[error("no solution within the initial budget of {budget} conflicts")]
    NoInitialSolution { budget: u64 },
    #[error("`{pred}/{arity}` is projected but matches no atom of the problem")]
    ProjectsNothing { pred: String, arity: usize },
    #[error("conflict budgets must be positive")]
    ZeroBudget,
    #[error("escalation factor {0} would shrink budgets")]
    ShrinkingEscalation(Ratio),
    #[error(transparent)]
    Heuristic(#[from] HeuristicError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Run the full loop on `problem` as configured. The incumbent never
/// worsens: `best` tracks the cheapest reconstruction ever seen, and the
/// trace records every completed iteration in order.
pub fn run(
    problem: &Problem,
    config: &LnpsConfig,
    params: &EngineParams,
) -> Result<Outcome, EngineError> {
    validate(problem, config, params)?;
    let variability = config.variability();
    let deadline = params.time_limit.map(|l| Instant::now() + l);
    let remaining = |now: Instant| deadline.map(|d| d.saturating_duration_since(now));

    let mut session = SolverSession::new(problem);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let initial = session.solve(
        &[],
        &[],
        Budget {
            max_conflicts: Some(params.init_budget),
            wall_clock: remaining(Instant::now()),
        },
        None,
    )?;
    let current = match initial.status {
        SolveStatus::Unsatisfiable => return Err(EngineError::Infeasible),
        SolveStatus::BudgetExhausted => {
            return Err(EngineError::NoInitialSolution {
                budget: params.init_budget,
            })
        }
        SolveStatus::Optimum | SolveStatus::Satisfiable => {
            initial.model.clone().expect("status implies a model")
        }
    };
    let mut outcome = Outcome {
        best: current.clone(),
        proven_optimal: initial.status == SolveStatus::Optimum,
        iterations: 0,
        initial_status: initial.status,
        initial_cost: current.cost,
        initial_conflicts: initial.conflicts_used,
        trace: Vec::new(),
    };
    if outcome.proven_optimal {
        return Ok(outcome);
    }

    let mut current = current;
    let mut registry = StepRegistry::new();
    let mut budget = params.iter_budget;
    let mut step = 0u64;
    loop {
        if let Some(max) = params.max_iterations {
            if outcome.iterations >= max {
                break;
            }
        }
        let now = Instant::now();
        let wall = remaining(now);
        if wall.is_some_and(|w| w.is_zero()) {
            break;
        }
        step += 1;

        let round = destroy::apply(problem, &current, config, &mut rng);
        let set = compile_directives(problem, &round.undestroyed, config, step)?;
        registry.swap(set)?;
        let live = registry.live().expect("just installed");

        let bound = params.tighten_bound.then(|| current.cost.saturating_sub(1));
        let result = session.solve(
            &live.fixings,
            &live.directives,
            Budget {
                max_conflicts: Some(budget),
                wall_clock: wall,
            },
            bound,
        )?;

        let cut_short = matches!(
            result.status,
            SolveStatus::Satisfiable | SolveStatus::BudgetExhausted
        );
        if cut_short && deadline.is_some_and(|d| Instant::now() >= d) {
            // the wall clock interrupted this iteration: discard it
            break;
        }

        let mut accepted = false;
        if let Some(temporal) = &result.model {
            accepted = params.accept.accepts(temporal.cost, current.cost);
            if temporal.cost < outcome.best.cost {
                outcome.best = temporal.clone();
            }
            if accepted {
                current = temporal.clone();
            }
        }
        debug_assert!(outcome.best.cost <= current.cost);

        let finished = variability
            && match result.status {
                SolveStatus::Optimum => true,
                SolveStatus::Unsatisfiable => {
                    // only a tightened bound can make a variable iteration
                    // unsatisfiable, and then the incumbent is unbeatable
                    debug_assert!(params.tighten_bound);
                    debug_assert_eq!(outcome.best.cost, current.cost);
                    true
                }
                _ => false,
            };

        outcome.trace.push(IterationRecord {
            step,
            budget,
            destroyed: round.destroyed.len(),
            status: result.status,
            temporal_cost: result.model.as_ref().map(|m| m.cost),
            accepted,
            current_cost: current.cost,
            best_cost: outcome.best.cost,
            conflicts: result.conflicts_used,
        });
        outcome.iterations += 1;

        if finished {
            outcome.proven_optimal = true;
            break;
        }
        budget = params.escalation.ceil_mul(budget);
    }
    Ok(outcome)
}

fn validate(
    problem: &Problem,
    config: &LnpsConfig,
    params: &EngineParams,
) -> Result<(), EngineError> {
    if params.init_budget == 0 || params.iter_budget == 0 {
        return Err(EngineError::ZeroBudget);
    }
    if !params.escalation.at_least_one() {
        return Err(EngineError::ShrinkingEscalation(params.escalation));
    }
    for p in &config.projects {
        if problem.projected_atoms(&p.predicate, p.arity).is_empty() {
            return Err(EngineError::ProjectsNothing {
                pred: p.predicate.clone(),
                arity: p.arity,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::model::parse_instance;

    /// Two independent implication chains. Each chain picks one of three
    /// heads, each head drags in a weighted tail, optimum 3 per chain. The
    /// first descent lands on a worse model, and the optimality proof needs
    /// real search, so a one-conflict initial budget stays SATISFIABLE.
    fn chains() -> Problem {
        let mut text = String::from("p lnps 12 14\n");
        for v in 1..=12 {
            text.push_str(&format!("a {v} on({v})\n"));
        }
        for o in [0i64, 6] {
            text.push_str(&format!(
                "c {a} {b} {c} 0\nc -{a} {d} 0\nc -{b} {e} 0\nc -{c} {f} 0\nc {d} {e} {f} 0\nc -{d} -{e} 0\nc -{e} -{f} 0\n",
                a = o + 1, b = o + 2, c = o + 3, d = o + 4, e = o + 5, f = o + 6
            ));
        }
        for o in [0i64, 6] {
            text.push_str(&format!(
                "m 2 {}\nm 3 {}\nm 4 {}\nm 1 {}\nm 1 {}\nm 1 {}\n",
                o + 4,
                o + 5,
                o + 6,
                o + 1,
                o + 2,
                o + 3
            ));
        }
        parse_instance(&text).unwrap()
    }

    const CHAINS_CONFIG: &str = "\
_lnps_project(on, 1).
_lnps_destroy(on, 1, 1, p(50)).
_lnps_prioritize(on, 1, 1, true).
";

    fn params() -> EngineParams {
        EngineParams {
            init_budget: 1,
            seed: 3,
            ..EngineParams::default()
        }
    }

    #[test]
    fn ratio_escalates_with_exact_ceilings() {
        let r = Ratio::parse("1.05").unwrap();
        assert_eq!(r, Ratio::new(21, 20));
        let mut b = 40_000u64;
        let mut series = Vec::new();
        for _ in 0..20 {
            b = r.ceil_mul(b);
            series.push(b);
        }
        assert_eq!(
            &series[..6],
            &[42_000, 44_100, 46_305, 48_621, 51_053, 53_606]
        );
        assert_eq!(b, 106_147);
    }

    #[test]
    fn ratio_parses_common_spellings() {
        assert_eq!(Ratio::parse("2"), Some(Ratio::new(2, 1)));
        assert_eq!(Ratio::parse("1.5"), Some(Ratio::new(3, 2)));
        assert_eq!(Ratio::parse("21/20"), Some(Ratio::new(21, 20)));
        assert_eq!(Ratio::parse("1.10"), Some(Ratio::new(11, 10)));
        assert_eq!(Ratio::parse(".5"), Some(Ratio::new(1, 2)));
        assert_eq!(Ratio::parse("1."), None);
        assert_eq!(Ratio::parse("1.0.5"), None);
        assert_eq!(Ratio::parse("x"), None);
        assert_eq!(Ratio::parse("1/0"), None);
        assert_eq!(Ratio::parse("1.05").unwrap().to_string(), "21/20");
        assert_eq!(Ratio::parse("3").unwrap().to_string(), "3");
    }

    #[test]
    fn ceil_mul_rounds_up_and_saturates() {
        let r = Ratio::new(21, 20);
        assert_eq!(r.ceil_mul(1000), 1050);
        assert_eq!(r.ceil_mul(1050), 1103); // 1102.5 up
        assert_eq!(r.ceil_mul(0), 0);
        assert_eq!(r.ceil_mul(u64::MAX), u64::MAX);
        assert_eq!(Ratio::one().ceil_mul(7), 7);
    }

    #[test]
    fn solves_to_proven_optimality_through_the_loop() {
        let p = chains();
        let c = parse_config(CHAINS_CONFIG).unwrap();
        let out = run(&p, &c, &params()).unwrap();
        assert_eq!(out.initial_status, SolveStatus::Satisfiable);
        assert!(
            out.initial_cost > 6,
            "initial {} already optimal",
            out.initial_cost
        );
        assert_eq!(out.best.cost, 6);
        assert!(out.proven_optimal);
        assert!(out.iterations >= 1);
        assert_eq!(out.trace.last().unwrap().best_cost, 6);
    }

    #[test]
    fn initial_optimum_returns_without_iterating() {
        // unconstrained objective: the initial solve already proves cost 0
        let p = parse_instance("p lnps 2 0\na 1 pick(1)\na 2 pick(2)\nm 1 1\nm 1 2\n").unwrap();
        let c = parse_config("_lnps_project(pick, 1).\n").unwrap();
        let out = run(&p, &c, &params()).unwrap();
        assert_eq!(out.best.cost, 0);
        assert!(out.proven_optimal);
        assert_eq!(out.iterations, 0);
        assert!(out.trace.is_empty());
        assert_eq!(out.initial_status, SolveStatus::Optimum);
    }

    #[test]
    fn infeasible_problems_are_reported() {
        let p = parse_instance("p lnps 1 2\na 1 pick(1)\nc 1 0\nc -1 0\n").unwrap();
        let c = parse_config("_lnps_project(pick, 1).\n").unwrap();
        assert!(matches!(
            run(&p, &c, &params()),
            Err(EngineError::Infeasible)
        ));
    }

    #[test]
    fn project_specs_must_match_something() {
        let p = chains();
        let c = parse_config("_lnps_project(route, 2).\n").unwrap();
        match run(&p, &c, &params()) {
            Err(EngineError::ProjectsNothing { pred, arity }) => {
                assert_eq!(pred, "route");
                assert_eq!(arity, 2);
            }
            other => panic!("expected ProjectsNothing, got {other:?}"),
        }
    }

    #[test]
    fn rejects_degenerate_parameters() {
        let p = chains();
        let c = parse_config(CHAINS_CONFIG).unwrap();
        let zero = EngineParams {
            iter_budget: 0,
            ..params()
        };
        assert!(matches!(run(&p, &c, &zero), Err(EngineError::ZeroBudget)));
        let shrink = EngineParams {
            escalation: Ratio::new(1, 2),
            ..params()
        };
        assert!(matches!(
            run(&p, &c, &shrink),
            Err(EngineError::ShrinkingEscalation(_))
        ));
    }

    #[test]
    fn inf_fixings_never_prove_optimality() {
        let p = chains();
        let c = parse_config(
            "_lnps_project(on, 1).\n\
             _lnps_destroy(on, 1, 1, p(50)).\n\
             _lnps_prioritize(on, 1, inf, true).\n",
        )
        .unwrap();
        let ps = EngineParams {
            max_iterations: Some(30),
            ..params()
        };
        let out = run(&p, &c, &ps).unwrap();
        assert!(!out.proven_optimal);
        assert_eq!(out.iterations, 30);
        // frozen survivors keep every iteration inside a sub-neighborhood,
        // so even reaching the optimum proves nothing
        assert!(out.best.cost <= out.initial_cost);
        let improved = out.trace.iter().any(|r| r.accepted);
        let missed = out
            .trace
            .iter()
            .any(|r| r.status == SolveStatus::Unsatisfiable && !r.accepted);
        assert!(missed, "expected some neighborhoods to be provably empty");
        assert!(
            improved,
            "expected some neighborhood to improve the incumbent"
        );
    }

    #[test]
    fn trace_is_consistent_with_the_outcome() {
        let p = chains();
        let c = parse_config(CHAINS_CONFIG).unwrap();
        let ps = EngineParams {
            iter_budget: 2,
            escalation: Ratio::new(3, 2),
            ..params()
        };
        let out = run(&p, &c, &ps).unwrap();
        assert_eq!(out.iterations as usize, out.trace.len());
        assert!(!out.trace.is_empty());
        let mut expect_budget = 2u64;
        let mut current = out.initial_cost;
        let mut best = out.initial_cost;
        for (i, rec) in out.trace.iter().enumerate() {
            assert_eq!(rec.step, i as u64 + 1);
            assert_eq!(rec.budget, expect_budget);
            assert!(rec.conflicts <= rec.budget);
            match rec.temporal_cost {
                Some(t) => {
                    assert_eq!(rec.accepted, ps.accept.accepts(t, current));
                    best = best.min(t);
                    if rec.accepted {
                        current = t;
                    }
                }
                None => assert!(!rec.accepted),
            }
            assert_eq!(rec.current_cost, current);
            assert_eq!(rec.best_cost, best);
            expect_budget = ps.escalation.ceil_mul(expect_budget);
        }
        assert_eq!(out.trace.last().unwrap().best_cost, out.best.cost);
    }

    #[test]
    fn runs_are_reproducible_per_seed() {
        let p = chains();
        let c = parse_config(CHAINS_CONFIG).unwrap();
        let ps = EngineParams {
            iter_budget: 1,
            escalation: Ratio::one(),
            tighten_bound: false,
            max_iterations: Some(10),
            ..params()
        };
        let a = run(&p, &c, &ps).unwrap();
        let b = run(&p, &c, &ps).unwrap();
        assert_eq!(a.iterations, 10);
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.best.assignment, b.best.assignment);
    }

    #[test]
    fn max_iterations_caps_the_loop() {
        let p = chains();
        // destroy nothing and freeze survivors: no iteration can change a thing
        let c = parse_config(
            "_lnps_project(on, 1).\n\
             _lnps_destroy(on, 1, 1, p(0)).\n\
             _lnps_prioritize(on, 1, inf, true).\n",
        )
        .unwrap();
        let ps = EngineParams {
            max_iterations: Some(4),
            ..params()
        };
        let out = run(&p, &c, &ps).unwrap();
        assert_eq!(out.iterations, 4);
        assert!(!out.proven_optimal);
        assert_eq!(out.best.cost, out.initial_cost);
    }

    #[test]
    fn nonworsening_accepts_equal_cost_moves() {
        let p = chains();
        let c = parse_config(CHAINS_CONFIG).unwrap();
        // one-conflict budgets keep every reconstruction at the incumbent cost
        let ps = EngineParams {
            accept: AcceptPolicy::NonWorsening,
            iter_budget: 1,
            escalation: Ratio::one(),
            tighten_bound: false,
            max_iterations: Some(8),
            ..params()
        };
        let out = run(&p, &c, &ps).unwrap();
        let accepted_equal = out
            .trace
            .iter()
            .any(|r| r.accepted && r.temporal_cost == Some(r.current_cost));
        assert!(
            accepted_equal,
            "no equal-cost move was accepted:\n{:#?}",
            out.trace
        );
        assert!(
            AcceptPolicy::StrictImproving.accepts(1, 2)
                && !AcceptPolicy::StrictImproving.accepts(2, 2)
                && AcceptPolicy::NonWorsening.accepts(2, 2)
                && !AcceptPolicy::NonWorsening.accepts(3, 2)
        );
    }

    #[test]
    fn wall_clock_stops_the_run() {
        let p = chains();
        let c = parse_config(
            "_lnps_project(on, 1).\n\
             _lnps_destroy(on, 1, 1, p(0)).\n\
             _lnps_prioritize(on, 1, inf, true).\n",
        )
        .unwrap();
        let ps = EngineParams {
            time_limit: Some(Duration::from_millis(60)),
            ..params()
        };
        let out = run(&p, &c, &ps).unwrap();
        // frozen zero-destruction iterations repeat forever; only the clock stops them
        assert!(!out.proven_optimal);
        assert!(out.iterations >= 1);
        assert_eq!(out.best.cost, out.initial_cost);
    }
}
