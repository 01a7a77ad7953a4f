//! Thin command-line front end over the library. The real surface is the
//! examples directory; this binary only wires files and flags to library
//! calls and prints solver-style `c`/`s`/`o`/`v` lines.

use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lnps::bench::{self, GenParams, RunSpec};
use lnps::engine::{self, AcceptPolicy, EngineError, EngineParams, Ratio};
use lnps::{parse_config, parse_instance, Budget, Problem, Solution, SolveStatus, SolverSession};

const EXIT_CODES: &str = "exit status: 0 model found, 10 unsatisfiable, 20 budget exhausted";

#[derive(Parser)]
#[command(
    name = "lnps",
    version,
    about = "Anytime minimization by destroy-and-reprioritize search"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance with the plain branch-and-bound core.
    #[command(after_help = EXIT_CODES)]
    Solve {
        instance: PathBuf,
        /// Conflict budget; unlimited when absent.
        #[arg(long)]
        conflicts: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Improve an instance through destroy-and-reprioritize rounds.
    #[command(after_help = EXIT_CODES)]
    Lnps {
        instance: PathBuf,
        /// Neighborhood configuration file.
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        /// Print one JSON line per iteration before the summary.
        #[arg(long)]
        trace: bool,
    },
    /// Check a solution file (solver output works as-is) against an instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Emit a random instance in the text format.
    Gen {
        #[arg(long)]
        vars: usize,
        /// Clauses per variable.
        #[arg(long, default_value_t = 2.5)]
        clause_density: f64,
        /// Probability that a variable carries an objective term.
        #[arg(long, default_value_t = 0.7)]
        objective_density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate instances and compare guided runs against plain solves.
    Bench {
        /// Number of instances.
        #[arg(long, default_value_t = 20)]
        runs: u32,
        #[arg(long, default_value_t = 12)]
        vars: usize,
        #[arg(long, default_value_t = 2.5)]
        clause_density: f64,
        #[arg(long, default_value_t = 0.7)]
        objective_density: f64,
        /// Instance `i` is generated from `base-seed + i`.
        #[arg(long, default_value_t = 0)]
        base_seed: u64,
        /// Guided runs per instance (engine seeds `seed`, `seed + 1`, ...).
        #[arg(long, default_value_t = 3)]
        seeds: u32,
        /// Destroy percentage of the built-in configuration.
        #[arg(long, default_value_t = 40)]
        percent: u8,
        /// Conflict budget of the plain reference solve; defaults to the
        /// largest total a guided run spent on the same instance.
        #[arg(long)]
        plain_conflicts: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(Args)]
struct EngineArgs {
    /// Conflict budget of the initial solve.
    #[arg(long, default_value_t = 10_000)]
    init_conflicts: u64,
    /// Conflict budget of the first iteration.
    #[arg(long, default_value_t = 4_000)]
    iter_conflicts: u64,
    /// Per-iteration budget growth, e.g. "1.05" or "21/20".
    #[arg(long, default_value = "21/20")]
    escalation: String,
    /// Move acceptance: "strict" or "nonworsening".
    #[arg(long, default_value_t = AcceptPolicy::StrictImproving)]
    accept: AcceptPolicy,
    /// Bound each iteration below the current cost.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    tighten_bound: bool,
    #[arg(long)]
    max_iterations: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl EngineArgs {
    fn to_params(&self) -> Result<EngineParams, Box<dyn Error>> {
        let escalation = Ratio::parse(&self.escalation)
            .ok_or_else(|| format!("invalid escalation ratio {:?}", self.escalation))?;
        Ok(EngineParams {
            init_budget: self.init_conflicts,
            iter_budget: self.iter_conflicts,
            escalation,
            accept: self.accept,
            tighten_bound: self.tighten_bound,
            max_iterations: self.max_iterations,
            time_limit: self.time_limit.map(seconds).transpose()?,
            seed: self.seed,
        })
    }
}

fn seconds(s: f64) -> Result<Duration, Box<dyn Error>> {
    Duration::try_from_secs_f64(s).map_err(|e| format!("--time-limit: {e}").into())
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Jsonl,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn Error>> {
    match cli.cmd {
        Cmd::Solve {
            instance,
            conflicts,
            time_limit,
        } => {
            let problem = load_instance(&instance)?;
            let mut budget = match conflicts {
                Some(n) => Budget::conflicts(n),
                None => Budget::unlimited(),
            };
            if let Some(s) = time_limit {
                budget = budget.with_wall_clock(seconds(s)?);
            }
            let mut session = SolverSession::new(&problem);
            let result = session.solve(&[], &[], budget, None)?;
            println!("c conflicts {}", result.conflicts_used);
            print_outcome(&problem, result.status, result.model.as_ref());
            Ok(status_code(result.status))
        }
        Cmd::Lnps {
            instance,
            config,
            engine,
            trace,
        } => {
            let problem = load_instance(&instance)?;
            let text =
                fs::read_to_string(&config).map_err(|e| format!("{}: {e}", config.display()))?;
            let config = parse_config(&text)?;
            let params = engine.to_params()?;
            match engine::run(&problem, &config, &params) {
                Ok(out) => {
                    if trace {
                        for rec in &out.trace {
                            println!("{}", serde_json::to_string(rec)?);
                        }
                    }
                    println!("c initial {} {}", out.initial_status, out.initial_cost);
                    println!("c iterations {}", out.iterations);
                    let total =
                        out.initial_conflicts + out.trace.iter().map(|r| r.conflicts).sum::<u64>();
                    println!("c conflicts {total}");
                    let status = if out.proven_optimal {
                        SolveStatus::Optimum
                    } else {
                        SolveStatus::Satisfiable
                    };
                    print_outcome(&problem, status, Some(&out.best));
                    Ok(status_code(status))
                }
                Err(EngineError::Infeasible) => {
                    println!("s {}", SolveStatus::Unsatisfiable);
                    Ok(10)
                }
                Err(EngineError::NoInitialSolution { budget }) => {
                    println!("c no solution within {budget} conflicts");
                    println!("s {}", SolveStatus::BudgetExhausted);
                    Ok(20)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Verify { instance, solution } => {
            let problem = load_instance(&instance)?;
            let text = fs::read_to_string(&solution)
                .map_err(|e| format!("{}: {e}", solution.display()))?;
            match check_solution(&problem, &text) {
                Ok(s) => {
                    println!("s VALID");
                    println!("o {}", s.cost);
                    Ok(0)
                }
                Err(why) => {
                    println!("s INVALID");
                    println!("c {why}");
                    Ok(1)
                }
            }
        }
        Cmd::Gen {
            vars,
            clause_density,
            objective_density,
            seed,
        } => {
            let problem = bench::generate_instance(&GenParams {
                num_vars: vars,
                clause_density,
                objective_density,
                seed,
            });
            print!("{}", problem.to_text());
            Ok(0)
        }
        Cmd::Bench {
            runs,
            vars,
            clause_density,
            objective_density,
            base_seed,
            seeds,
            percent,
            plain_conflicts,
            out,
            engine,
        } => {
            let spec = RunSpec {
                instances: runs,
                vars,
                clause_density,
                objective_density,
                base_seed,
                seeds_per_instance: seeds,
                engine: engine.to_params()?,
                config_percent: percent,
                plain_budget: plain_conflicts,
            };
            let report = bench::run_suite(&spec)?;
            match out {
                OutFormat::Csv => print!("{}", report.to_csv()),
                OutFormat::Jsonl => print!("{}", report.to_jsonl()),
            }
            Ok(0)
        }
    }
}

fn load_instance(path: &PathBuf) -> Result<Problem, Box<dyn Error>> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_instance(&text)?)
}

fn print_outcome(problem: &Problem, status: SolveStatus, model: Option<&Solution>) {
    println!("s {status}");
    if let Some(s) = model {
        println!("o {}", s.cost);
        let lits: Vec<String> = s
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let n = i as i64 + 1;
                (if v { n } else { -n }).to_string()
            })
            .collect();
        println!("v {} 0", lits.join(" "));
        for atom in problem.atoms.iter().filter(|a| s.value(a.var)) {
            println!("c true {atom}");
        }
    }
}

fn status_code(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::Optimum | SolveStatus::Satisfiable => 0,
        SolveStatus::Unsatisfiable => 10,
        SolveStatus::BudgetExhausted => 20,
    }
}

/// Accepts the solver's own output: `c`/`s`/`o` lines are skipped, `v`
/// tokens and the trailing `0` are ignored, the rest are signed literals.
fn check_solution(problem: &Problem, text: &str) -> Result<Solution, String> {
    let mut seen: Vec<Option<bool>> = vec![None; problem.num_vars];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with(['c', 's', 'o', '#', '%']) {
            continue;
        }
        for tok in line.split_whitespace() {
            if tok == "v" {
                continue;
            }
            let lit: i64 = tok
                .parse()
                .map_err(|_| format!("unexpected token {tok:?}"))?;
            if lit == 0 {
                continue;
            }
            let idx = lit.unsigned_abs() as usize - 1;
            if idx >= problem.num_vars {
                return Err(format!("literal {lit} is out of range"));
            }
            let sign = lit > 0;
            if seen[idx] == Some(!sign) {
                return Err(format!("variable {} assigned both ways", idx + 1));
            }
            seen[idx] = Some(sign);
        }
    }
    let mut assignment = Vec::with_capacity(problem.num_vars);
    for (i, v) in seen.iter().enumerate() {
        match v {
            Some(b) => assignment.push(*b),
            None => return Err(format!("variable {} is unassigned", i + 1)),
        }
    }
    Solution::new(problem, assignment).map_err(|e| e.to_string())
}
