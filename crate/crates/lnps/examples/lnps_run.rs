//! A full destroy-and-reprioritize run, iteration by iteration.
//!
//! Every round tears part of the incumbent tour out, re-ranks the survivors
//! as branching preferences, and reconstructs under a bound one below the
//! incumbent cost. Because survivors are preferences rather than fixings,
//! a round that proves its bound unreachable has proven global optimality.
//!
//! ```text
//! cargo run --example lnps_run
//! ```

use lnps::engine::{self, EngineParams, Ratio};
use lnps::{parse_config, parse_instance};

fn main() {
    let problem = parse_instance(include_str!("data/tsp5.lnps")).expect("instance parses");
    let config = parse_config(include_str!("data/tsp5_lnps.cfg")).expect("config parses");

    let params = EngineParams {
        // a deliberately weak first solve, so the loop has work to do
        init_budget: 1,
        iter_budget: 8,
        escalation: Ratio::new(3, 2),
        max_iterations: Some(40),
        seed: 7,
        ..EngineParams::default()
    };
    let out = engine::run(&problem, &config, &params).expect("run completes");

    println!(
        "initial: {} at cost {} after {} conflicts",
        out.initial_status, out.initial_cost, out.initial_conflicts
    );
    println!("step | budget | torn | status          | found | kept | best");
    for r in &out.trace {
        println!(
            "{:>4} | {:>6} | {:>4} | {:<15} | {:>5} | {:>4} | {:>4}",
            r.step,
            r.budget,
            r.destroyed,
            r.status.to_string(),
            r.temporal_cost.map_or("-".into(), |c| c.to_string()),
            r.current_cost,
            r.best_cost,
        );
    }
    println!(
        "finished after {} iterations: cost {}, optimal proven: {}",
        out.iterations, out.best.cost, out.proven_optimal
    );
    for atom in out.best.true_projected_atoms(&problem, "cycle", 2) {
        println!("  {atom}");
    }
    assert!(out.proven_optimal, "the run is sized to finish the proof");
    assert_eq!(out.best.cost, 12);
    assert!(
        out.initial_cost > out.best.cost,
        "the weak first solve left room"
    );
}
