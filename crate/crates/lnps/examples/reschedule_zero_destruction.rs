//! The degenerate neighborhood: destroy nothing, reconsider everything.
//!
//! With a destroy share of p(0) the whole incumbent survives every round.
//! Under hard fixings that pins the projection forever: each round re-proves
//! the same tour. Under soft priorities the incumbent is merely the starting
//! direction, and the bound below its cost forces the search to walk away
//! from it, so the run still improves and still terminates with a proof.
//!
//! ```text
//! cargo run --example reschedule_zero_destruction
//! ```

use lnps::engine::{self, EngineParams, Ratio};
use lnps::{parse_config, parse_instance};

fn main() {
    let problem = parse_instance(include_str!("data/tsp5.lnps")).expect("instance parses");
    let pinned = parse_config(
        "_lnps_project(cycle, 2).\n_lnps_destroy(cycle, 2, 3, p(0)).\n_lnps_prioritize(cycle, 2, inf, true).\n",
    )
    .unwrap();
    let guided = parse_config(
        "_lnps_project(cycle, 2).\n_lnps_destroy(cycle, 2, 3, p(0)).\n_lnps_prioritize(cycle, 2, 1, true).\n",
    )
    .unwrap();

    let params = EngineParams {
        // stop the first solve at its first tour, so the rounds matter
        init_budget: 1,
        iter_budget: 10,
        escalation: Ratio::new(3, 2),
        max_iterations: Some(25),
        seed: 3,
        ..EngineParams::default()
    };

    let a = engine::run(&problem, &pinned, &params).expect("pinned run completes");
    println!(
        "inf + p(0): every round re-proves the incumbent, cost stays {} (initial {}), proven: {}",
        a.best.cost, a.initial_cost, a.proven_optimal
    );
    assert_eq!(a.best.cost, a.initial_cost);
    assert!(!a.proven_optimal);
    assert!(a.trace.iter().all(|r| r.destroyed == 0));

    let b = engine::run(&problem, &guided, &params).expect("guided run completes");
    println!(
        "1   + p(0): cost {} -> {} in {} iterations, proven: {}",
        b.initial_cost, b.best.cost, b.iterations, b.proven_optimal
    );
    assert!(b.best.cost <= b.initial_cost);
    assert!(b.proven_optimal);
    assert_eq!(b.best.cost, 12);
}
