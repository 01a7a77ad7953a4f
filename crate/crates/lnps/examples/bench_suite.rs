//! Batch comparison: guided reconstruction against a plain solve.
//!
//! Each instance gets several guided runs (one per seed) and one plain
//! reference solve at the same conflict budget. The report carries no
//! timing, so rerunning the same spec reproduces it byte for byte.
//!
//! ```text
//! cargo run --example bench_suite
//! ```

use lnps::bench::{run_suite, RunSpec};
use lnps::engine::{EngineParams, Ratio};

fn main() {
    let spec = RunSpec {
        instances: 6,
        vars: 16,
        clause_density: 2.5,
        objective_density: 0.7,
        base_seed: 300,
        seeds_per_instance: 3,
        engine: EngineParams {
            init_budget: 5,
            iter_budget: 8,
            escalation: Ratio::new(11, 10),
            max_iterations: Some(10),
            seed: 0,
            ..EngineParams::default()
        },
        config_percent: 40,
        plain_budget: None,
    };
    let report = run_suite(&spec).expect("suite runs");

    print!("{}", report.to_csv());

    let rows = report.rows.len();
    let guided_hits = report
        .rows
        .iter()
        .filter(|r| Some(r.lnps_cost) == r.optimum)
        .count();
    let plain_hits = report
        .rows
        .iter()
        .filter(|r| r.plain_cost == r.optimum)
        .count();
    println!("guided runs at the true optimum: {guided_hits}/{rows}");
    println!("plain solves at the true optimum within the same budget: {plain_hits}/{rows}");

    let rerun = run_suite(&spec).expect("suite runs");
    assert_eq!(report.to_csv(), rerun.to_csv());
    assert_eq!(report.to_jsonl(), rerun.to_jsonl());
    println!("rerun reproduced the report byte for byte");
}
