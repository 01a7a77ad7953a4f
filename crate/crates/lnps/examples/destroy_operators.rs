//! The two destroy operators, side by side on a five-city tour.
//!
//! A full argument mask samples atoms directly: scattered, independent
//! removals. A partial mask samples constants at the masked positions and
//! removes every atom touching them: coherent, structured removals.
//!
//! ```text
//! cargo run --example destroy_operators
//! ```

use lnps::destroy::{self, DestroyOutcome};
use lnps::{parse_config, parse_instance, Budget, SolverSession};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let text = include_str!("data/tsp5.lnps");
    let problem = parse_instance(text).expect("instance parses");

    let mut session = SolverSession::new(&problem);
    let result = session.solve(&[], &[], Budget::unlimited(), None).unwrap();
    let tour = result.model.expect("the instance is feasible");
    println!("tour of cost {}:", tour.cost);
    for atom in tour.true_projected_atoms(&problem, "cycle", 2) {
        println!("  {atom}");
    }

    // Full mask 0b11: both argument positions, so atoms are sampled directly.
    let atomwise =
        parse_config("_lnps_project(cycle, 2).\n_lnps_destroy(cycle, 2, 3, p(40)).\n").unwrap();
    // Partial mask 0b01: sample source cities, remove all their edges.
    let citywise =
        parse_config("_lnps_project(cycle, 2).\n_lnps_destroy(cycle, 2, 1, p(20)).\n").unwrap();

    for seed in 0..3 {
        let a = destroy::apply(
            &problem,
            &tour,
            &atomwise,
            &mut ChaCha8Rng::seed_from_u64(seed),
        );
        let c = destroy::apply(
            &problem,
            &tour,
            &citywise,
            &mut ChaCha8Rng::seed_from_u64(seed),
        );
        println!("seed {seed}");
        println!("  atom-wise  removed {}", render(&problem, &a));
        println!("  city-wise  removed {}", render(&problem, &c));
    }

    // Percentages land on deterministic counts: 40% of 5 true atoms is 2,
    // half-up rounding. The same seed always removes the same set.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let once = destroy::apply(&problem, &tour, &atomwise, &mut rng);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let twice = destroy::apply(&problem, &tour, &atomwise, &mut rng);
    assert_eq!(once.destroyed, twice.destroyed);
    assert_eq!(once.destroyed.len(), 2);
}

fn render(problem: &lnps::Problem, out: &DestroyOutcome) -> String {
    let names: Vec<String> = out
        .destroyed
        .iter()
        .map(|&v| {
            problem
                .atom_of_var(v)
                .expect("projected atoms are named")
                .to_string()
        })
        .collect();
    format!(
        "{} of {}: {}",
        out.destroyed.len(),
        out.destroyed.len() + out.undestroyed.len(),
        names.join(" ")
    )
}
