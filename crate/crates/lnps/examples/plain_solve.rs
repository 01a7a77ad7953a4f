//! Parse an instance from text and solve it to proven optimality.
//!
//! ```text
//! cargo run --example plain_solve
//! ```

use lnps::{parse_instance, Budget, SolveStatus, SolverSession};

fn main() {
    // Three jobs, two machines. run(j,m) puts job j on machine m; every job
    // runs somewhere, machine 1 is faster but job 3 cannot use it.
    let text = "\
p lnps 6 4
a 1 run(1,1)
a 2 run(1,2)
a 3 run(2,1)
a 4 run(2,2)
a 5 run(3,1)
a 6 run(3,2)
c 1 2 0
c 3 4 0
c 5 6 0
c -5 0
m 2 1
m 5 2
m 2 3
m 5 4
m 9 5
m 3 6
";
    let problem = parse_instance(text).expect("instance parses");
    println!(
        "{} variables, {} clauses, {} objective terms",
        problem.num_vars,
        problem.clauses.len(),
        problem.objective.len()
    );

    let mut session = SolverSession::new(&problem);
    let result = session
        .solve(&[], &[], Budget::unlimited(), None)
        .expect("well-formed call");

    assert_eq!(result.status, SolveStatus::Optimum);
    let best = result.model.expect("optimum comes with a model");
    println!("status     {}", result.status);
    println!("cost       {}", best.cost);
    println!("conflicts  {}", result.conflicts_used);
    for atom in best.true_projected_atoms(&problem, "run", 2) {
        println!("schedule   {atom}");
    }

    // On a harder instance a conflict budget degrades gracefully: the best
    // model found so far comes back as SATISFIABLE instead of OPTIMUM.
    let tour = parse_instance(include_str!("data/tsp5.lnps")).expect("instance parses");
    let mut session = SolverSession::new(&tour);
    let capped = session.solve(&[], &[], Budget::conflicts(1), None).unwrap();
    let found = capped.model.expect("a model arrived before the cutoff");
    println!(
        "five-city tour, one-conflict budget: {} at cost {}",
        capped.status, found.cost
    );
    let mut session = SolverSession::new(&tour);
    let full = session.solve(&[], &[], Budget::unlimited(), None).unwrap();
    let proven = full.model.expect("feasible").cost;
    println!(
        "five-city tour, unlimited:           {} at cost {proven}",
        full.status
    );
    assert!(found.cost >= proven);
}
