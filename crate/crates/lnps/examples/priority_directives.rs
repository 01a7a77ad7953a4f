//! Steer the solver's branching without constraining it.
//!
//! Directives name a variable, a sign, and a level. Directed variables are
//! decided before free ones, higher levels first, with the sign as the first
//! polarity to try. The solver may still conclude the opposite value: a
//! directive is a preference, an assumption would be a constraint.
//!
//! ```text
//! cargo run --example priority_directives
//! ```

use lnps::{parse_instance, Budget, Directive, Lit, SolverSession, Var};

fn main() {
    // pick one of four options, all equally cheap except the last
    let text = "\
p lnps 4 1
a 1 opt(1)
a 2 opt(2)
a 3 opt(3)
a 4 opt(4)
c 1 2 3 4 0
m 1 1
m 1 2
m 1 3
m 2 4
";
    let problem = parse_instance(text).expect("instance parses");

    // Left alone, the solver starts from its built-in polarity (false) and
    // its own variable order.
    let mut session = SolverSession::new(&problem);
    let free = session.solve(&[], &[], Budget::unlimited(), None).unwrap();
    println!(
        "undirected first decision: {:?}",
        session.first_decision().unwrap().map(Lit::to_signed)
    );
    println!("undirected optimum: {}", free.model.unwrap().cost);

    // Directing opt(3) true at a high level makes it the first decision.
    let directives = [
        Directive {
            var: Var::from_number(3),
            level: 9,
            sign: true,
        },
        Directive {
            var: Var::from_number(1),
            level: 2,
            sign: false,
        },
    ];
    let mut session = SolverSession::new(&problem);
    let guided = session
        .solve(&[], &directives, Budget::unlimited(), None)
        .unwrap();
    let first = session
        .first_decision()
        .unwrap()
        .expect("a decision was made");
    println!("directed first decision:  {}", first.to_signed());
    assert_eq!(first, Lit::new(Var::from_number(3), true));

    // The guided run lands on a different optimum of the same cost.
    let best = guided.model.unwrap();
    assert_eq!(best.cost, 1);
    assert!(best.value(Var::from_number(3)));
    for atom in best.true_projected_atoms(&problem, "opt", 1) {
        println!("directed choice: {atom}");
    }

    // Directives never change what is optimal, only which optimum is found
    // first and how the search gets there.
    let away = [Directive {
        var: Var::from_number(4),
        level: 9,
        sign: true,
    }];
    let mut session = SolverSession::new(&problem);
    let pushed = session
        .solve(&[], &away, Budget::unlimited(), None)
        .unwrap();
    println!(
        "directed toward the expensive option, still lands on cost {}",
        pushed.model.unwrap().cost
    );
}
