//! Tour of the neighborhood configuration language.
//!
//! A configuration is a list of facts. `_lnps_project` picks the atoms a
//! solution is read through, `_lnps_destroy` says what fraction of them to
//! tear out per round and along which argument positions, `_lnps_prioritize`
//! says how the surviving atoms bias the next search.
//!
//! ```text
//! cargo run --example config_language
//! ```

use lnps::{parse_config, Weight};

fn main() {
    let text = "\
% tour edges are the public face of a solution
_lnps_project(cycle, 2).

% each round, drop 40% of the true cycle atoms outright ...
_lnps_destroy(cycle, 2, 3, p(40)).
% ... and everything touching 20% of the source cities (argument 1)
_lnps_destroy(cycle, 2, 1, p(20)).

% survivors are preferred true at level 1, never frozen
_lnps_prioritize(cycle, 2, 1, true).
";
    let config = parse_config(text).expect("config parses");

    for p in &config.projects {
        println!("project    {}/{}", p.predicate, p.arity);
    }
    for d in &config.destroys {
        let kind = if d.is_full_mask() {
            "atoms"
        } else {
            "constants"
        };
        println!(
            "destroy    {}/{} mask {:#b} ({kind}) at {}%",
            d.predicate, d.arity, d.arg_mask, d.percent
        );
    }
    for p in &config.prioritizes {
        println!(
            "prioritize {}/{} weight {:?} sign {}",
            p.predicate, p.arity, p.weight, p.sign
        );
    }

    // Finite weights keep the search free to override survivors, which is
    // what lets an optimality proof stand. One `inf` anywhere forfeits that.
    println!("variability: {}", config.variability());
    assert!(config.variability());

    let frozen = parse_config("_lnps_project(cycle, 2).\n_lnps_prioritize(cycle, 2, inf, true).\n")
        .expect("config parses");
    assert_eq!(frozen.prioritizes[0].weight, Weight::Inf);
    println!("with inf:    {}", frozen.variability());
    assert!(!frozen.variability());

    // Configurations print back in canonical form.
    print!("{}", config.to_text());

    // Validation is strict: masks must address real argument positions, and
    // destroyed or prioritized predicates must be projected first.
    let bad = parse_config("_lnps_project(cycle, 2).\n_lnps_destroy(cycle, 2, 4, p(10)).\n");
    println!("mask 0b100 on a binary predicate: {}", bad.unwrap_err());
    let bad = parse_config("_lnps_destroy(cycle, 2, 1, p(10)).\n");
    println!("destroy without project: {}", bad.unwrap_err());
}
