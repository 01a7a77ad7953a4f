//! Neighborhood destruction. Each round partitions the true projected atoms
//! of the current solution into a destroyed part, which the next solve is
//! free about, and an undestroyed part handed to the prioritizer.

use std::collections::BTreeSet;

use rand::Rng;

use crate::config::{DestroySpec, LnpsConfig};
use crate::model::{Problem, Solution, SymbolicAtom, Term, Var};

/// Partition of the true projected atoms produced by one destroy round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestroyOutcome {
    pub destroyed: BTreeSet<Var>,
    pub undestroyed: BTreeSet<Var>,
}

/// `percent` of `pool`, rounded half up.
pub fn destroy_count(percent: u8, pool: usize) -> usize {
    debug_assert!(percent <= 100);
    (percent as usize * pool + 50) / 100
}

/// Destroy atoms of the view one by one, uniformly without replacement.
pub fn random_atoms(view: &[&SymbolicAtom], percent: u8, rng: &mut impl Rng) -> BTreeSet<Var> {
    let k = destroy_count(percent, view.len());
    rand::seq::index::sample(rng, view.len(), k)
        .iter()
        .map(|i| view[i].var)
        .collect()
}

/// Destroy whole groups of atoms: collect the terms occurring at masked
/// argument positions, sample `percent` of them, and destroy every atom
/// carrying a sampled term at a masked position.
pub fn random_constants(
    view: &[&SymbolicAtom],
    arg_mask: u64,
    percent: u8,
    rng: &mut impl Rng,
) -> BTreeSet<Var> {
    let masked = |i: usize| arg_mask >> i & 1 == 1;
    let pool: Vec<&Term> = view
        .iter()
        .flat_map(|a| a.args.iter().enumerate())
        .filter(|&(i, _)| masked(i))
        .map(|(_, t)| t)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k = destroy_count(percent, pool.len());
    let chosen: BTreeSet<&Term> = rand::seq::index::sample(rng, pool.len(), k)
        .iter()
        .map(|i| pool[i])
        .collect();
    view.iter()
        .filter(|a| {
            a.args
                .iter()
                .enumerate()
                .any(|(i, t)| masked(i) && chosen.contains(t))
        })
        .map(|a| a.var)
        .collect()
}

/// One destroy spec applied to the current solution. A full mask picks
/// individual atoms, a partial mask picks term groups.
pub fn apply_spec(
    problem: &Problem,
    solution: &Solution,
    spec: &DestroySpec,
    rng: &mut impl Rng,
) -> BTreeSet<Var> {
    let view = solution.true_projected_atoms(problem, &spec.predicate, spec.arity);
    if spec.is_full_mask() {
        random_atoms(&view, spec.percent, rng)
    } else {
        random_constants(&view, spec.arg_mask, spec.percent, rng)
    }
}

/// One full destroy round: the union over all destroy specs, and the true
/// projected atoms that survived.
pub fn apply(
    problem: &Problem,
    solution: &Solution,
    config: &LnpsConfig,
    rng: &mut impl Rng,
) -> DestroyOutcome {
    let mut destroyed = BTreeSet::new();
    for spec in &config.destroys {
        destroyed.extend(apply_spec(problem, solution, spec, rng));
    }
    let undestroyed = config
        .projects
        .iter()
        .flat_map(|p| solution.true_projected_atoms(problem, &p.predicate, p.arity))
        .map(|a| a.var)
        .filter(|v| !destroyed.contains(v))
        .collect();
    DestroyOutcome {
        destroyed,
        undestroyed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::model::parse_instance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Six selected edges over four nodes, all true.
    fn edges() -> (Problem, Solution) {
        let text = "\
p lnps 6 0
a 1 pick(1,2)
a 2 pick(1,3)
a 3 pick(1,4)
a 4 pick(2,3)
a 5 pick(2,4)
a 6 pick(3,4)
";
        let p = parse_instance(text).unwrap();
        let s = Solution::new(&p, vec![true; 6]).unwrap();
        (p, s)
    }

    #[test]
    fn count_rounds_half_up() {
        assert_eq!(destroy_count(30, 10), 3);
        assert_eq!(destroy_count(30, 5), 2); // 1.5 up
        assert_eq!(destroy_count(50, 5), 3); // 2.5 up
        assert_eq!(destroy_count(33, 3), 1); // 0.99 down
        assert_eq!(destroy_count(1, 49), 0); // 0.49 down
        assert_eq!(destroy_count(1, 50), 1); // 0.50 up
        assert_eq!(destroy_count(0, 1000), 0);
        assert_eq!(destroy_count(100, 1000), 1000);
    }

    #[test]
    fn random_atoms_hits_the_exact_count() {
        let (p, s) = edges();
        let view = s.true_projected_atoms(&p, "pick", 2);
        for (percent, want) in [(0, 0), (25, 2), (50, 3), (75, 5), (100, 6)] {
            let d = random_atoms(&view, percent, &mut rng(7));
            assert_eq!(d.len(), want, "percent {percent}");
            assert!(d.iter().all(|v| v.index() < 6));
        }
    }

    #[test]
    fn random_atoms_is_seed_deterministic() {
        let (p, s) = edges();
        let view = s.true_projected_atoms(&p, "pick", 2);
        let a = random_atoms(&view, 50, &mut rng(11));
        let b = random_atoms(&view, 50, &mut rng(11));
        assert_eq!(a, b);
        let differs = (0..64).any(|seed| random_atoms(&view, 50, &mut rng(seed)) != a);
        assert!(differs, "every seed produced the same selection");
    }

    #[test]
    fn random_constants_destroys_whole_groups() {
        let (p, s) = edges();
        let view = s.true_projected_atoms(&p, "pick", 2);
        // mask 1 selects the first argument: term pool {1, 2, 3}
        for seed in 0..32 {
            let d = random_constants(&view, 1, 34, &mut rng(seed));
            // 34% of 3 terms is one term; its group is every edge leaving it
            let sizes = [3usize, 2, 1]; // edges with first arg 1, 2, 3
            assert!(
                sizes.contains(&d.len()),
                "seed {seed} destroyed {} atoms",
                d.len()
            );
            if d.len() == 3 {
                // the group of first-argument 1 is exactly vars 1..=3
                let want: BTreeSet<Var> = (1..=3).map(Var::from_number).collect();
                assert_eq!(d, want);
            }
        }
    }

    #[test]
    fn random_constants_with_both_positions_masked() {
        let (p, s) = edges();
        let view = s.true_projected_atoms(&p, "pick", 2);
        // mask 2 selects the second argument: pool {2, 3, 4}
        let mut seen_sizes = BTreeSet::new();
        for seed in 0..32 {
            let d = random_constants(&view, 2, 34, &mut rng(seed));
            seen_sizes.insert(d.len());
        }
        // groups by second argument: {1}, {2,4}, {3,5,6}
        assert!(seen_sizes.iter().all(|&n| [1, 2, 3].contains(&n)));
        assert!(seen_sizes.len() > 1, "sampling never varied across seeds");
    }

    #[test]
    fn full_percent_destroys_every_group() {
        let (p, s) = edges();
        let view = s.true_projected_atoms(&p, "pick", 2);
        let d = random_constants(&view, 1, 100, &mut rng(0));
        assert_eq!(d.len(), 6);
        assert_eq!(random_constants(&view, 1, 0, &mut rng(0)).len(), 0);
    }

    #[test]
    fn apply_spec_dispatches_on_mask() {
        let (p, s) = edges();
        // full mask on arity 2 is 3: atom-wise destruction
        let atomwise = DestroySpec {
            predicate: "pick".into(),
            arity: 2,
            arg_mask: 3,
            percent: 50,
        };
        assert_eq!(apply_spec(&p, &s, &atomwise, &mut rng(3)).len(), 3);
        // partial mask: group destruction, sizes depend on the drawn term
        let grouped = DestroySpec {
            predicate: "pick".into(),
            arity: 2,
            arg_mask: 1,
            percent: 34,
        };
        let d = apply_spec(&p, &s, &grouped, &mut rng(3));
        assert!(!d.is_empty() && d.len() <= 3);
    }

    #[test]
    fn apply_partitions_the_projection() {
        let (p, s) = edges();
        let config =
            parse_config("_lnps_project(pick, 2).\n_lnps_destroy(pick, 2, 3, p(50)).\n").unwrap();
        let out = apply(&p, &s, &config, &mut rng(5));
        assert_eq!(out.destroyed.len(), 3);
        assert_eq!(out.undestroyed.len(), 3);
        assert!(out.destroyed.is_disjoint(&out.undestroyed));
        let all: BTreeSet<Var> = out.destroyed.union(&out.undestroyed).copied().collect();
        let want: BTreeSet<Var> = (1..=6).map(Var::from_number).collect();
        assert_eq!(all, want);
    }

    #[test]
    fn apply_unions_multiple_destroy_specs() {
        let (p, s) = edges();
        let config = parse_config(
            "_lnps_project(pick, 2).\n\
             _lnps_destroy(pick, 2, 3, p(25)).\n\
             _lnps_destroy(pick, 2, 1, p(34)).\n",
        )
        .unwrap();
        let out = apply(&p, &s, &config, &mut rng(9));
        let solo_a = {
            let spec = &config.destroys[0];
            apply_spec(&p, &s, spec, &mut rng(9))
        };
        // the union can only grow past the first spec's pick
        assert!(out.destroyed.len() >= solo_a.len());
        assert!(out.destroyed.is_superset(&solo_a));
    }

    #[test]
    fn false_atoms_are_not_in_the_view() {
        let (p, _) = edges();
        let s = Solution::new(&p, vec![true, false, true, false, true, false]).unwrap();
        let config =
            parse_config("_lnps_project(pick, 2).\n_lnps_destroy(pick, 2, 3, p(100)).\n").unwrap();
        let out = apply(&p, &s, &config, &mut rng(1));
        let want: BTreeSet<Var> = [1, 3, 5].map(Var::from_number).into_iter().collect();
        assert_eq!(out.destroyed, want);
        assert!(out.undestroyed.is_empty());
    }

    #[test]
    fn destroyed_counts_track_the_pool_not_the_instance() {
        // a view of 7 atoms among 9 variables
        let text = "\
p lnps 9 0
a 1 t(1)
a 2 t(2)
a 3 t(3)
a 4 t(4)
a 5 t(5)
a 6 t(6)
a 7 t(7)
a 8 other(1,2)
a 9 other(3,4)
";
        let p = parse_instance(text).unwrap();
        let s = Solution::new(&p, vec![true; 9]).unwrap();
        let view = s.true_projected_atoms(&p, "t", 1);
        for n in 0..=100u8 {
            let d = random_atoms(&view, n, &mut rng(u64::from(n)));
            assert_eq!(d.len(), (n as usize * 7 + 50) / 100, "percent {n}");
        }
    }
}
