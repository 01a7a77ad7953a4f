//! Reconstruction steering. The undestroyed part of a solution is resolved
//! against the prioritize specs into per-variable branch directives (finite
//! weights) and hard fixings (`inf`), then installed per step so that each
//! solve call sees exactly one step's worth of guidance.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::config::{LnpsConfig, Weight};
use crate::model::{Lit, Problem, Var};
use crate::solver::Directive;

/// Resolved priority of one undestroyed atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicAtom {
    pub var: Var,
    pub weight: Weight,
    pub sign: bool,
}

/// Directives and fixings compiled for one step of the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectiveSet {
    pub step: u64,
    /// Finite-weight guidance: branch on these first, preferred sign first.
    pub directives: Vec<Directive>,
    /// `inf` guidance: assumed outright, the solve cannot flip them.
    pub fixings: Vec<Lit>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeuristicError {
    #[error("variable {var} has no atom binding")]
    UnknownAtomVar { var: u32 },
    #[error("variable {var} is fixed to both signs by `inf` priorities")]
    ContradictoryFixing { var: u32 },
    #[error("step {live} is still live, retire it before installing step {step}")]
    StepAlreadyLive { live: u64, step: u64 },
    #[error("step {step} is not live{}", live.map(|l| format!(", step {l} is")).unwrap_or_default())]
    StepNotLive { step: u64, live: Option<u64> },
}

/// Resolve each undestroyed atom against the prioritize specs. Per variable,
/// an `inf` wins over any finite weight, among finite weights the highest
/// wins, and later specs win ties. Atoms matched by no spec are dropped:
/// they stay ordinary unguided variables.
pub fn prioritize(
    problem: &Problem,
    undestroyed: &BTreeSet<Var>,
    config: &LnpsConfig,
) -> Result<Vec<HeuristicAtom>, HeuristicError> {
    let mut out = Vec::new();
    for &var in undestroyed {
        let atom = problem
            .atom_of_var(var)
            .ok_or(HeuristicError::UnknownAtomVar { var: var.number() })?;
        let mut fixed: Option<bool> = None;
        let mut finite: Option<(u32, bool)> = None;
        for spec in &config.prioritizes {
            if !atom.matches(&spec.predicate, spec.arity) {
                continue;
            }
            match spec.weight {
                Weight::Inf => match fixed {
                    Some(sign) if sign != spec.sign => {
                        return Err(HeuristicError::ContradictoryFixing { var: var.number() })
                    }
                    _ => fixed = Some(spec.sign),
                },
                Weight::Level(w) => {
                    if finite.is_none_or(|(held, _)| w >= held) {
                        finite = Some((w, spec.sign));
                    }
                }
            }
        }
        if let Some(sign) = fixed {
            out.push(HeuristicAtom {
                var,
                weight: Weight::Inf,
                sign,
            });
        } else if let Some((w, sign)) = finite {
            out.push(HeuristicAtom {
                var,
                weight: Weight::Level(w),
                sign,
            });
        }
    }
    Ok(out)
}

/// Prioritize and split into the solver-facing form for one step.
pub fn compile_directives(
    problem: &Problem,
    undestroyed: &BTreeSet<Var>,
    config: &LnpsConfig,
    step: u64,
) -> Result<DirectiveSet, HeuristicError> {
    let mut directives = Vec::new();
    let mut fixings = Vec::new();
    for h in prioritize(problem, undestroyed, config)? {
        match h.weight {
            Weight::Level(level) => directives.push(Directive {
                var: h.var,
                level,
                sign: h.sign,
            }),
            Weight::Inf => fixings.push(Lit::new(h.var, h.sign)),
        }
    }
    Ok(DirectiveSet {
        step,
        directives,
        fixings,
    })
}

/// At most one step's directives are live at a time; installing a new step
/// requires retiring the previous one first.
#[derive(Debug, Default)]
pub struct StepRegistry {
    live: Option<DirectiveSet>,
}

impl StepRegistry {
    pub fn new() -> StepRegistry {
        StepRegistry { live: None }
    }

    pub fn live(&self) -> Option<&DirectiveSet> {
        self.live.as_ref()
    }

    pub fn install(&mut self, set: DirectiveSet) -> Result<(), HeuristicError> {
        if let Some(live) = &self.live {
            return Err(HeuristicError::StepAlreadyLive {
                live: live.step,
                step: set.step,
            });
        }
        self.live = Some(set);
        Ok(())
    }

    pub fn retire(&mut self, step: u64) -> Result<DirectiveSet, HeuristicError> {
        match &self.live {
            Some(live) if live.step == step => Ok(self.live.take().expect("checked")),
            other => Err(HeuristicError::StepNotLive {
                step,
                live: other.as_ref().map(|s| s.step),
            }),
        }
    }

    /// Retire whatever is live (if anything) and install `set`.
    pub fn swap(&mut self, set: DirectiveSet) -> Result<Option<DirectiveSet>, HeuristicError> {
        let old = self.live.take();
        self.install(set)?;
        Ok(old)
    }
}
