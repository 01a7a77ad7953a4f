//! Large neighborhood prioritized search over ground minimization problems.
//!
//! The pieces, bottom to top:
//!
//! * [`model`]: problems in clausal form with a linear objective and a
//!   symbol table, plus the instance text format.
//! * [`solver`]: a conflict-driven branch-and-bound solver whose branching
//!   order can be steered per call with leveled sign directives.
//! * [`config`]: the fact language selecting projected predicates, destroy
//!   operators, and priority weights.
//! * [`destroy`]: neighborhood destruction over a projected solution.
//! * [`heuristics`]: turning an undestroyed part into solver directives.
//! * [`engine`]: the destroy/reprioritize/resolve loop with budget
//!   escalation and acceptance control.
//! * [`bench`]: instance generation, a brute-force reference, and batch
//!   comparison runs.

pub mod bench;
pub mod config;
pub mod destroy;
pub mod engine;
pub mod heuristics;
pub mod model;
pub mod solver;

pub use config::{parse_config, DestroySpec, LnpsConfig, PrioritizeSpec, ProjectSpec, Weight};
pub use model::{parse_instance, Lit, Problem, Solution, SymbolicAtom, Term, Var};
pub use solver::{Budget, Directive, SolveResult, SolveStatus, SolverSession};
