//! Ground problem representation: variables, clauses, a linear objective to
//! minimize, and a symbol table tying variables to ground atoms.
//!
//! Instances are stored in a small text format:
//!
//! ```text
//! # tiny example
//! p lnps 2 1
//! a 1 x(1)
//! a 2 x(2)
//! c 1 2 0
//! m 3 1
//! m 1 2
//! ```
//!
//! `p lnps <vars> <clauses>` declares the size, `a <var> <atom>` binds a
//! variable to a ground atom, `c <lit>.. 0` is a clause over signed variable
//! ids, and `m <weight> <lit>` adds an objective term: `weight` is paid
//! whenever the literal is true. Lines starting with `#` are comments.

use std::collections::HashSet;
use std::fmt;
use std::ops::Not;

use thiserror::Error;

/// Problem variable. Internally zero-based; printed one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    /// Variable from its one-based id as written in instance files.
    pub fn from_number(n: u32) -> Var {
        assert!(n > 0, "variable ids are one-based");
        Var(n - 1)
    }

    pub fn from_index(i: usize) -> Var {
        Var(i as u32)
    }

    /// Zero-based index, for array addressing.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// One-based id as written in instance files.
    pub fn number(self) -> u32 {
        self.0 + 1
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Literal: a variable with a sign, packed as `var << 1 | negated`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: Var, positive: bool) -> Lit {
        Lit(var.0 << 1 | u32::from(!positive))
    }

    pub fn positive(var: Var) -> Lit {
        Lit::new(var, true)
    }

    pub fn negative(var: Var) -> Lit {
        Lit::new(var, false)
    }

    /// Parse a signed, nonzero, one-based variable id.
    pub fn from_signed(i: i64) -> Option<Lit> {
        if i == 0 || i.unsigned_abs() > u64::from(u32::MAX) {
            return None;
        }
        Some(Lit::new(Var::from_number(i.unsigned_abs() as u32), i > 0))
    }

    pub fn to_signed(self) -> i64 {
        let n = i64::from(self.var().number());
        if self.is_positive() {
            n
        } else {
            -n
        }
    }

    pub fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// Dense index for watch lists and literal-keyed tables.
    pub fn code(self) -> usize {
        self.0 as usize
    }

    /// Truth value under a total assignment indexed by variable.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var().index()] == self.is_positive()
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// Ground term: an integer or a bare constant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Int(i64),
    Const(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Int(i) => write!(f, "{i}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

/// Ground atom bound to a problem variable, e.g. `cycle(1,3)` or `done`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicAtom {
    pub var: Var,
    pub predicate: String,
    pub args: Vec<Term>,
}

impl SymbolicAtom {
    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn matches(&self, predicate: &str, arity: usize) -> bool {
        self.predicate == predicate && self.args.len() == arity
    }
}

impl fmt::Display for SymbolicAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A ground minimization problem in clausal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
    /// `(weight, literal)` terms; the weight is paid when the literal is true.
    pub objective: Vec<(u64, Lit)>,
    /// Symbol table, sorted by variable. Not every variable needs an atom.
    pub atoms: Vec<SymbolicAtom>,
}

impl Problem {
    /// Atoms of the table matching `predicate/arity`, in variable order.
    pub fn projected_atoms(&self, predicate: &str, arity: usize) -> Vec<&SymbolicAtom> {
        self.atoms
            .iter()
            .filter(|a| a.matches(predicate, arity))
            .collect()
    }

    pub fn atom_of_var(&self, var: Var) -> Option<&SymbolicAtom> {
        self.atoms
            .binary_search_by_key(&var, |a| a.var)
            .ok()
            .map(|i| &self.atoms[i])
    }

    /// Objective value of a total assignment.
    pub fn evaluate_cost(&self, assignment: &[bool]) -> u64 {
        assert_eq!(
            assignment.len(),
            self.num_vars,
            "assignment must be total over the problem's variables"
        );
        self.objective
            .iter()
            .filter(|(_, lit)| lit.eval(assignment))
            .map(|(w, _)| w)
            .sum()
    }

    /// True if the assignment satisfies every clause.
    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars);
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Render in the instance text format. `parse_instance` inverts this.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "p lnps {} {}\n",
            self.num_vars,
            self.clauses.len()
        ));
        for atom in &self.atoms {
            out.push_str(&format!("a {} {}\n", atom.var, atom));
        }
        for clause in &self.clauses {
            out.push('c');
            for lit in clause {
                out.push_str(&format!(" {lit}"));
            }
            out.push_str(" 0\n");
        }
        for (w, lit) in &self.objective {
            out.push_str(&format!("m {w} {lit}\n"));
        }
        out
    }
}

/// Feasible assignment together with its objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub assignment: Vec<bool>,
    pub cost: u64,
}

impl Solution {
    /// Validates feasibility and computes the cost.
    pub fn new(problem: &Problem, assignment: Vec<bool>) -> Result<Solution, InfeasibleAssignment> {
        if assignment.len() != problem.num_vars {
            return Err(InfeasibleAssignment::WrongLength {
                expected: problem.num_vars,
                got: assignment.len(),
            });
        }
        if !problem.satisfies(&assignment) {
            return Err(InfeasibleAssignment::ClauseViolated);
        }
        let cost = problem.evaluate_cost(&assignment);
        Ok(Solution { assignment, cost })
    }

    pub fn value(&self, var: Var) -> bool {
        self.assignment[var.index()]
    }

    /// True atoms of the table matching `predicate/arity`, in variable order.
    pub fn true_projected_atoms<'p>(
        &self,
        problem: &'p Problem,
        predicate: &str,
        arity: usize,
    ) -> Vec<&'p SymbolicAtom> {
        problem
            .atoms
            .iter()
            .filter(|a| a.matches(predicate, arity) && self.value(a.var))
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InfeasibleAssignment {
    #[error("assignment has {got} values, problem has {expected} variables")]
    WrongLength { expected: usize, got: usize },
    #[error("assignment violates a clause")]
    ClauseViolated,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("line {line}: literal {lit} out of range (1..={num_vars})")]
    LiteralOutOfRange {
        line: usize,
        lit: i64,
        num_vars: usize,
    },
    #[error("line {line}: zero objective weight")]
    ZeroWeight { line: usize },
    #[error("line {line}: negative objective weight")]
    NegativeWeight { line: usize },
    #[error("line {line}: duplicate atom symbol {symbol}")]
    DuplicateAtomSymbol { line: usize, symbol: String },
    #[error("line {line}: variable {var} already bound to an atom")]
    DuplicateAtomVar { line: usize, var: u32 },
    #[error("missing `p lnps <vars> <clauses>` header")]
    MissingHeader,
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("declared {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

/// Parse the instance text format. Errors carry one-based line numbers.
pub fn parse_instance(text: &str) -> Result<Problem, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut objective: Vec<(u64, Lit)> = Vec::new();
    let mut atoms: Vec<SymbolicAtom> = Vec::new();
    let mut seen_symbols: HashSet<(String, Vec<Term>)> = HashSet::new();
    let mut bound_vars: HashSet<Var> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().expect("nonempty line has a first token");
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let fmt = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "missing format name"))?;
                if fmt != "lnps" {
                    return Err(malformed(line, format!("unknown format `{fmt}`")));
                }
                let nv: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed(line, "bad variable count"))?;
                let nc: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed(line, "bad clause count"))?;
                if tokens.next().is_some() {
                    return Err(malformed(line, "trailing tokens after header"));
                }
                header = Some((nv, nc));
            }
            "a" => {
                let (num_vars, _) = header.ok_or(ParseError::MissingHeader)?;
                let var_tok = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "missing variable id"))?;
                let var_num: u32 = var_tok
                    .parse()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| malformed(line, format!("bad variable id `{var_tok}`")))?;
                if var_num as usize > num_vars {
                    return Err(ParseError::LiteralOutOfRange {
                        line,
                        lit: i64::from(var_num),
                        num_vars,
                    });
                }
                let sym_tok = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "missing atom symbol"))?;
                if tokens.next().is_some() {
                    return Err(malformed(line, "trailing tokens after atom symbol"));
                }
                let (predicate, args) = parse_atom_symbol(sym_tok)
                    .ok_or_else(|| malformed(line, format!("bad atom symbol `{sym_tok}`")))?;
                let var = Var::from_number(var_num);
                if !bound_vars.insert(var) {
                    return Err(ParseError::DuplicateAtomVar { line, var: var_num });
                }
                if !seen_symbols.insert((predicate.clone(), args.clone())) {
                    return Err(ParseError::DuplicateAtomSymbol {
                        line,
                        symbol: sym_tok.to_string(),
                    });
                }
                atoms.push(SymbolicAtom {
                    var,
                    predicate,
                    args,
                });
            }
            "c" => {
                let (num_vars, _) = header.ok_or(ParseError::MissingHeader)?;
                let mut lits = Vec::new();
                let mut terminated = false;
                for tok in tokens.by_ref() {
                    let val: i64 = tok
                        .parse()
                        .map_err(|_| malformed(line, format!("bad literal `{tok}`")))?;
                    if val == 0 {
                        terminated = true;
                        break;
                    }
                    if val.unsigned_abs() > num_vars as u64 {
                        return Err(ParseError::LiteralOutOfRange {
                            line,
                            lit: val,
                            num_vars,
                        });
                    }
                    lits.push(Lit::from_signed(val).expect("nonzero in-range literal"));
                }
                if !terminated {
                    return Err(malformed(line, "clause not terminated by 0"));
                }
                if tokens.next().is_some() {
                    return Err(malformed(line, "trailing tokens after clause terminator"));
                }
                if lits.is_empty() {
                    return Err(ParseError::EmptyClause { line });
                }
                clauses.push(lits);
            }
            "m" => {
                let (num_vars, _) = header.ok_or(ParseError::MissingHeader)?;
                let w_tok = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "missing weight"))?;
                let weight: i64 = w_tok
                    .parse()
                    .map_err(|_| malformed(line, format!("bad weight `{w_tok}`")))?;
                if weight < 0 {
                    return Err(ParseError::NegativeWeight { line });
                }
                if weight == 0 {
                    return Err(ParseError::ZeroWeight { line });
                }
                let l_tok = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "missing literal"))?;
                let val: i64 = l_tok
                    .parse()
                    .map_err(|_| malformed(line, format!("bad literal `{l_tok}`")))?;
                if val == 0 || val.unsigned_abs() > num_vars as u64 {
                    return Err(ParseError::LiteralOutOfRange {
                        line,
                        lit: val,
                        num_vars,
                    });
                }
                if tokens.next().is_some() {
                    return Err(malformed(line, "trailing tokens after objective term"));
                }
                objective.push((weight as u64, Lit::from_signed(val).expect("checked")));
            }
            _ => return Err(malformed(line, format!("unknown line tag `{tag}`"))),
        }
    }

    let (num_vars, declared) = header.ok_or(ParseError::MissingHeader)?;
    if clauses.len() != declared {
        return Err(ParseError::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    atoms.sort_by_key(|a| a.var);
    Ok(Problem {
        num_vars,
        clauses,
        objective,
        atoms,
    })
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_lowercase() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// `pred`, `pred(t,...)` where each `t` is an integer or a bare constant.
fn parse_atom_symbol(s: &str) -> Option<(String, Vec<Term>)> {
    let open = s.find('(');
    let (name, rest) = match open {
        None => (s, ""),
        Some(i) => (&s[..i], &s[i..]),
    };
    if name.is_empty()
        || !is_name_start(name.chars().next().unwrap())
        || !name.chars().all(is_name_char)
    {
        return None;
    }
    if rest.is_empty() {
        return Some((name.to_string(), Vec::new()));
    }
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    if inner.is_empty() {
        return None;
    }
    let mut args = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return None;
        }
        args.push(parse_term(part)?);
    }
    Some((name.to_string(), args))
}

fn parse_term(s: &str) -> Option<Term> {
    let first = s.chars().next()?;
    if first == '-' || first.is_ascii_digit() {
        return s.parse().ok().map(Term::Int);
    }
    if is_name_start(first) && s.chars().all(is_name_char) {
        return Some(Term::Const(s.to_string()));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = "\
# two selectable items, at least one chosen
p lnps 2 1
a 1 x(1)
a 2 x(2)
c 1 2 0
m 3 1
m 1 2
";

    #[test]
    fn parses_the_documented_example() {
        let p = parse_instance(TINY).unwrap();
        assert_eq!(p.num_vars, 2);
        assert_eq!(
            p.clauses,
            vec![vec![
                Lit::from_signed(1).unwrap(),
                Lit::from_signed(2).unwrap()
            ]]
        );
        assert_eq!(p.objective.len(), 2);
        assert_eq!(p.objective[0], (3, Lit::from_signed(1).unwrap()));
        assert_eq!(p.atoms.len(), 2);
        assert_eq!(p.atoms[0].predicate, "x");
        assert_eq!(p.atoms[0].args, vec![Term::Int(1)]);
    }

    #[test]
    fn round_trips_through_text() {
        let p = parse_instance(TINY).unwrap();
        let again = parse_instance(&p.to_text()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn evaluate_cost_sums_true_terms() {
        let p = parse_instance(TINY).unwrap();
        assert_eq!(p.evaluate_cost(&[true, true]), 4);
        assert_eq!(p.evaluate_cost(&[true, false]), 3);
        assert_eq!(p.evaluate_cost(&[false, true]), 1);
        assert_eq!(p.evaluate_cost(&[false, false]), 0);
    }

    #[test]
    fn negative_objective_literals_count_when_var_false() {
        let text = "p lnps 1 0\nm 5 -1\n";
        let p = parse_instance(text).unwrap();
        assert_eq!(p.evaluate_cost(&[false]), 5);
        assert_eq!(p.evaluate_cost(&[true]), 0);
    }

    #[test]
    fn projected_atoms_filters_by_predicate_and_arity() {
        let text = "p lnps 3 0\na 1 x(1)\na 2 x(2)\na 3 y(1,2)\n";
        let p = parse_instance(text).unwrap();
        let xs = p.projected_atoms("x", 1);
        assert_eq!(xs.len(), 2);
        assert!(p.projected_atoms("x", 2).is_empty());
        assert_eq!(p.projected_atoms("y", 2).len(), 1);
        assert!(p.projected_atoms("z", 0).is_empty());
    }

    #[test]
    fn rejects_missing_header() {
        assert_eq!(parse_instance("c 1 0\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse_instance(""), Err(ParseError::MissingHeader));
    }

    #[test]
    fn rejects_duplicate_header() {
        let r = parse_instance("p lnps 1 0\np lnps 1 0\n");
        assert_eq!(r, Err(ParseError::DuplicateHeader { line: 2 }));
    }

    #[test]
    fn rejects_empty_clause() {
        let r = parse_instance("p lnps 1 1\nc 0\n");
        assert_eq!(r, Err(ParseError::EmptyClause { line: 2 }));
    }

    #[test]
    fn rejects_out_of_range_literal() {
        let r = parse_instance("p lnps 1 1\nc 2 0\n");
        assert_eq!(
            r,
            Err(ParseError::LiteralOutOfRange {
                line: 2,
                lit: 2,
                num_vars: 1
            })
        );
    }

    #[test]
    fn rejects_zero_and_negative_weights() {
        assert_eq!(
            parse_instance("p lnps 1 0\nm 0 1\n"),
            Err(ParseError::ZeroWeight { line: 2 })
        );
        assert_eq!(
            parse_instance("p lnps 1 0\nm -2 1\n"),
            Err(ParseError::NegativeWeight { line: 2 })
        );
    }

    #[test]
    fn rejects_duplicate_atom_bindings() {
        assert_eq!(
            parse_instance("p lnps 2 0\na 1 x(1)\na 2 x(1)\n"),
            Err(ParseError::DuplicateAtomSymbol {
                line: 3,
                symbol: "x(1)".into()
            })
        );
        assert_eq!(
            parse_instance("p lnps 2 0\na 1 x(1)\na 1 x(2)\n"),
            Err(ParseError::DuplicateAtomVar { line: 3, var: 1 })
        );
    }

    #[test]
    fn rejects_clause_count_mismatch() {
        assert_eq!(
            parse_instance("p lnps 1 2\nc 1 0\n"),
            Err(ParseError::ClauseCountMismatch {
                declared: 2,
                found: 1
            })
        );
    }

    #[test]
    fn rejects_unterminated_clause() {
        assert!(matches!(
            parse_instance("p lnps 2 1\nc 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
    }

    #[test]
    fn atom_symbols_allow_constants_and_negative_ints() {
        let p = parse_instance("p lnps 2 0\na 1 edge(a1,-3)\na 2 done\n").unwrap();
        assert_eq!(
            p.atoms[0].args,
            vec![Term::Const("a1".into()), Term::Int(-3)]
        );
        assert_eq!(p.atoms[1].arity(), 0);
        assert_eq!(p.atoms[1].to_string(), "done");
        assert_eq!(p.atoms[0].to_string(), "edge(a1,-3)");
    }

    #[test]
    fn rejects_malformed_atom_symbols() {
        for bad in ["x(", "x()", "X(1)", "x(1,)", "x(A)", "1x", "x(1)(2)"] {
            let text = format!("p lnps 1 0\na 1 {bad}\n");
            assert!(
                matches!(
                    parse_instance(&text),
                    Err(ParseError::Malformed { line: 2, .. })
                ),
                "expected `{bad}` to be rejected"
            );
        }
    }

    #[test]
    fn lit_packing_round_trips() {
        for i in [1i64, -1, 5, -5, 100] {
            let l = Lit::from_signed(i).unwrap();
            assert_eq!(l.to_signed(), i);
            assert_eq!((!l).to_signed(), -i);
            assert_eq!(!(!l), l);
        }
        assert_eq!(Lit::from_signed(0), None);
    }

    #[test]
    fn solution_validates_feasibility() {
        let p = parse_instance(TINY).unwrap();
        let s = Solution::new(&p, vec![false, true]).unwrap();
        assert_eq!(s.cost, 1);
        assert_eq!(
            Solution::new(&p, vec![false, false]),
            Err(InfeasibleAssignment::ClauseViolated)
        );
        assert_eq!(
            Solution::new(&p, vec![true]),
            Err(InfeasibleAssignment::WrongLength {
                expected: 2,
                got: 1
            })
        );
    }
}
