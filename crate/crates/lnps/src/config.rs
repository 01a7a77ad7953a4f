//! Neighborhood configuration: which atoms are shown to the destroy step,
//! how they are destroyed, and how the survivors steer reconstruction.
//!
//! Configurations are period-terminated facts with `%` comments:
//!
//! ```text
//! % tour atoms are the neighborhood
//! _lnps_project(cycle, 2).
//! _lnps_destroy(cycle, 2, 3, p(30)).
//! _lnps_prioritize(cycle, 2, 1, true).
//! ```
//!
//! `_lnps_project(pred, arity)` exposes the matching atoms.
//! `_lnps_destroy(pred, arity, mask, p(n))` destroys `n` percent of them per
//! round; `mask` is a bitmask of argument positions (bit 0 = first argument).
//! The full mask drops atoms one by one; a partial mask groups atoms by the
//! terms at the selected positions and drops whole groups.
//! `_lnps_prioritize(pred, arity, w, m)` makes surviving atoms decision
//! candidates at level `w` with preferred sign `m`; `w` may be `inf`, which
//! freezes survivors instead and turns the search into plain large
//! neighborhood search.

use std::fmt;

use thiserror::Error;

/// Priority weight: a finite decision level or `inf` (freeze the atom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Level(u32),
    Inf,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Level(w) => write!(f, "{w}"),
            Weight::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectSpec {
    pub predicate: String,
    pub arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestroySpec {
    pub predicate: String,
    pub arity: usize,
    /// Bit `i` selects argument position `i + 1`.
    pub arg_mask: u64,
    /// Percentage of the view destroyed per round, 0..=100.
    pub percent: u8,
}

impl DestroySpec {
    /// Mask selecting every argument position.
    pub fn full_mask(arity: usize) -> u64 {
        debug_assert!(arity < 64);
        (1u64 << arity) - 1
    }

    pub fn is_full_mask(&self) -> bool {
        self.arg_mask == Self::full_mask(self.arity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrioritizeSpec {
    pub predicate: String,
    pub arity: usize,
    pub weight: Weight,
    /// Preferred sign for surviving atoms: `true` keeps them true.
    pub sign: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LnpsConfig {
    pub projects: Vec<ProjectSpec>,
    pub destroys: Vec<DestroySpec>,
    pub prioritizes: Vec<PrioritizeSpec>,
}

impl LnpsConfig {
    /// False as soon as any priority is `inf`: frozen atoms make iterations
    /// unable to leave the neighborhood, so global optimality of one
    /// iteration's result can never be concluded.
    pub fn variability(&self) -> bool {
        self.prioritizes.iter().all(|p| p.weight != Weight::Inf)
    }

    /// Render as facts. `parse_config` inverts this.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.projects {
            out.push_str(&format!("_lnps_project({}, {}).\n", p.predicate, p.arity));
        }
        for d in &self.destroys {
            out.push_str(&format!(
                "_lnps_destroy({}, {}, {}, p({})).\n",
                d.predicate, d.arity, d.arg_mask, d.percent
            ));
        }
        for p in &self.prioritizes {
            out.push_str(&format!(
                "_lnps_prioritize({}, {}, {}, {}).\n",
                p.predicate, p.arity, p.weight, p.sign
            ));
        }
        out
    }
}

pub fn check_variability(config: &LnpsConfig) -> bool {
    config.variability()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown fact `{name}`")]
    UnknownFact { line: usize, name: String },
    #[error("line {line}: `{name}` takes {expected} arguments, got {got}")]
    WrongArgCount {
        line: usize,
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: empty argument mask")]
    EmptyMask { line: usize },
    #[error("line {line}: mask {mask} out of range for arity {arity}")]
    MaskOutOfRange {
        line: usize,
        mask: u64,
        arity: usize,
    },
    #[error("line {line}: percentage {value} outside 0..=100")]
    PercentOutOfRange { line: usize, value: i64 },
    #[error("line {line}: priority weight must be a positive integer or `inf`")]
    BadWeight { line: usize },
    #[error("line {line}: sign modifier must be `true` or `false`")]
    BadModifier { line: usize },
    #[error("line {line}: `{pred}/{arity}` is destroyed but never projected")]
    UnprojectedDestroy {
        line: usize,
        pred: String,
        arity: usize,
    },
    #[error("line {line}: `{pred}/{arity}` is prioritized but never projected")]
    UnprojectedPrioritize {
        line: usize,
        pred: String,
        arity: usize,
    },
    #[error("configuration projects nothing")]
    NoProject,
}

fn syntax(line: usize, msg: impl Into<String>) -> ConfigError {
    ConfigError::Syntax {
        line,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Period,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ConfigError> {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '%' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '(' => {
                toks.push((line, Tok::LParen));
                chars.next();
            }
            ')' => {
                toks.push((line, Tok::RParen));
                chars.next();
            }
            ',' => {
                toks.push((line, Tok::Comma));
                chars.next();
            }
            '.' => {
                toks.push((line, Tok::Period));
                chars.next();
            }
            c if c.is_ascii_digit() || c == '-' => {
                let mut s = String::new();
                s.push(chars.next().unwrap());
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(chars.next().unwrap());
                    } else {
                        break;
                    }
                }
                let v: i64 = s
                    .parse()
                    .map_err(|_| syntax(line, format!("bad integer `{s}`")))?;
                toks.push((line, Tok::Int(v)));
            }
            c if c.is_ascii_lowercase() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(chars.next().unwrap());
                    } else {
                        break;
                    }
                }
                toks.push((line, Tok::Name(s)));
            }
            other => return Err(syntax(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// One parsed fact: name plus flat arguments (a name, an integer, or a
/// one-level functional term like `p(30)`).
#[derive(Debug, PartialEq)]
enum Arg {
    Name(String),
    Int(i64),
    Func(String, i64),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn line(&self) -> usize {
        self.toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map_or(1, |(l, _)| *l)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize, ConfigError> {
        match self.next() {
            Some((line, t)) if t == want => Ok(line),
            Some((line, t)) => Err(syntax(line, format!("expected {what}, found {t:?}"))),
            None => Err(syntax(
                self.line(),
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn fact(&mut self) -> Result<(usize, String, Vec<Arg>), ConfigError> {
        let (line, name) = match self.next() {
            Some((l, Tok::Name(n))) => (l, n),
            Some((l, t)) => return Err(syntax(l, format!("expected fact name, found {t:?}"))),
            None => unreachable!("fact() called at end of input"),
        };
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        loop {
            args.push(self.arg()?);
            match self.next() {
                Some((_, Tok::Comma)) => continue,
                Some((_, Tok::RParen)) => break,
                Some((l, t)) => return Err(syntax(l, format!("expected `,` or `)`, found {t:?}"))),
                None => return Err(syntax(line, "unterminated fact")),
            }
        }
        self.expect(Tok::Period, "`.`")?;
        Ok((line, name, args))
    }

    fn arg(&mut self) -> Result<Arg, ConfigError> {
        match self.next() {
            Some((_, Tok::Int(v))) => Ok(Arg::Int(v)),
            Some((line, Tok::Name(n))) => {
                if matches!(self.peek(), Some((_, Tok::LParen))) {
                    self.next();
                    let inner = match self.next() {
                        Some((_, Tok::Int(v))) => v,
                        Some((l, t)) => {
                            return Err(syntax(
                                l,
                                format!("expected integer inside `{n}(..)`, found {t:?}"),
                            ))
                        }
                        None => return Err(syntax(line, "unterminated term")),
                    };
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Arg::Func(n, inner))
                } else {
                    Ok(Arg::Name(n))
                }
            }
            Some((l, t)) => Err(syntax(l, format!("expected argument, found {t:?}"))),
            None => Err(syntax(self.line(), "expected argument, found end of input")),
        }
    }
}

fn expect_pred_arity(
    line: usize,
    name: &str,
    args: &[Arg],
) -> Result<(String, usize), ConfigError> {
    let pred = match &args[0] {
        Arg::Name(n) => n.clone(),
        _ => {
            return Err(syntax(
                line,
                format!("`{name}` wants a predicate name first"),
            ))
        }
    };
    let arity = match args[1] {
        Arg::Int(a) if (0..64).contains(&a) => a as usize,
        Arg::Int(a) => return Err(syntax(line, format!("arity {a} outside 0..64"))),
        _ => {
            return Err(syntax(
                line,
                format!("`{name}` wants an integer arity second"),
            ))
        }
    };
    Ok((pred, arity))
}

/// Parse a configuration. Facts may come in any order; destroy and prioritize
/// entries must target a projected `pred/arity`.
pub fn parse_config(text: &str) -> Result<LnpsConfig, ConfigError> {
    let toks = tokenize(text)?;
    let mut parser = Parser { toks, pos: 0 };
    let mut config = LnpsConfig::default();
    // (line, spec) pairs so cross-checks can point at the offending fact
    let mut destroys: Vec<(usize, DestroySpec)> = Vec::new();
    let mut prioritizes: Vec<(usize, PrioritizeSpec)> = Vec::new();

    while parser.peek().is_some() {
        let (line, name, args) = parser.fact()?;
        match name.as_str() {
            "_lnps_project" => {
                if args.len() != 2 {
                    return Err(ConfigError::WrongArgCount {
                        line,
                        name,
                        expected: 2,
                        got: args.len(),
                    });
                }
                let (predicate, arity) = expect_pred_arity(line, &name, &args)?;
                config.projects.push(ProjectSpec { predicate, arity });
            }
            "_lnps_destroy" => {
                if args.len() != 4 {
                    return Err(ConfigError::WrongArgCount {
                        line,
                        name,
                        expected: 4,
                        got: args.len(),
                    });
                }
                let (predicate, arity) = expect_pred_arity(line, &name, &args)?;
                let mask = match args[2] {
                    Arg::Int(m) if m >= 0 => m as u64,
                    Arg::Int(m) => {
                        return Err(ConfigError::MaskOutOfRange {
                            line,
                            mask: m as u64,
                            arity,
                        })
                    }
                    _ => return Err(syntax(line, "argument mask must be an integer")),
                };
                if mask == 0 {
                    return Err(ConfigError::EmptyMask { line });
                }
                if mask > DestroySpec::full_mask(arity) {
                    return Err(ConfigError::MaskOutOfRange { line, mask, arity });
                }
                let percent = match args[3] {
                    Arg::Func(ref f, v) if f == "p" => {
                        if !(0..=100).contains(&v) {
                            return Err(ConfigError::PercentOutOfRange { line, value: v });
                        }
                        v as u8
                    }
                    _ => return Err(syntax(line, "destroy amount must be `p(<percent>)`")),
                };
                destroys.push((
                    line,
                    DestroySpec {
                        predicate,
                        arity,
                        arg_mask: mask,
                        percent,
                    },
                ));
            }
            "_lnps_prioritize" => {
                if args.len() != 4 {
                    return Err(ConfigError::WrongArgCount {
                        line,
                        name,
                        expected: 4,
                        got: args.len(),
                    });
                }
                let (predicate, arity) = expect_pred_arity(line, &name, &args)?;
                let weight = match args[2] {
                    Arg::Int(w) if w >= 1 => Weight::Level(w as u32),
                    Arg::Int(_) => return Err(ConfigError::BadWeight { line }),
                    Arg::Name(ref n) if n == "inf" => Weight::Inf,
                    _ => return Err(ConfigError::BadWeight { line }),
                };
                let sign = match args[3] {
                    Arg::Name(ref n) if n == "true" => true,
                    Arg::Name(ref n) if n == "false" => false,
                    _ => return Err(ConfigError::BadModifier { line }),
                };
                prioritizes.push((
                    line,
                    PrioritizeSpec {
                        predicate,
                        arity,
                        weight,
                        sign,
                    },
                ));
            }
            _ => return Err(ConfigError::UnknownFact { line, name }),
        }
    }

    if config.projects.is_empty() {
        return Err(ConfigError::NoProject);
    }
    let projected = |pred: &str, arity: usize| {
        config
            .projects
            .iter()
            .any(|p| p.predicate == pred && p.arity == arity)
    };
    for (line, d) in &destroys {
        if !projected(&d.predicate, d.arity) {
            return Err(ConfigError::UnprojectedDestroy {
                line: *line,
                pred: d.predicate.clone(),
                arity: d.arity,
            });
        }
    }
    for (line, p) in &prioritizes {
        if !projected(&p.predicate, p.arity) {
            return Err(ConfigError::UnprojectedPrioritize {
                line: *line,
                pred: p.predicate.clone(),
                arity: p.arity,
            });
        }
    }
    config.destroys = destroys.into_iter().map(|(_, d)| d).collect();
    config.prioritizes = prioritizes.into_iter().map(|(_, p)| p).collect();
    Ok(config)
}
