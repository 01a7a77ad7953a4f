//! Search internals: trail, two-watch propagation, first-UIP analysis,
//! activity order, and the objective lower-bound propagator.

use std::time::Instant;

use crate::model::{Lit, Problem, Var};

use super::{Budget, Directive, SolveStatus};

const DEFAULT_POLARITY: bool = false;
const RESTART_BASE: u64 = 100;
const VAR_DECAY: f64 = 0.95;
const CLA_DECAY: f64 = 0.999;
const TIME_CHECK_MASK: u64 = 0xff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    True,
    False,
    Undef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reason {
    None,
    Clause(u32),
    /// Forced by the objective bound; explained by the first `prefix`
    /// entries of `obj_true` at enqueue time.
    Objective {
        prefix: u32,
    },
}

#[derive(Debug, Clone, Copy)]
enum ConflictSource {
    Clause(u32),
    Objective,
}

enum Exhaust {
    /// The remaining space is exhausted: no (further) model under the
    /// current bound and assumptions.
    Proven,
    /// Conflict or wall-clock budget ran out first.
    Cutoff,
}

#[derive(Debug)]
struct Clause {
    lits: Vec<Lit>,
    learnt: bool,
    deleted: bool,
    activity: f64,
}

#[derive(Debug, Clone, Copy)]
struct Watcher {
    cref: u32,
    blocker: Lit,
}

/// Max-heap of variables ordered by activity.
struct VarOrder {
    heap: Vec<Var>,
    pos: Vec<i32>,
    activity: Vec<f64>,
}

impl VarOrder {
    fn new(n: usize) -> VarOrder {
        let mut o = VarOrder {
            heap: Vec::with_capacity(n),
            pos: vec![-1; n],
            activity: vec![0.0; n],
        };
        o.reset();
        o
    }

    fn reset(&mut self) {
        let n = self.pos.len();
        self.heap.clear();
        self.heap.extend((0..n).map(Var::from_index));
        for (i, p) in self.pos.iter_mut().enumerate() {
            *p = i as i32;
        }
        self.activity.fill(0.0);
    }

    fn activity(&self, v: Var) -> f64 {
        self.activity[v.index()]
    }

    fn in_heap(&self, v: Var) -> bool {
        self.pos[v.index()] >= 0
    }

    fn push(&mut self, v: Var) {
        if self.in_heap(v) {
            return;
        }
        self.pos[v.index()] = self.heap.len() as i32;
        self.heap.push(v);
        self.sift_up(self.heap.len() - 1);
    }

    fn pop_max(&mut self) -> Option<Var> {
        let top = *self.heap.first()?;
        self.pos[top.index()] = -1;
        let last = self.heap.pop().expect("nonempty");
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last.index()] = 0;
            self.sift_down(0);
        }
        Some(top)
    }

    /// Returns true when activities overflowed and need a rescale.
    fn bump(&mut self, v: Var, inc: f64) -> bool {
        self.activity[v.index()] += inc;
        if self.in_heap(v) {
            self.sift_up(self.pos[v.index()] as usize);
        }
        self.activity[v.index()] > 1e100
    }

    fn rescale(&mut self) {
        for a in &mut self.activity {
            *a *= 1e-100;
        }
    }

    fn less(&self, a: Var, b: Var) -> bool {
        self.activity[a.index()] > self.activity[b.index()]
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.less(self.heap[i], self.heap[parent]) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        loop {
            let l = 2 * i + 1;
            let r = 2 * i + 2;
            let mut best = i;
            if l < self.heap.len() && self.less(self.heap[l], self.heap[best]) {
                best = l;
            }
            if r < self.heap.len() && self.less(self.heap[r], self.heap[best]) {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a].index()] = a as i32;
        self.pos[self.heap[b].index()] = b as i32;
    }
}

fn luby(mut x: u64) -> u64 {
    let (mut size, mut seq) = (1u64, 0u32);
    while size < x + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != x {
        size = (size - 1) / 2;
        seq -= 1;
        x %= size;
    }
    1 << seq
}

pub(super) struct Search {
    num_vars: usize,
    num_original: usize,
    clauses: Vec<Clause>,
    /// Literals of original one-literal clauses, after normalization.
    unit_facts: Vec<Lit>,
    watches: Vec<Vec<Watcher>>,
    assign: Vec<Value>,
    level: Vec<u32>,
    reason: Vec<Reason>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    polarity: Vec<bool>,
    order: VarOrder,
    var_inc: f64,
    cla_inc: f64,
    seen: Vec<bool>,
    learnt_live: usize,
    reduce_threshold: usize,

    // objective state
    obj_weight: Vec<u64>,
    obj_terms_desc: Vec<(Lit, u64)>,
    obj_true: Vec<Lit>,
    obj_lb: u64,
    bound: Option<u64>,

    // per-call inputs and outputs
    directive: Vec<(u32, bool)>,
    directed_vars: Vec<Var>,
    assumptions: Vec<Lit>,
    max_conflicts: Option<u64>,
    deadline: Option<Instant>,
    conflicts_used: u64,
    restart_count: u64,
    first_decision: Option<Lit>,
    first_descent_closed: bool,
    best_model: Option<(Vec<bool>, u64)>,
}

impl Search {
    pub(super) fn new(problem: &Problem) -> Search {
        let n = problem.num_vars;
        let mut unit_facts = Vec::new();
        let mut clauses = Vec::new();
        'clauses: for raw in &problem.clauses {
            let mut lits = raw.clone();
            lits.sort_unstable();
            lits.dedup();
            for w in lits.windows(2) {
                if w[0].var() == w[1].var() {
                    // x and !x in one clause: always satisfied
                    continue 'clauses;
                }
            }
            if lits.len() == 1 {
                unit_facts.push(lits[0]);
            } else {
                clauses.push(Clause {
                    lits,
                    learnt: false,
                    deleted: false,
                    activity: 0.0,
                });
            }
        }

        let mut obj_weight = vec![0u64; 2 * n];
        for &(w, l) in &problem.objective {
            obj_weight[l.code()] += w;
        }
        let mut obj_terms_desc: Vec<(Lit, u64)> = obj_weight
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w > 0)
            .map(|(code, &w)| (Lit::new(Var::from_index(code >> 1), code & 1 == 0), w))
            .collect();
        obj_terms_desc.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

        let num_original = clauses.len();
        Search {
            num_vars: n,
            num_original,
            clauses,
            unit_facts,
            watches: vec![Vec::new(); 2 * n],
            assign: vec![Value::Undef; n],
            level: vec![0; n],
            reason: vec![Reason::None; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            polarity: vec![DEFAULT_POLARITY; n],
            order: VarOrder::new(n),
            var_inc: 1.0,
            cla_inc: 1.0,
            seen: vec![false; n],
            learnt_live: 0,
            reduce_threshold: 0,
            obj_weight,
            obj_terms_desc,
            obj_true: Vec::new(),
            obj_lb: 0,
            bound: None,
            directive: vec![(0, false); n],
            directed_vars: Vec::new(),
            assumptions: Vec::new(),
            max_conflicts: None,
            deadline: None,
            conflicts_used: 0,
            restart_count: 0,
            first_decision: None,
            first_descent_closed: false,
            best_model: None,
        }
    }

    pub(super) fn run(
        &mut self,
        assumptions: &[Lit],
        directives: &[Directive],
        budget: Budget,
        initial_bound: Option<u64>,
    ) -> (SolveStatus, Option<(Vec<bool>, u64)>, u64) {
        self.reset();
        for d in directives {
            // collisions: highest level wins, last registration breaks ties
            let slot = &mut self.directive[d.var.index()];
            if d.level >= slot.0 {
                *slot = (d.level, d.sign);
            }
        }
        self.directed_vars = (0..self.num_vars)
            .map(Var::from_index)
            .filter(|v| self.directive[v.index()].0 > 0)
            .collect();
        self.assumptions = assumptions.to_vec();
        self.bound = initial_bound.map(|b| b.saturating_add(1));
        self.max_conflicts = budget.max_conflicts;
        self.deadline = budget.wall_clock.map(|d| Instant::now() + d);

        let exhaust = self.search();
        let model = self.best_model.take();
        let status = match (exhaust, model.is_some()) {
            (Exhaust::Proven, true) => SolveStatus::Optimum,
            (Exhaust::Proven, false) => SolveStatus::Unsatisfiable,
            (Exhaust::Cutoff, true) => SolveStatus::Satisfiable,
            (Exhaust::Cutoff, false) => SolveStatus::BudgetExhausted,
        };
        (status, model, self.conflicts_used)
    }

    pub(super) fn first_decision(&self) -> Option<Lit> {
        self.first_decision
    }

    pub(super) fn root_implied(&mut self) -> Option<Vec<Lit>> {
        self.reset();
        if !self.root_init() || self.propagate().is_some() {
            return None;
        }
        Some(self.trail.clone())
    }

    fn reset(&mut self) {
        self.clauses.truncate(self.num_original);
        for w in &mut self.watches {
            w.clear();
        }
        for (i, c) in self.clauses.iter_mut().enumerate() {
            c.deleted = false;
            c.activity = 0.0;
            let cref = i as u32;
            self.watches[(!c.lits[0]).code()].push(Watcher {
                cref,
                blocker: c.lits[1],
            });
            self.watches[(!c.lits[1]).code()].push(Watcher {
                cref,
                blocker: c.lits[0],
            });
        }
        self.learnt_live = 0;
        self.reduce_threshold = (2 * self.num_original).max(8192);
        self.assign.fill(Value::Undef);
        self.level.fill(0);
        self.reason.fill(Reason::None);
        self.trail.clear();
        self.trail_lim.clear();
        self.qhead = 0;
        self.polarity.fill(DEFAULT_POLARITY);
        self.order.reset();
        self.var_inc = 1.0;
        self.cla_inc = 1.0;
        self.seen.fill(false);
        self.obj_true.clear();
        self.obj_lb = 0;
        self.bound = None;
        self.directive.fill((0, false));
        self.directed_vars.clear();
        self.assumptions.clear();
        self.max_conflicts = None;
        self.deadline = None;
        self.conflicts_used = 0;
        self.restart_count = 0;
        self.first_decision = None;
        self.first_descent_closed = false;
        self.best_model = None;
    }

    fn search(&mut self) -> Exhaust {
        if !self.root_init() {
            return Exhaust::Proven;
        }
        let mut restart_limit = RESTART_BASE * luby(0);
        let mut conflicts_since_restart = 0u64;
        loop {
            if let Some(confl) = self.propagate() {
                self.conflicts_used += 1;
                conflicts_since_restart += 1;
                if self.decision_level() == 0 {
                    return Exhaust::Proven;
                }
                if self.budget_spent() {
                    return Exhaust::Cutoff;
                }
                let (learnt, bt) = self.analyze(confl);
                self.backjump(bt);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], Reason::None);
                } else {
                    let cref = self.add_clause(learnt, true);
                    let first = self.clauses[cref as usize].lits[0];
                    self.enqueue(first, Reason::Clause(cref));
                }
                self.var_inc /= VAR_DECAY;
                self.cla_inc /= CLA_DECAY;
            } else {
                if conflicts_since_restart >= restart_limit {
                    self.restart_count += 1;
                    restart_limit = RESTART_BASE * luby(self.restart_count);
                    conflicts_since_restart = 0;
                    self.backjump(0);
                    if self.time_spent() {
                        return Exhaust::Cutoff;
                    }
                    continue;
                }
                if self.learnt_live >= self.reduce_threshold {
                    self.reduce_learnts();
                }
                let dl = self.decision_level();
                if dl < self.assumptions.len() {
                    let a = self.assumptions[dl];
                    match self.value_lit(a) {
                        Value::True => self.new_level(), // dummy level keeps indices aligned
                        Value::False => return Exhaust::Proven,
                        Value::Undef => {
                            self.new_level();
                            self.enqueue(a, Reason::None);
                        }
                    }
                } else if let Some(l) = self.pick_branch() {
                    if !self.first_descent_closed {
                        self.first_decision = Some(l);
                        self.first_descent_closed = true;
                    }
                    self.new_level();
                    self.enqueue(l, Reason::None);
                } else {
                    // total assignment admitted by the bound: a new best model
                    let cost = self.obj_lb;
                    self.record_model(cost);
                    self.first_descent_closed = true;
                    if cost == 0 {
                        return Exhaust::Proven; // weights are positive, nothing beats 0
                    }
                    self.bound = Some(cost);
                    self.backjump(0);
                    conflicts_since_restart = 0;
                    if self.obj_lb >= cost {
                        return Exhaust::Proven; // root facts alone already cost this much
                    }
                    if self.time_spent() {
                        return Exhaust::Cutoff;
                    }
                    self.force_objective_negations();
                }
            }
        }
    }

    fn root_init(&mut self) -> bool {
        debug_assert_eq!(self.decision_level(), 0);
        for i in 0..self.unit_facts.len() {
            let u = self.unit_facts[i];
            match self.value_lit(u) {
                Value::True => {}
                Value::False => return false,
                Value::Undef => self.enqueue(u, Reason::None),
            }
        }
        self.force_objective_negations();
        true
    }

    fn record_model(&mut self, cost: u64) {
        debug_assert_eq!(self.trail.len(), self.num_vars);
        debug_assert!(self.assign.iter().all(|&v| v != Value::Undef));
        debug_assert!(self.bound.is_none_or(|b| cost < b));
        let assignment: Vec<bool> = self.assign.iter().map(|&v| v == Value::True).collect();
        self.best_model = Some((assignment, cost));
    }

    fn budget_spent(&mut self) -> bool {
        if let Some(max) = self.max_conflicts {
            if self.conflicts_used >= max {
                return true;
            }
        }
        if self.conflicts_used & TIME_CHECK_MASK == 0 {
            return self.time_spent();
        }
        false
    }

    fn time_spent(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    fn new_level(&mut self) {
        self.trail_lim.push(self.trail.len());
    }

    fn value_lit(&self, l: Lit) -> Value {
        match self.assign[l.var().index()] {
            Value::Undef => Value::Undef,
            v => {
                if (v == Value::True) == l.is_positive() {
                    Value::True
                } else {
                    Value::False
                }
            }
        }
    }

    fn enqueue(&mut self, p: Lit, reason: Reason) {
        debug_assert_eq!(self.value_lit(p), Value::Undef);
        let v = p.var().index();
        self.assign[v] = if p.is_positive() {
            Value::True
        } else {
            Value::False
        };
        self.level[v] = self.decision_level() as u32;
        self.reason[v] = reason;
        self.trail.push(p);
    }

    fn backjump(&mut self, to: usize) {
        if self.decision_level() <= to {
            return;
        }
        let target = self.trail_lim[to];
        for i in (target..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = l.var().index();
            self.polarity[v] = l.is_positive();
            self.assign[v] = Value::Undef;
            self.reason[v] = Reason::None;
            self.order.push(l.var());
        }
        self.trail.truncate(target);
        self.trail_lim.truncate(to);
        self.qhead = self.trail.len();
        while let Some(&t) = self.obj_true.last() {
            if self.value_lit(t) == Value::Undef {
                self.obj_lb -= self.obj_weight[t.code()];
                self.obj_true.pop();
            } else {
                break;
            }
        }
    }

    /// Under a bound, negate every unassigned objective literal whose weight
    /// no longer fits. Sound: a model extending the current trail that made
    /// such a literal true would cost at least `obj_lb + w >= bound`.
    fn force_objective_negations(&mut self) {
        let Some(b) = self.bound else { return };
        let prefix = self.obj_true.len() as u32;
        for idx in 0..self.obj_terms_desc.len() {
            let (l, w) = self.obj_terms_desc[idx];
            if self.obj_lb.saturating_add(w) < b {
                break; // weights descend, the rest fit
            }
            if self.value_lit(l) == Value::Undef {
                self.enqueue(!l, Reason::Objective { prefix });
            }
        }
    }

    fn propagate(&mut self) -> Option<ConflictSource> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;

            let w = self.obj_weight[p.code()];
            if w > 0 {
                self.obj_true.push(p);
                self.obj_lb += w;
                if let Some(b) = self.bound {
                    if self.obj_lb >= b {
                        return Some(ConflictSource::Objective);
                    }
                    self.force_objective_negations();
                }
            }

            let false_lit = !p;
            let pc = p.code();
            let mut i = 0;
            'watchers: while i < self.watches[pc].len() {
                let Watcher { cref, blocker } = self.watches[pc][i];
                if self.value_lit(blocker) == Value::True {
                    i += 1;
                    continue;
                }
                let ci = cref as usize;
                debug_assert!(!self.clauses[ci].deleted);
                if self.clauses[ci].lits[0] == false_lit {
                    self.clauses[ci].lits.swap(0, 1);
                }
                debug_assert_eq!(self.clauses[ci].lits[1], false_lit);
                let first = self.clauses[ci].lits[0];
                if first != blocker && self.value_lit(first) == Value::True {
                    self.watches[pc][i].blocker = first;
                    i += 1;
                    continue;
                }
                for k in 2..self.clauses[ci].lits.len() {
                    let lk = self.clauses[ci].lits[k];
                    if self.value_lit(lk) != Value::False {
                        self.clauses[ci].lits.swap(1, k);
                        self.watches[pc].swap_remove(i);
                        self.watches[(!lk).code()].push(Watcher {
                            cref,
                            blocker: first,
                        });
                        continue 'watchers;
                    }
                }
                // no replacement: unit or conflicting
                if self.value_lit(first) == Value::False {
                    return Some(ConflictSource::Clause(cref));
                }
                self.enqueue(first, Reason::Clause(cref));
                i += 1;
            }
        }
        None
    }

    /// All-false literal view of a conflict.
    fn conflict_lits(&self, source: ConflictSource) -> Vec<Lit> {
        match source {
            ConflictSource::Clause(cref) => self.clauses[cref as usize].lits.clone(),
            ConflictSource::Objective => self.obj_true.iter().map(|&l| !l).collect(),
        }
    }

    /// Reason literals of `p`'s assignment, excluding `p` itself; all false.
    fn reason_lits(&self, p: Lit) -> Vec<Lit> {
        match self.reason[p.var().index()] {
            Reason::None => unreachable!("decisions have no reason to expand"),
            Reason::Clause(cref) => self.clauses[cref as usize]
                .lits
                .iter()
                .copied()
                .filter(|&l| l != p)
                .collect(),
            Reason::Objective { prefix } => self.obj_true[..prefix as usize]
                .iter()
                .map(|&l| !l)
                .collect(),
        }
    }

    /// First-UIP learning. Returns the asserting clause (UIP negation first)
    /// and the backjump level.
    fn analyze(&mut self, source: ConflictSource) -> (Vec<Lit>, usize) {
        let cur_level = self.decision_level() as u32;
        debug_assert!(cur_level > 0);
        let mut learnt: Vec<Lit> = vec![Lit::positive(Var::from_index(0))]; // placeholder for the UIP
        let mut counter = 0usize;
        let mut idx = self.trail.len();
        if let ConflictSource::Clause(cref) = source {
            self.bump_clause(cref);
        }
        let mut lits = self.conflict_lits(source);
        loop {
            for &q in &lits {
                debug_assert_eq!(self.value_lit(q), Value::False);
                let v = q.var();
                let lv = self.level[v.index()];
                if !self.seen[v.index()] && lv > 0 {
                    self.seen[v.index()] = true;
                    self.bump_var(v);
                    if lv >= cur_level {
                        counter += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            debug_assert!(counter > 0);
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].var().index()] {
                    break;
                }
            }
            let p = self.trail[idx];
            self.seen[p.var().index()] = false;
            counter -= 1;
            if counter == 0 {
                learnt[0] = !p;
                break;
            }
            if let Reason::Clause(cref) = self.reason[p.var().index()] {
                self.bump_clause(cref);
            }
            lits = self.reason_lits(p);
        }
        for &q in &learnt[1..] {
            self.seen[q.var().index()] = false;
        }
        let mut bt = 0usize;
        if learnt.len() > 1 {
            let mut pos = 1;
            for (i, &q) in learnt.iter().enumerate().skip(1) {
                let lv = self.level[q.var().index()] as usize;
                if lv > bt {
                    bt = lv;
                    pos = i;
                }
            }
            learnt.swap(1, pos);
        }
        (learnt, bt)
    }

    fn add_clause(&mut self, lits: Vec<Lit>, learnt: bool) -> u32 {
        debug_assert!(lits.len() >= 2);
        let cref = self.clauses.len() as u32;
        self.watches[(!lits[0]).code()].push(Watcher {
            cref,
            blocker: lits[1],
        });
        self.watches[(!lits[1]).code()].push(Watcher {
            cref,
            blocker: lits[0],
        });
        self.clauses.push(Clause {
            lits,
            learnt,
            deleted: false,
            activity: self.cla_inc,
        });
        if learnt {
            self.learnt_live += 1;
        }
        cref
    }

    fn bump_var(&mut self, v: Var) {
        if self.order.bump(v, self.var_inc) {
            self.order.rescale();
            self.var_inc *= 1e-100;
        }
    }

    fn bump_clause(&mut self, cref: u32) {
        let c = &mut self.clauses[cref as usize];
        if !c.learnt {
            return;
        }
        c.activity += self.cla_inc;
        if c.activity > 1e20 {
            for c in &mut self.clauses[self.num_original..] {
                c.activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    fn locked(&self, cref: u32) -> bool {
        let first = self.clauses[cref as usize].lits[0];
        self.value_lit(first) == Value::True
            && self.reason[first.var().index()] == Reason::Clause(cref)
    }

    fn reduce_learnts(&mut self) {
        let mut victims: Vec<u32> = (self.num_original..self.clauses.len())
            .map(|i| i as u32)
            .filter(|&c| {
                let cl = &self.clauses[c as usize];
                !cl.deleted && cl.lits.len() > 2 && !self.locked(c)
            })
            .collect();
        victims.sort_by(|&a, &b| {
            self.clauses[a as usize]
                .activity
                .total_cmp(&self.clauses[b as usize].activity)
        });
        for &c in &victims[..victims.len() / 2] {
            let ci = c as usize;
            self.clauses[ci].deleted = true;
            self.learnt_live -= 1;
            for j in 0..2 {
                let w = !self.clauses[ci].lits[j];
                self.watches[w.code()].retain(|watcher| watcher.cref != c);
            }
        }
        self.reduce_threshold += self.reduce_threshold / 2;
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        // directed variables first: highest level, activity breaks ties
        let mut best: Option<(u32, f64, Var, bool)> = None;
        for &v in &self.directed_vars {
            if self.assign[v.index()] != Value::Undef {
                continue;
            }
            let (lvl, sign) = self.directive[v.index()];
            let act = self.order.activity(v);
            let better = match best {
                None => true,
                Some((bl, ba, _, _)) => lvl > bl || (lvl == bl && act > ba),
            };
            if better {
                best = Some((lvl, act, v, sign));
            }
        }
        if let Some((_, _, v, sign)) = best {
            return Some(Lit::new(v, sign));
        }
        while let Some(v) = self.order.pop_max() {
            if self.assign[v.index()] == Value::Undef {
                return Some(Lit::new(v, self.polarity[v.index()]));
            }
        }
        None
    }
}
