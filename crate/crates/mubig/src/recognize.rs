//! Exhaustive search for mixed unit interval representations.
//!
//! Unknowns are the left ends `l(v)`; right ends are `l(v) + 1`. An edge
//! `uv` gives `|l(u) - l(v)| <= 1`; a non-edge across the sides is either
//! `u` left of `v` (`l(v) - l(u) >= 1`) or the reverse, which is what the
//! search branches on. All bounds are integers, so the tightest derived
//! bounds live in an integer all-pairs matrix that is updated per branch.
//!
//! End types are never enumerated. An inequality only needs particular end
//! types when it holds with equality in every solution, i.e. when it lies
//! on a zero-weight cycle of the bound matrix:
//!
//! * an edge with `l(u) = l(v) + 1` forced needs `u` closed on the left
//!   and `v` closed on the right;
//! * a non-edge with `u` left of `v` and `l(v) = l(u) + 1` forced needs
//!   `u` open on the right or `v` open on the left.
//!
//! Setting exactly the ends demanded by the first rule closed is then
//! optimal, and a branch is feasible iff the bounds have no negative cycle
//! and no forced non-edge meets two forced closed ends. Both conditions
//! only get worse as constraints are added, so failing branches are cut.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bigraph::Bigraph;
use crate::diffcon::{solve_difference_constraints, DifferenceConstraint};
use crate::interval::{int, Interval, Rational};
use crate::par;
use crate::representation::{is_mixed_unit, is_valid, Representation};

const INF: i32 = i32::MAX / 4;
/// Branch levels below which both children are explored concurrently.
const PAR_DEPTH: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), max_time: None }
    }

    pub fn time(d: Duration) -> Self {
        Budget { max_nodes: None, max_time: Some(d) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Sat,
    Unsat,
    BudgetExceeded,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct RecognitionOutcome {
    pub status: Status,
    pub witness: Option<Representation>,
    pub stats: Stats,
}

/// One connected component in local indices.
struct Problem {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Cross-side non-adjacent pairs; the search decides their order.
    free: Vec<(usize, usize)>,
}

#[derive(Clone)]
struct State {
    n: usize,
    /// `d[i * n + j]` bounds `l(j) - l(i)` from above.
    d: Vec<i32>,
    /// Per free pair: 0 open, 1 first left of second, -1 the reverse.
    orient: Vec<i8>,
    lc: Vec<bool>,
    rc: Vec<bool>,
}

impl State {
    fn root(p: &Problem) -> State {
        let n = p.n;
        let mut d = vec![INF; n * n];
        for i in 0..n {
            d[i * n + i] = 0;
        }
        for &(u, v) in &p.edges {
            d[u * n + v] = 1;
            d[v * n + u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                let dik = d[i * n + k];
                if dik >= INF {
                    continue;
                }
                for j in 0..n {
                    let dkj = d[k * n + j];
                    if dkj < INF && dik + dkj < d[i * n + j] {
                        d[i * n + j] = dik + dkj;
                    }
                }
            }
        }
        State { n, d, orient: vec![0; p.free.len()], lc: vec![false; n], rc: vec![false; n] }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> i32 {
        self.d[i * self.n + j]
    }

    /// Adds `l(b) - l(a) <= w`. Returns false on a negative cycle.
    fn add(&mut self, a: usize, b: usize, w: i32) -> bool {
        let n = self.n;
        if self.at(b, a) < INF && self.at(b, a) + w < 0 {
            return false;
        }
        if self.at(a, b) <= w {
            return true;
        }
        let col_a: Vec<i32> = (0..n).map(|i| self.at(i, a)).collect();
        let row_b: Vec<i32> = self.d[b * n..(b + 1) * n].to_vec();
        for i in 0..n {
            if col_a[i] >= INF {
                continue;
            }
            let base = col_a[i] + w;
            let row = &mut self.d[i * n..(i + 1) * n];
            for j in 0..n {
                if row_b[j] < INF && base + row_b[j] < row[j] {
                    row[j] = base + row_b[j];
                }
            }
        }
        true
    }

    /// Puts `u` left of `v`.
    fn place_left(&mut self, u: usize, v: usize) -> bool {
        self.add(v, u, -1)
    }

    fn can_left(&self, u: usize, v: usize) -> bool {
        let b = self.at(u, v);
        b > 1 || (b == 1 && !(self.rc[u] && self.lc[v]))
    }

    fn refresh_flags(&mut self, p: &Problem) {
        self.lc.iter_mut().for_each(|f| *f = false);
        self.rc.iter_mut().for_each(|f| *f = false);
        for &(u, v) in &p.edges {
            if self.at(u, v) == -1 {
                self.lc[u] = true;
                self.rc[v] = true;
            }
            if self.at(v, u) == -1 {
                self.lc[v] = true;
                self.rc[u] = true;
            }
        }
    }

    /// Applies forced orientations until nothing changes. False on conflict.
    fn settle(&mut self, p: &Problem) -> bool {
        loop {
            self.refresh_flags(p);
            let mut progress = false;
            for (k, &(u, v)) in p.free.iter().enumerate() {
                let o = self.orient[k];
                if o == 1 && !self.can_left(u, v) || o == -1 && !self.can_left(v, u) {
                    return false;
                }
                if o != 0 {
                    continue;
                }
                let (a, b) = (self.can_left(u, v), self.can_left(v, u));
                let ok = match (a, b) {
                    (false, false) => return false,
                    (true, false) => {
                        self.orient[k] = 1;
                        self.place_left(u, v)
                    }
                    (false, true) => {
                        self.orient[k] = -1;
                        self.place_left(v, u)
                    }
                    (true, true) => continue,
                };
                if !ok {
                    return false;
                }
                progress = true;
            }
            if !progress {
                return true;
            }
        }
    }

    /// Open pair with the narrowest window for `l(v) - l(u)`.
    fn pick(&self, p: &Problem) -> Option<usize> {
        let mut best: Option<(i64, usize)> = None;
        for (k, &(u, v)) in p.free.iter().enumerate() {
            if self.orient[k] != 0 {
                continue;
            }
            let w = self.at(u, v) as i64 + self.at(v, u) as i64;
            if best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, k));
            }
        }
        best.map(|(_, k)| k)
    }

    fn child(&self, p: &Problem, k: usize, first_left: bool) -> Option<State> {
        let (u, v) = p.free[k];
        let mut s = self.clone();
        s.orient[k] = if first_left { 1 } else { -1 };
        let ok = if first_left { s.place_left(u, v) } else { s.place_left(v, u) };
        (ok && s.settle(p)).then_some(s)
    }
}

struct Shared<'a> {
    budget: &'a Budget,
    start: Instant,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    deterministic: bool,
    parallel: bool,
    found: AtomicBool,
    best: Mutex<Option<(Vec<bool>, State)>>,
}

enum Res {
    Unsat,
    Stopped,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.max_nodes.is_some_and(|m| k > m) {
            self.out_of_budget.store(true, Ordering::Relaxed);
        }
        if k.is_multiple_of(256) && self.budget.max_time.is_some_and(|t| self.start.elapsed() > t) {
            self.out_of_budget.store(true, Ordering::Relaxed);
        }
        !self.out_of_budget.load(Ordering::Relaxed)
    }

    /// True when a solution at or left of `path` is already known.
    fn beaten(&self, path: &[bool]) -> bool {
        if !self.found.load(Ordering::Acquire) {
            return false;
        }
        if !self.deterministic {
            return true;
        }
        let best = self.best.lock().expect("lock");
        match best.as_ref() {
            Some((b, _)) => {
                let k = path.len().min(b.len());
                path[..k] > b[..k]
            }
            None => false,
        }
    }

    fn record(&self, path: Vec<bool>, s: State) {
        let mut best = self.best.lock().expect("lock");
        if best.as_ref().is_none_or(|(b, _)| path < *b) {
            *best = Some((path, s));
        }
        self.found.store(true, Ordering::Release);
    }
}

fn dfs(p: &Problem, sh: &Shared, s: State, path: &mut Vec<bool>) -> Res {
    if !sh.tick() || sh.beaten(path) {
        return Res::Stopped;
    }
    let Some(k) = s.pick(p) else {
        sh.record(path.clone(), s);
        return Res::Stopped;
    };
    let (u, v) = p.free[k];
    let left_first = s.at(u, v) >= s.at(v, u);
    // The root is mirror symmetric, so one orientation of the first pair
    // is enough.
    let options: &[bool] = if path.is_empty() { &[true] } else { &[true, false] };
    let kids: Vec<Option<State>> = options.iter().map(|&o| s.child(p, k, o == left_first)).collect();
    drop(s);
    if sh.parallel && path.len() < PAR_DEPTH && kids.len() == 2 && kids.iter().all(Option::is_some) {
        let mut it = kids.into_iter();
        let (a, b) = (it.next().flatten().expect("child"), it.next().flatten().expect("child"));
        let mut pa = path.clone();
        pa.push(false);
        let mut pb = path.clone();
        pb.push(true);
        let (ra, rb) = par::join(|| dfs(p, sh, a, &mut pa), || dfs(p, sh, b, &mut pb));
        return match (ra, rb) {
            (Res::Unsat, Res::Unsat) => Res::Unsat,
            _ => Res::Stopped,
        };
    }
    let mut all_unsat = true;
    for (i, kid) in kids.into_iter().enumerate() {
        let Some(kid) = kid else { continue };
        path.push(i == 1);
        let r = dfs(p, sh, kid, path);
        path.pop();
        if let Res::Stopped = r {
            all_unsat = false;
            if sh.found.load(Ordering::Acquire) && !sh.deterministic || sh.out_of_budget.load(Ordering::Relaxed) {
                break;
            }
        }
    }
    if all_unsat {
        Res::Unsat
    } else {
        Res::Stopped
    }
}

/// Left ends and end types for one solved component.
fn witness(p: &Problem, s: &State) -> Vec<Interval> {
    let closed = |b: bool| !b;
    let mut cs = Vec::new();
    for &(u, v) in &p.edges {
        // l(u) - l(v) <= 1, strict unless u's left end meets v's right end
        cs.push(DifferenceConstraint::new(u, v, int(1), closed(s.lc[u] && s.rc[v])));
        cs.push(DifferenceConstraint::new(v, u, int(1), closed(s.lc[v] && s.rc[u])));
    }
    for (k, &(a, b)) in p.free.iter().enumerate() {
        let (u, v) = if s.orient[k] == 1 { (a, b) } else { (b, a) };
        // u left of v: l(u) - l(v) <= -1, strict if the touching ends are closed
        cs.push(DifferenceConstraint::new(u, v, int(-1), s.rc[u] && s.lc[v]));
    }
    let x = solve_difference_constraints(&cs, p.n).expect("settled state is feasible");
    (0..p.n)
        .map(|v| {
            let l = x[v].clone();
            let r = &l + int(1);
            Interval::new(l, r, s.lc[v], s.rc[v]).expect("unit interval")
        })
        .collect()
}

fn problem(g: &Bigraph, comp: &[usize]) -> Problem {
    let local: std::collections::HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut free = Vec::new();
    for (i, &a) in comp.iter().enumerate() {
        for (j, &b) in comp.iter().enumerate().skip(i + 1) {
            if g.side(a) == g.side(b) {
                continue;
            }
            if g.adjacent(a, b) {
                edges.push((local[&a], local[&b]));
            } else {
                free.push((i, j));
            }
        }
    }
    Problem { n: comp.len(), edges, free }
}

/// Searches for a mixed unit interval representation of `g`.
///
/// With `deterministic` set the witness is the first one in depth-first
/// order, independent of scheduling; otherwise the first one found wins.
pub fn recognize_mixed_unit(g: &Bigraph, budget: &Budget, deterministic: bool) -> RecognitionOutcome {
    recognize_with(g, budget, deterministic, par::is_parallel())
}

/// As [`recognize_mixed_unit`], with the parallel search switched off when
/// `parallel` is false. Without the `parallel` feature it is always off.
pub fn recognize_with(g: &Bigraph, budget: &Budget, deterministic: bool, parallel: bool) -> RecognitionOutcome {
    let start = Instant::now();
    let mut nodes = 0;
    let mut rep_parts: Vec<(Vec<usize>, Vec<Interval>)> = Vec::new();
    let mut status = Status::Sat;
    for comp in g.components() {
        let p = problem(g, &comp);
        let sh = Shared {
            budget,
            start,
            nodes: AtomicU64::new(0),
            out_of_budget: AtomicBool::new(false),
            deterministic,
            parallel: parallel && par::is_parallel(),
            found: AtomicBool::new(false),
            best: Mutex::new(None),
        };
        let mut root = State::root(&p);
        let res = if root.settle(&p) { dfs(&p, &sh, root, &mut Vec::new()) } else { Res::Unsat };
        nodes += sh.nodes.load(Ordering::Relaxed);
        let best = sh.best.into_inner().expect("lock");
        match (res, best) {
            (_, Some((_, s))) => rep_parts.push((comp, witness(&p, &s))),
            (Res::Unsat, None) => {
                status = Status::Unsat;
                break;
            }
            (Res::Stopped, None) => {
                status = Status::BudgetExceeded;
                break;
            }
        }
    }
    let stats = Stats { nodes, elapsed: start.elapsed() };
    if status != Status::Sat {
        return RecognitionOutcome { status, witness: None, stats };
    }
    let mut ivs: Vec<Option<Interval>> = vec![None; g.n()];
    let mut offset = Rational::from_integer(0.into());
    for (comp, part) in rep_parts {
        let lo = part.iter().map(|i| i.l.clone()).min().expect("non-empty component");
        let hi = part.iter().map(|i| i.r.clone()).max().expect("non-empty component");
        let shift = &offset - &lo;
        for (v, iv) in comp.into_iter().zip(part) {
            ivs[v] = Some(iv.translate(&shift));
        }
        offset = &offset + (hi - lo) + int(1);
    }
    let rep = Representation::from_indexed(g, ivs.into_iter().map(|i| i.expect("every vertex placed")).collect());
    assert!(is_valid(g, &rep) && is_mixed_unit(&rep), "witness failed validation");
    RecognitionOutcome { status, witness: Some(rep), stats }
}
