//! Turning a closed-interval representation into a mixed proper one.
//!
//! A bad pair `(u, v)` has `I(u)` strictly inside `I(v)`. Vertices on the
//! side opposite `u` that reach into `I(v)` without meeting `I(u)` sit in
//! layers to the right and left of `u`. Each layer is pushed outwards so
//! that it starts exactly where the previous layer's outer member ends;
//! afterwards nothing non-adjacent to `u` meets the inside of `I(v)`, and
//! `u` can take the open copy of `I(v)`.
//!
//! Every step is validated. Any shape the argument rules out for a
//! representation with the fewest bad pairs is reported by
//! [`extract_structure`]. [`repair`] itself also tries two smaller moves
//! when the layer rewrite fails or leaves the count unchanged: pulling
//! `I(v)` in to its nearest witnesses, and giving `v` the interval of a
//! twin `u`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::bigraph::{Bigraph, Side};
use crate::interval::{Interval, IntervalClass};
use crate::representation::{closed_twins_exist, is_mixed_proper, is_valid, list_bad_pairs, BadPair, Representation};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RepairError {
    #[error("representation does not cover the graph")]
    Coverage,
    #[error("input has a non-closed interval for {0}")]
    NotClosed(String),
    #[error("{0} is not a bad pair of the representation")]
    NotABadPair(String),
    #[error("no separating vertex on the {0} of the pair; the representation does not have the fewest bad pairs")]
    NotMinimalRepresentation(&'static str),
    #[error("claim {claim} shape violated: {detail}")]
    StructureViolation { claim: u8, detail: String },
    #[error("pair is not clean: {0}")]
    NotClean(String),
    #[error("{0} produced an invalid representation")]
    RewriteInvalid(&'static str),
    #[error("bad pairs went from {before} to {after}")]
    BadPairsIncreased { before: usize, after: usize },
    #[error("gave up after {0} iterations")]
    CapExceeded(usize),
    #[error("no bad pairs left but the result is not mixed proper")]
    NotMixedProper,
}

/// Layers around one bad pair, as labels. A two-element layer is listed
/// as `[a, b]` with `a` the inner member; the last layer may be a single
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPairStructure {
    pub pair: BadPair,
    /// `u` and `v` lie on different sides.
    pub cross_side: bool,
    pub right_layers: Vec<Vec<String>>,
    pub left_layers: Vec<Vec<String>>,
    pub witnesses: (String, String),
}

impl BadPairStructure {
    pub fn k_r(&self) -> usize {
        self.right_layers.len()
    }

    pub fn k_l(&self) -> usize {
        self.left_layers.len()
    }
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub iteration: usize,
    pub pair: BadPair,
    pub cross_side: bool,
    pub step: &'static str,
    pub rep: Representation,
}

#[derive(Clone, Debug)]
pub struct FailureReport {
    pub error: RepairError,
    pub pair: Option<BadPair>,
    pub iteration: usize,
    /// Representation at the point of failure.
    pub last: Representation,
    /// Steps completed before the failure, when a trace was requested.
    pub trace: Vec<TraceStep>,
}

impl fmt::Display for FailureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "repair failed at iteration {}", self.iteration)?;
        if let Some(p) = &self.pair {
            write!(f, " on ({}, {})", p.inner, p.outer)?;
        }
        write!(f, ": {}", self.error)
    }
}

impl std::error::Error for FailureReport {}

#[derive(Clone, Debug)]
pub struct RepairOutput {
    pub rep: Representation,
    pub iterations: usize,
    pub trace: Vec<TraceStep>,
}

struct Work<'a> {
    g: &'a Bigraph,
    iv: Vec<Interval>,
}

impl<'a> Work<'a> {
    fn new(g: &'a Bigraph, rep: &Representation) -> Result<Self, RepairError> {
        let iv = rep.for_graph(g).map_err(|_| RepairError::Coverage)?.into_iter().cloned().collect();
        Ok(Work { g, iv })
    }

    fn rep(&self) -> Representation {
        Representation::from_indexed(self.g, self.iv.clone())
    }

    fn valid(&self) -> bool {
        is_valid(self.g, &self.rep())
    }

    fn reflected(&self) -> Work<'a> {
        Work { g: self.g, iv: self.iv.iter().map(Interval::reflect).collect() }
    }

    fn pair(&self, p: &BadPair) -> Result<(usize, usize), RepairError> {
        let not_bad = || RepairError::NotABadPair(format!("({}, {})", p.inner, p.outer));
        let u = self.g.vertex(&p.inner).ok_or_else(not_bad)?;
        let v = self.g.vertex(&p.outer).ok_or_else(not_bad)?;
        let (iu, ivv) = (&self.iv[u], &self.iv[v]);
        if !(iu.is_closed() && ivv.is_closed() && ivv.l < iu.l && iu.r < ivv.r) {
            return Err(not_bad());
        }
        Ok((u, v))
    }

    /// Vertex on `side` starting closest to `u` on its right, ending by `v`'s end.
    fn right_witness(&self, side: Side, u: usize, v: usize) -> Option<usize> {
        self.g
            .vertices_on(side)
            .into_iter()
            .filter(|&w| self.iv[u].r < self.iv[w].l && self.iv[w].l <= self.iv[v].r)
            .min_by(|&a, &b| self.iv[a].l.cmp(&self.iv[b].l).then(a.cmp(&b)))
    }

    /// Right layers of `(u, v)` as vertex indices.
    fn right_layers(&self, u: usize, v: usize) -> Result<Vec<Vec<usize>>, RepairError> {
        let iv = &self.iv;
        let mut layers: Vec<Vec<usize>> = Vec::new();
        let (mut a, mut b) = (u, v);
        let mut side = self.g.side(u).other();
        loop {
            let mut z: Vec<usize> = self
                .g
                .vertices_on(side)
                .into_iter()
                .filter(|&w| iv[a].r < iv[w].l && iv[w].l <= iv[b].r)
                .collect();
            z.sort_by(|&p, &q| iv[p].l.cmp(&iv[q].l).then(iv[p].r.cmp(&iv[q].r)).then(p.cmp(&q)));
            match z.len() {
                0 if layers.is_empty() => return Err(RepairError::NotMinimalRepresentation("right")),
                0 => break,
                1 => {
                    layers.push(z);
                    break;
                }
                2 => {
                    let (p, q) = (z[0], z[1]);
                    let interleaved = iv[p].l < iv[q].l && iv[q].l <= iv[p].r && iv[p].r < iv[q].r;
                    if !interleaved {
                        return Err(violation(4, format!("{} and {} do not interleave", self.g.label(p), self.g.label(q))));
                    }
                    let left_split = self.g.vertices_on(side.other()).into_iter().find(|&w| {
                        w != u && iv[w].intersects(&iv[p]) && !iv[w].intersects(&iv[q]) && iv[w].r < iv[q].l
                    });
                    if let Some(w) = left_split {
                        return Err(violation(
                            4,
                            format!("{} separates {} from {} on the left", self.g.label(w), self.g.label(p), self.g.label(q)),
                        ));
                    }
                    layers.push(z);
                    a = p;
                    b = q;
                    side = side.other();
                }
                k => {
                    return Err(violation(4, format!("layer {} has {k} vertices", layers.len() + 1)));
                }
            }
            if layers.len() > self.g.n() {
                return Err(violation(4, "layers do not terminate".into()));
            }
        }
        Ok(layers)
    }

    /// Moves every right layer to start where the previous one ends.
    fn push_right(&mut self, v: usize, layers: &[Vec<usize>]) -> Result<(), RepairError> {
        let bad = |_| RepairError::RewriteInvalid("right rewrite");
        let mut prev = v;
        for layer in layers {
            let start = self.iv[prev].r.clone();
            match layer[..] {
                [t] => {
                    self.iv[t] = Interval::new(start, self.iv[t].r.clone(), true, true).map_err(bad)?;
                }
                [a, b] => {
                    let end = self.iv[b].r.clone();
                    self.iv[b] = Interval::new(start.clone(), end.clone(), true, true).map_err(bad)?;
                    self.iv[a] = Interval::with_class(start, end, IntervalClass::CO).map_err(bad)?;
                    prev = b;
                }
                _ => unreachable!("layers have one or two vertices"),
            }
        }
        Ok(())
    }
}

fn violation(claim: u8, detail: String) -> RepairError {
    RepairError::StructureViolation { claim, detail }
}

/// The vertices `(z_1, z_2)` on the side opposite the inner vertex that
/// reach into the outer interval without meeting the inner one, nearest to
/// it on the left and on the right.
pub fn claim1_witnesses(g: &Bigraph, rep: &Representation, p: &BadPair) -> Result<(String, String), RepairError> {
    let w = Work::new(g, rep)?;
    let (u, v) = w.pair(p)?;
    let side = g.side(u).other();
    let z2 = w.right_witness(side, u, v).ok_or(RepairError::NotMinimalRepresentation("right"))?;
    let z1 = w.reflected().right_witness(side, u, v).ok_or(RepairError::NotMinimalRepresentation("left"))?;
    Ok((g.label(z1).to_string(), g.label(z2).to_string()))
}

fn labels(g: &Bigraph, layers: &[Vec<usize>]) -> Vec<Vec<String>> {
    layers.iter().map(|l| l.iter().map(|&v| g.label(v).to_string()).collect()).collect()
}

fn indices(g: &Bigraph, layers: &[Vec<String>]) -> Vec<Vec<usize>> {
    layers.iter().map(|l| l.iter().map(|s| g.vertex(s).expect("layer label")).collect()).collect()
}

/// Layers on both sides of a bad pair, with the shape checks.
pub fn extract_structure(g: &Bigraph, rep: &Representation, p: &BadPair) -> Result<BadPairStructure, RepairError> {
    let witnesses = claim1_witnesses(g, rep, p)?;
    let w = Work::new(g, rep)?;
    let (u, v) = w.pair(p)?;
    let right = w.right_layers(u, v)?;
    let left = w.reflected().right_layers(u, v)?;
    let members: Vec<usize> = right.iter().chain(&left).flatten().copied().collect();
    for (i, a) in members.iter().enumerate() {
        if members[i + 1..].contains(a) {
            return Err(violation(4, format!("{} lies in layers on both sides", g.label(*a))));
        }
    }
    for bp in list_bad_pairs(rep) {
        let outer = g.vertex(&bp.outer);
        if outer.is_some_and(|o| members.contains(&o)) {
            return Err(violation(5, format!("{} lies inside layer vertex {}", bp.inner, bp.outer)));
        }
    }
    Ok(BadPairStructure {
        pair: p.clone(),
        cross_side: g.side(u) != g.side(v),
        right_layers: labels(g, &right),
        left_layers: labels(g, &left),
        witnesses,
    })
}

/// Right layers become `[r(prev), r(b)]` and `[r(prev), r(b))`, the last
/// single vertex `[r(prev), r(t)]`.
pub fn rewrite_right(g: &Bigraph, rep: &Representation, s: &BadPairStructure) -> Result<Representation, RepairError> {
    let mut w = Work::new(g, rep)?;
    let v = g.vertex(&s.pair.outer).ok_or(RepairError::Coverage)?;
    w.push_right(v, &indices(g, &s.right_layers))?;
    if !w.valid() {
        return Err(RepairError::RewriteInvalid("right rewrite"));
    }
    Ok(w.rep())
}

/// Mirror image of [`rewrite_right`], with left-open intervals.
pub fn rewrite_left(g: &Bigraph, rep: &Representation, s: &BadPairStructure) -> Result<Representation, RepairError> {
    let mut w = Work::new(g, rep)?.reflected();
    let v = g.vertex(&s.pair.outer).ok_or(RepairError::Coverage)?;
    w.push_right(v, &indices(g, &s.left_layers))?;
    let w = w.reflected();
    if !w.valid() {
        return Err(RepairError::RewriteInvalid("left rewrite"));
    }
    Ok(w.rep())
}

/// Gives the inner vertex the open copy of the outer interval. Needs every
/// vertex opposite the inner one to meet the inside of the outer interval
/// exactly when it is adjacent to the inner vertex.
pub fn finish_clean(g: &Bigraph, rep: &Representation, p: &BadPair) -> Result<Representation, RepairError> {
    let mut w = Work::new(g, rep)?;
    let (u, v) = w.pair(p)?;
    let open = Interval::with_class(w.iv[v].l.clone(), w.iv[v].r.clone(), IntervalClass::OO)
        .expect("outer interval has positive length");
    for z in g.vertices_on(g.side(u).other()) {
        if g.adjacent(u, z) != open.intersects(&w.iv[z]) {
            return Err(RepairError::NotClean(format!("{} at {}", g.label(z), w.iv[z])));
        }
    }
    w.iv[u] = open;
    if !w.valid() {
        return Err(RepairError::RewriteInvalid("open copy"));
    }
    Ok(w.rep())
}

/// Pulls the ends of the outer interval in to the nearest vertices that
/// reach into it past the inner one, then gives the inner vertex the open
/// copy. Used when the layer rewrite does not lower the count.
pub fn contract_outer(g: &Bigraph, rep: &Representation, p: &BadPair) -> Result<Representation, RepairError> {
    let mut w = Work::new(g, rep)?;
    let (u, v) = w.pair(p)?;
    let side = g.side(u).other();
    let z2 = w.right_witness(side, u, v).ok_or(RepairError::NotMinimalRepresentation("right"))?;
    let z1 = w.reflected().right_witness(side, u, v).ok_or(RepairError::NotMinimalRepresentation("left"))?;
    let (l, r) = (w.iv[z1].r.clone(), w.iv[z2].l.clone());
    w.iv[v] = Interval::new(l, r, true, true).map_err(|_| RepairError::RewriteInvalid("contraction"))?;
    if !w.valid() {
        return Err(RepairError::RewriteInvalid("contraction"));
    }
    finish_clean(g, &w.rep(), p)
}

/// Gives the outer vertex the inner interval. Only valid when both see the
/// same vertices.
pub fn shrink_to_inner(g: &Bigraph, rep: &Representation, p: &BadPair) -> Result<Representation, RepairError> {
    let mut w = Work::new(g, rep)?;
    let (u, v) = w.pair(p)?;
    w.iv[v] = w.iv[u].clone();
    if !w.valid() {
        return Err(RepairError::RewriteInvalid("shrink"));
    }
    Ok(w.rep())
}

fn pick_pair(g: &Bigraph, rep: &Representation) -> Option<BadPair> {
    let len = |l: &str| {
        let v = g.vertex(l).expect("pair label");
        rep.get(g.label(v)).map(Interval::length).expect("covered")
    };
    list_bad_pairs(rep).into_iter().max_by(|a, b| {
        len(&a.outer).cmp(&len(&b.outer)).then_with(|| match (b.outer.cmp(&a.outer), b.inner.cmp(&a.inner)) {
            (Ordering::Equal, o) => o,
            (o, _) => o,
        })
    })
}

/// Repairs `rep` one bad pair at a time until it is mixed proper. Each
/// iteration takes the first candidate that lowers the bad pair count, else
/// the first that keeps it, among the layer rewrite, the plain open copy,
/// [`shrink_to_inner`] and [`contract_outer`]. Candidates that leave an open
/// interval without a closed twin are skipped.
pub fn repair(g: &Bigraph, rep: &Representation, keep_trace: bool) -> Result<RepairOutput, FailureReport> {
    let mut trace = Vec::new();
    let fail = |error, pair, iteration, last: &Representation| FailureReport {
        error,
        pair,
        iteration,
        last: last.clone(),
        trace: Vec::new(),
    };
    let w = Work::new(g, rep).map_err(|e| fail(e, None, 0, rep))?;
    if let Some(v) = (0..g.n()).find(|&v| !w.iv[v].is_closed()) {
        return Err(fail(RepairError::NotClosed(g.label(v).to_string()), None, 0, rep));
    }
    if !w.valid() {
        return Err(fail(RepairError::RewriteInvalid("input"), None, 0, rep));
    }
    let cap = list_bad_pairs(rep).len() + 2;
    let mut cur = rep.clone();
    let mut iteration = 0;
    while let Some(pair) = pick_pair(g, &cur) {
        iteration += 1;
        if iteration > cap {
            return Err(FailureReport { trace, ..fail(RepairError::CapExceeded(cap), Some(pair), iteration, &cur) });
        }
        let before = list_bad_pairs(&cur).len();
        let step = |cur: &Representation| -> Result<Vec<(&'static str, Representation)>, RepairError> {
            let s = extract_structure(g, cur, &pair)?;
            let r1 = rewrite_right(g, cur, &s)?;
            let r2 = rewrite_left(g, &r1, &s)?;
            let r3 = finish_clean(g, &r2, &pair)?;
            Ok(vec![("right", r1), ("left", r2), ("open copy", r3)])
        };
        let candidates = [
            step(&cur),
            finish_clean(g, &cur, &pair).map(|r| vec![("open copy", r)]),
            shrink_to_inner(g, &cur, &pair).map(|r| vec![("shrink", r)]),
            contract_outer(g, &cur, &pair).map(|r| vec![("contract", r)]),
        ];
        let last = |s: &[(&'static str, Representation)]| s.last().expect("a step").1.clone();
        let count = |s: &[(&'static str, Representation)]| list_bad_pairs(&s.last().expect("a step").1).len();
        let pick = candidates
            .iter()
            .flatten()
            .filter(|s| closed_twins_exist(&last(s)))
            .find(|s| count(s) < before)
            .or_else(|| candidates.iter().flatten().filter(|s| closed_twins_exist(&last(s))).find(|s| count(s) <= before))
            .cloned();
        let steps = match (pick, candidates.into_iter().next().expect("layer rewrite")) {
            (Some(s), _) => s,
            (None, Err(e)) => return Err(FailureReport { trace, ..fail(e, Some(pair), iteration, &cur) }),
            (None, Ok(s)) => {
                let after = count(&s);
                let e = RepairError::BadPairsIncreased { before, after };
                return Err(FailureReport { trace, ..fail(e, Some(pair), iteration, &s.last().expect("a step").1) });
            }
        };
        let cross_side = g.vertex(&pair.inner).map(|a| g.side(a)) != g.vertex(&pair.outer).map(|b| g.side(b));
        let next = steps.last().expect("a step").1.clone();
        if keep_trace {
            for (name, r) in steps {
                trace.push(TraceStep { iteration, pair: pair.clone(), cross_side, step: name, rep: r });
            }
        }
        cur = next;
    }
    if !is_mixed_proper(&cur) {
        return Err(FailureReport { trace, ..fail(RepairError::NotMixedProper, None, iteration, &cur) });
    }
    Ok(RepairOutput { rep: cur, iterations: iteration, trace })
}
