//! Vertex-to-interval maps and the predicates defined on them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::bigraph::{tokens, Bigraph, Side};
use crate::interval::{fmt_rational, parse_rational, Interval};

/// Total map from labels to intervals, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Representation {
    entries: Vec<(String, Interval)>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoverageError {
    #[error("representation does not match the vertex set (missing: {missing:?}, extra: {extra:?})")]
    Mismatch { missing: Vec<String>, extra: Vec<String> },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct RepParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub valid: bool,
    /// Adjacent pairs whose intervals are disjoint, as (x, y) labels.
    pub missing_edges: Vec<(String, String)>,
    /// Non-adjacent cross pairs whose intervals meet, as (x, y) labels.
    pub spurious_edges: Vec<(String, String)>,
}

/// `inner` is a closed interval strictly inside the closed interval of `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BadPair {
    pub inner: String,
    pub outer: String,
}

impl Representation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces the interval of `label`.
    pub fn insert(&mut self, label: &str, iv: Interval) {
        match self.index.get(label) {
            Some(&k) => self.entries[k].1 = iv,
            None => {
                self.index.insert(label.to_string(), self.entries.len());
                self.entries.push((label.to_string(), iv));
            }
        }
    }

    pub fn get(&self, label: &str) -> Option<&Interval> {
        self.index.get(label).map(|&k| &self.entries[k].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Interval)> {
        self.entries.iter().map(|(l, i)| (l.as_str(), i))
    }

    pub fn map_intervals(&self, f: impl Fn(&Interval) -> Interval) -> Representation {
        let mut out = Representation::new();
        for (l, i) in self.iter() {
            out.insert(l, f(i));
        }
        out
    }

    /// Intervals indexed by the vertices of `g`.
    pub fn for_graph(&self, g: &Bigraph) -> Result<Vec<&Interval>, CoverageError> {
        check_coverage(g, self)?;
        Ok((0..g.n()).map(|v| self.get(g.label(v)).expect("covered")).collect())
    }

    pub fn from_indexed(g: &Bigraph, ivs: Vec<Interval>) -> Representation {
        let mut out = Representation::new();
        for (v, iv) in ivs.into_iter().enumerate() {
            out.insert(g.label(v), iv);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (l, i) in self.iter() {
            s.push_str(&format!(
                "{} {} {} {} {}\n",
                l,
                if i.left_closed { 'C' } else { 'O' },
                fmt_rational(&i.l),
                fmt_rational(&i.r),
                if i.right_closed { 'C' } else { 'O' }
            ));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Representation, RepParseError> {
        let mut rep = Representation::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let toks: Vec<_> = tokens(line).collect();
            if toks.is_empty() {
                continue;
            }
            let err = |column: usize, message: String| RepParseError { line: ln + 1, column, message };
            if toks.len() != 5 {
                return Err(err(toks[0].0, format!("expected 5 fields, found {}", toks.len())));
            }
            let flag = |(c, t): (usize, &str)| match t {
                "C" => Ok(true),
                "O" => Ok(false),
                _ => Err(err(c, format!("flag must be C or O, found `{t}`"))),
            };
            let lc = flag(toks[1])?;
            let rc = flag(toks[4])?;
            let l = parse_rational(toks[2].1).map_err(|e| err(toks[2].0, e.to_string()))?;
            let r = parse_rational(toks[3].1).map_err(|e| err(toks[3].0, e.to_string()))?;
            let iv = Interval::new(l, r, lc, rc).map_err(|e| err(toks[2].0, e.to_string()))?;
            if rep.get(toks[0].1).is_some() {
                return Err(err(toks[0].0, format!("duplicate label `{}`", toks[0].1)));
            }
            rep.insert(toks[0].1, iv);
        }
        Ok(rep)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_coverage(g: &Bigraph, rep: &Representation) -> Result<(), CoverageError> {
    let missing: Vec<String> = g.labels().iter().filter(|l| rep.get(l).is_none()).cloned().collect();
    let extra: Vec<String> = rep.iter().filter(|(l, _)| g.vertex(l).is_none()).map(|(l, _)| l.to_string()).collect();
    if missing.is_empty() && extra.is_empty() {
        Ok(())
    } else {
        Err(CoverageError::Mismatch { missing, extra })
    }
}

/// Compares cross-side adjacency with interval intersection.
pub fn validate(g: &Bigraph, rep: &Representation) -> Result<ValidityReport, CoverageError> {
    let ivs = rep.for_graph(g)?;
    let mut missing_edges = Vec::new();
    let mut spurious_edges = Vec::new();
    for x in g.x_vertices() {
        for y in g.y_vertices() {
            let meet = ivs[x].intersects(ivs[y]);
            let adj = g.adjacent(x, y);
            if adj && !meet {
                missing_edges.push((g.label(x).to_string(), g.label(y).to_string()));
            } else if !adj && meet {
                spurious_edges.push((g.label(x).to_string(), g.label(y).to_string()));
            }
        }
    }
    Ok(ValidityReport { valid: missing_edges.is_empty() && spurious_edges.is_empty(), missing_edges, spurious_edges })
}

pub fn is_valid(g: &Bigraph, rep: &Representation) -> bool {
    validate(g, rep).map(|r| r.valid).unwrap_or(false)
}

pub fn is_mixed_unit(rep: &Representation) -> bool {
    rep.iter().all(|(_, i)| i.is_unit())
}

fn properly_contains(outer: &Interval, inner: &Interval) -> bool {
    inner.subset_of(outer) && inner != outer
}

fn no_closed_nesting(rep: &Representation) -> bool {
    let closed: Vec<&Interval> = rep.iter().map(|(_, i)| i).filter(|i| i.is_closed()).collect();
    for (a, ia) in closed.iter().enumerate() {
        for (b, ib) in closed.iter().enumerate() {
            if a != b && properly_contains(ia, ib) {
                return false;
            }
        }
    }
    true
}

pub fn closed_twins_exist(rep: &Representation) -> bool {
    let closed: BTreeSet<(String, String)> = rep
        .iter()
        .filter(|(_, i)| i.is_closed())
        .map(|(_, i)| (i.l.to_string(), i.r.to_string()))
        .collect();
    rep.iter().filter(|(_, i)| !i.is_closed()).all(|(_, i)| closed.contains(&(i.l.to_string(), i.r.to_string())))
}

/// No closed interval properly contains another, and every non-closed
/// interval has a closed interval with the same endpoints.
pub fn is_mixed_proper(rep: &Representation) -> bool {
    no_closed_nesting(rep) && closed_twins_exist(rep)
}

/// Closed and open intervals only, no closed nesting, every open interval
/// with a closed twin.
pub fn is_almost_proper(rep: &Representation) -> bool {
    use crate::interval::IntervalClass::{CC, OO};
    rep.iter().all(|(_, i)| matches!(i.class(), CC | OO)) && no_closed_nesting(rep) && closed_twins_exist(rep)
}

/// Ordered pairs of closed intervals with strict nesting at both ends.
pub fn list_bad_pairs(rep: &Representation) -> Vec<BadPair> {
    let closed: Vec<(&str, &Interval)> = rep.iter().filter(|(_, i)| i.is_closed()).collect();
    let mut out = Vec::new();
    for &(u, iu) in &closed {
        for &(v, iv) in &closed {
            if iv.l < iu.l && iu.r < iv.r {
                out.push(BadPair { inner: u.to_string(), outer: v.to_string() });
            }
        }
    }
    out
}

/// The bigraph whose edges are the intersecting cross-side pairs. Vertices
/// without a side in `side_of` are skipped.
pub fn intersection_bigraph(rep: &Representation, side_of: &dyn Fn(&str) -> Option<Side>) -> Bigraph {
    let mut g = Bigraph::new();
    let mut ivs = Vec::new();
    for (l, i) in rep.iter() {
        if let Some(s) = side_of(l) {
            g.add_vertex(l, s).expect("labels are unique");
            ivs.push(i);
        }
    }
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.side(a) != g.side(b) && ivs[a].intersects(ivs[b]) {
                g.add_edge(a, b).expect("cross pair");
            }
        }
    }
    g
}

/// Translation applied to every interval.
pub fn translate(rep: &Representation, t: &crate::interval::Rational) -> Representation {
    rep.map_intervals(|i| i.translate(t))
}

/// Reflection applied to every interval.
pub fn reflect(rep: &Representation) -> Representation {
    rep.map_intervals(Interval::reflect)
}
