//! Searches over closed-interval representations.
//!
//! Every representation with closed intervals and pairwise distinct ends is
//! determined, up to the graph it induces, by the order of its `2n` ends.
//! Both searches build that order as a strict partial order on end points,
//! kept transitively closed in bit rows, and read off integer ends from a
//! linear extension at the leaves.

use std::collections::HashSet;

use thiserror::Error;

use crate::bigraph::Bigraph;
use crate::interval::{int, Interval};
use crate::representation::{is_valid, list_bad_pairs, Representation};

/// Largest vertex count the closed searches accept.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedSearchError {
    #[error("graph has {0} vertices; the closed searches handle at most {MAX_VERTICES}")]
    TooLarge(usize),
}

#[derive(Clone)]
struct Order {
    /// `after[a]` holds every end point known to lie strictly right of `a`.
    after: Vec<u64>,
}

fn lft(v: usize) -> usize {
    2 * v
}

fn rgt(v: usize) -> usize {
    2 * v + 1
}

impl Order {
    fn new(n: usize) -> Order {
        let mut o = Order { after: vec![0; 2 * n] };
        for v in 0..n {
            assert!(o.add(lft(v), rgt(v)));
        }
        o
    }

    fn before(&self, a: usize, b: usize) -> bool {
        self.after[a] >> b & 1 == 1
    }

    /// Adds `a < b`. False if that closes a cycle.
    fn add(&mut self, a: usize, b: usize) -> bool {
        if a == b || self.before(b, a) {
            return false;
        }
        if self.before(a, b) {
            return true;
        }
        let tail = self.after[b] | 1 << b;
        for i in 0..self.after.len() {
            if i == a || self.before(i, a) {
                self.after[i] |= tail;
            }
        }
        true
    }

    fn add_all(&mut self, pairs: &[(usize, usize)]) -> bool {
        pairs.iter().all(|&(a, b)| self.add(a, b))
    }

    /// Ranks `1..=2n` from a linear extension.
    fn ranks(&self) -> Vec<i64> {
        let mut idx: Vec<usize> = (0..self.after.len()).collect();
        idx.sort_by_key(|&i| (std::cmp::Reverse(self.after[i].count_ones()), i));
        let mut rank = vec![0; idx.len()];
        for (k, &i) in idx.iter().enumerate() {
            rank[i] = k as i64 + 1;
        }
        rank
    }

    fn representation(&self, g: &Bigraph) -> Representation {
        let rank = self.ranks();
        let ivs = (0..g.n()).map(|v| Interval::closed(int(rank[lft(v)]), int(rank[rgt(v)]))).collect();
        Representation::from_indexed(g, ivs)
    }

    /// `u` strictly inside `v` at both ends.
    fn nested(&self, u: usize, v: usize) -> bool {
        self.before(lft(v), lft(u)) && self.before(rgt(u), rgt(v))
    }
}

fn base_order(g: &Bigraph) -> Result<(Order, Vec<(usize, usize)>), ClosedSearchError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(ClosedSearchError::TooLarge(n));
    }
    let mut o = Order::new(n);
    let mut free = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.side(u) == g.side(v) {
                continue;
            }
            if g.adjacent(u, v) {
                assert!(o.add(lft(u), rgt(v)) && o.add(lft(v), rgt(u)));
            } else {
                free.push((u, v));
            }
        }
    }
    Ok((o, free))
}

fn disjoint(u: usize, v: usize) -> [(usize, usize); 1] {
    [(rgt(u), lft(v))]
}

fn closed_search(o: Order, free: &[(usize, usize)], done: &mut [bool]) -> Option<Order> {
    // forced choices first, then the first open pair
    let mut o = o;
    loop {
        let mut progress = false;
        let mut branch = None;
        for (k, &(u, v)) in free.iter().enumerate() {
            if done[k] {
                continue;
            }
            let a = !o.before(lft(v), rgt(u));
            let b = !o.before(lft(u), rgt(v));
            match (a, b) {
                (false, false) => return None,
                (true, false) | (false, true) => {
                    let pair = if a { disjoint(u, v) } else { disjoint(v, u) };
                    if !o.add_all(&pair) {
                        return None;
                    }
                    done[k] = true;
                    progress = true;
                }
                (true, true) => {
                    if branch.is_none() {
                        branch = Some(k);
                    }
                }
            }
        }
        if progress {
            continue;
        }
        let Some(k) = branch else { return Some(o) };
        let (u, v) = free[k];
        for pair in [disjoint(u, v), disjoint(v, u)] {
            let mut c = o.clone();
            if c.add_all(&pair) {
                let mut d = done.to_vec();
                d[k] = true;
                if let Some(r) = closed_search(c, free, &mut d) {
                    return Some(r);
                }
            }
        }
        return None;
    }
}

/// A representation of `g` by closed intervals, if one exists.
pub fn recognize_interval_closed(g: &Bigraph) -> Result<Option<Representation>, ClosedSearchError> {
    let (o, free) = base_order(g)?;
    let mut done = vec![false; free.len()];
    let found = closed_search(o, &free, &mut done).map(|o| o.representation(g));
    if let Some(rep) = &found {
        debug_assert!(is_valid(g, rep));
    }
    Ok(found)
}

/// Relative placement of two intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Place {
    /// first ends before second on both sides
    Before,
    After,
    /// first inside second
    Inside,
    Around,
}

const PLACES: [Place; 4] = [Place::Before, Place::After, Place::Inside, Place::Around];

fn place_edges(u: usize, v: usize, p: Place) -> [(usize, usize); 2] {
    match p {
        Place::Before => [(lft(u), lft(v)), (rgt(u), rgt(v))],
        Place::After => [(lft(v), lft(u)), (rgt(v), rgt(u))],
        Place::Inside => [(lft(v), lft(u)), (rgt(u), rgt(v))],
        Place::Around => [(lft(u), lft(v)), (rgt(v), rgt(u))],
    }
}

struct MinSearch<'a> {
    g: &'a Bigraph,
    pairs: Vec<(usize, usize)>,
    best: Option<((usize, usize), Order)>,
}

impl MinSearch<'_> {
    /// Bad pairs already fixed by the order, total and cross-side.
    fn bound(&self, o: &Order) -> (usize, usize) {
        let (mut all, mut cross) = (0, 0);
        for &(u, v) in &self.pairs {
            if o.nested(u, v) || o.nested(v, u) {
                all += 1;
                if self.g.side(u) != self.g.side(v) {
                    cross += 1;
                }
            }
        }
        (all, cross)
    }

    fn options(&self, o: &Order, u: usize, v: usize) -> Vec<Place> {
        PLACES
            .iter()
            .copied()
            .filter(|&p| {
                let mut c = o.clone();
                c.add_all(&place_edges(u, v, p))
            })
            .collect()
    }
}

/// A closed-interval representation of `g` with the fewest bad pairs,
/// ties broken by the fewest bad pairs across the sides. `None` when `g`
/// has no closed-interval representation at all.
///
/// The search is exhaustive; it is meant for small graphs.
pub fn min_bad_pair_representation(g: &Bigraph) -> Result<Option<Representation>, ClosedSearchError> {
    let (o, free) = base_order(g)?;
    let mut done = vec![false; free.len()];
    if closed_search(o.clone(), &free, &mut done).is_none() {
        return Ok(None);
    }
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let free: HashSet<(usize, usize)> = free.into_iter().collect();
    let mut ms = MinSearch { g, pairs, best: None };
    let mut done = vec![false; ms.pairs.len()];
    run_with_free(&mut ms, o, &mut done, &free);
    Ok(ms.best.map(|(_, o)| {
        let rep = o.representation(g);
        debug_assert!(is_valid(g, &rep));
        rep
    }))
}

/// Branches on one pair at a time, fewest placements first. Non-edges
/// across the sides only have the two disjoint placements.
fn run_with_free(ms: &mut MinSearch, o: Order, done: &mut [bool], free: &HashSet<(usize, usize)>) {
    let b = ms.bound(&o);
    if ms.best.as_ref().is_some_and(|(cost, _)| b >= *cost) {
        return;
    }
    let mut pick: Option<(usize, Vec<Vec<(usize, usize)>>)> = None;
    for (k, &(u, v)) in ms.pairs.iter().enumerate() {
        if done[k] {
            continue;
        }
        let choices: Vec<Vec<(usize, usize)>> = if free.contains(&(u, v)) {
            vec![disjoint(u, v).to_vec(), disjoint(v, u).to_vec()]
        } else {
            ms.options(&o, u, v).into_iter().map(|p| place_edges(u, v, p).to_vec()).collect()
        };
        let choices: Vec<_> = choices
            .into_iter()
            .filter(|e| {
                let mut c = o.clone();
                c.add_all(e)
            })
            .collect();
        let small = choices.len() <= 1;
        if small || pick.as_ref().is_none_or(|(_, p)| choices.len() < p.len()) {
            pick = Some((k, choices));
            if small {
                break;
            }
        }
    }
    let Some((k, choices)) = pick else {
        ms.best = Some((b, o));
        return;
    };
    done[k] = true;
    for e in choices {
        let mut c = o.clone();
        if c.add_all(&e) {
            run_with_free(ms, c, done, free);
        }
    }
    done[k] = false;
}

/// Number of bad pairs in `rep`, total and across the sides.
pub fn bad_pair_counts(g: &Bigraph, rep: &Representation) -> (usize, usize) {
    let bad = list_bad_pairs(rep);
    let cross = bad
        .iter()
        .filter(|b| match (g.vertex(&b.inner), g.vertex(&b.outer)) {
            (Some(a), Some(c)) => g.side(a) != g.side(c),
            _ => false,
        })
        .count();
    (bad.len(), cross)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stars_and_paths_need_no_nesting() {
        let g = Bigraph::from_parts(&["c"], &["a", "b", "d"], &[("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        let rep = min_bad_pair_representation(&g).unwrap().unwrap();
        assert!(is_valid(&g, &rep));
        assert_eq!(list_bad_pairs(&rep).len(), 0);
        let g = Bigraph::from_parts(&["a", "c"], &["b", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let rep = recognize_interval_closed(&g).unwrap().unwrap();
        assert!(is_valid(&g, &rep));
        assert_eq!(bad_pair_counts(&g, &min_bad_pair_representation(&g).unwrap().unwrap()), (0, 0));
    }

    #[test]
    fn six_cycle_is_not_closed_interval() {
        let g = Bigraph::from_parts(
            &["x1", "x2", "x3"],
            &["y1", "y2", "y3"],
            &[("x1", "y1"), ("y1", "x2"), ("x2", "y2"), ("y2", "x3"), ("x3", "y3"), ("y3", "x1")],
        )
        .unwrap();
        assert_eq!(recognize_interval_closed(&g).unwrap(), None);
        assert_eq!(min_bad_pair_representation(&g).unwrap(), None);
    }
}
