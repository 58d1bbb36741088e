//! Canonical codes for bigraphs up to isomorphism and side exchange.
//!
//! Colour refinement plus individualization. Twins inside a branching cell
//! are interchangeable, so only one of each twin class is tried.

use crate::bigraph::{Bigraph, Side};
use crate::bits::Bits;

/// Canonical code: side sizes followed by the biadjacency matrix in
/// canonical order. Equal codes mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    pub nx: usize,
    pub ny: usize,
    pub bits: Vec<u64>,
}

pub fn canonical_form(g: &Bigraph) -> CanonCode {
    let nx = g.x_vertices().len();
    let ny = g.n() - nx;
    if nx < ny {
        oriented(g, Side::X)
    } else if ny < nx {
        oriented(g, Side::Y)
    } else {
        oriented(g, Side::X).min(oriented(g, Side::Y))
    }
}

/// Isomorphism allowing the two sides to be exchanged.
pub fn is_isomorphic(a: &Bigraph, b: &Bigraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Isomorphism that maps X to X.
pub fn is_isomorphic_fixed_sides(a: &Bigraph, b: &Bigraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && oriented(a, Side::X) == oriented(b, Side::X)
}

/// Canonical code with `first` treated as the row side.
fn oriented(g: &Bigraph, first: Side) -> CanonCode {
    let n = g.n();
    let colors: Vec<usize> = (0..n).map(|v| if g.side(v) == first { 0 } else { 1 }).collect();
    let mut best: Option<CanonCode> = None;
    search(g, first, refine(g, colors), &mut best);
    best.unwrap_or(CanonCode { nx: 0, ny: 0, bits: Vec::new() })
}

/// Equitable refinement. Colours are renumbered canonically by sorting
/// (old colour, sorted neighbour colours).
fn refine(g: &Bigraph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors_of(v).iter().map(|&w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                c += 1;
            }
            next[sigs[k].2] = c;
        }
        let before = distinct(&colors);
        colors = next;
        if distinct(&colors) == before {
            return colors;
        }
    }
}

fn distinct(c: &[usize]) -> usize {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

fn search(g: &Bigraph, first: Side, colors: Vec<usize>, best: &mut Option<CanonCode>) {
    let n = g.n();
    let mut counts = vec![0usize; n + 1];
    for &c in &colors {
        counts[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let code = leaf_code(g, first, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<&Bits> = Vec::new();
    for &v in &cell {
        let row = g.row(v);
        if tried.contains(&row) {
            continue;
        }
        tried.push(row);
        // v keeps colour `target`; the rest of its cell moves just above it.
        let mut next: Vec<usize> = colors.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
        for &w in &cell {
            if w != v {
                next[w] = target + 1;
            }
        }
        search(g, first, refine(g, next), best);
    }
}

fn leaf_code(g: &Bigraph, first: Side, colors: &[usize]) -> CanonCode {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| colors[v]);
    let rows: Vec<usize> = order.iter().copied().filter(|&v| g.side(v) == first).collect();
    let cols: Vec<usize> = order.iter().copied().filter(|&v| g.side(v) != first).collect();
    let mut bits = vec![0u64; (rows.len() * cols.len()).div_ceil(64)];
    for (i, &a) in rows.iter().enumerate() {
        for (j, &b) in cols.iter().enumerate() {
            if g.adjacent(a, b) {
                let k = i * cols.len() + j;
                // high bits first so that lexicographic order is stable
                bits[k / 64] |= 1 << (63 - k % 64);
            }
        }
    }
    CanonCode { nx: rows.len(), ny: cols.len(), bits }
}
