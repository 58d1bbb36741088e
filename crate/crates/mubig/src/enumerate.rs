//! Connected bipartite graphs up to isomorphism (sides may be exchanged).

use std::collections::BTreeMap;

use crate::bigraph::{Bigraph, Side};
use crate::canon::{canonical_form, CanonCode};
use crate::par;

/// One representative per isomorphism class of connected bipartite graphs on
/// exactly `n` vertices, sorted by canonical code.
pub fn connected_bipartite_exact(n: usize) -> Vec<Bigraph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let mut g = Bigraph::new();
        g.add_vertex("x_1", Side::X).unwrap();
        return vec![g];
    }
    let mut found: BTreeMap<CanonCode, Bigraph> = BTreeMap::new();
    for a in 1..=n / 2 {
        let b = n - a;
        // rows as column masks, non-decreasing to skip row permutations
        let rows = row_multisets(a, b);
        let graphs: Vec<(CanonCode, Bigraph)> = par::filter_map(&rows, |rs| {
            let g = from_rows(rs, b);
            if g.is_connected() {
                Some((canonical_form(&g), g))
            } else {
                None
            }
        });
        for (c, g) in graphs {
            found.entry(c).or_insert(g);
        }
    }
    found.into_values().collect()
}

/// Graphs with 1..=max_n vertices, grouped by vertex count.
pub fn enumerate_connected_bipartite(max_n: usize) -> Vec<Bigraph> {
    (1..=max_n).flat_map(connected_bipartite_exact).collect()
}

fn row_multisets(a: usize, b: usize) -> Vec<Vec<u32>> {
    let top = 1u32 << b;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a);
    fn rec(a: usize, top: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for m in start..top {
            cur.push(m);
            rec(a, top, m, cur, out);
            cur.pop();
        }
    }
    // isolated rows never give connected graphs, so start at mask 1
    rec(a, top, 1, &mut cur, &mut out);
    out
}

fn from_rows(rows: &[u32], b: usize) -> Bigraph {
    let mut g = Bigraph::new();
    for i in 0..rows.len() {
        g.add_vertex(&format!("x_{}", i + 1), Side::X).unwrap();
    }
    for j in 0..b {
        g.add_vertex(&format!("y_{}", j + 1), Side::Y).unwrap();
    }
    for (i, &m) in rows.iter().enumerate() {
        for j in 0..b {
            if m >> j & 1 == 1 {
                g.add_edge(i, rows.len() + j).unwrap();
            }
        }
    }
    g
}
