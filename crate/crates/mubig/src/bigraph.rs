//! Labelled bipartite graphs and their text format.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bits::Bits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Y => "Y",
        })
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge `{0}`-`{1}` joins two vertices of the same side")]
    SameSideEdge(String, String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A simple bipartite graph with string labels. Vertices are addressed by
/// dense indices in insertion order.
#[derive(Clone, Debug, Default)]
pub struct Bigraph {
    labels: Vec<String>,
    sides: Vec<Side>,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
    index: HashMap<String, usize>,
}

impl Bigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from label lists and labelled edges.
    pub fn from_parts(xs: &[&str], ys: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut g = Bigraph::new();
        for x in xs {
            g.add_vertex(x, Side::X)?;
        }
        for y in ys {
            g.add_vertex(y, Side::Y)?;
        }
        for (a, b) in edges {
            g.add_edge_by_label(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: &str, side: Side) -> Result<usize, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateVertex(label.to_string()));
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.sides.push(side);
        self.adj.push(Vec::new());
        self.index.insert(label.to_string(), v);
        let n = v + 1;
        if self.rows.first().map_or(0, Bits::width) < n {
            let cap = n.next_power_of_two().max(64);
            for r in &mut self.rows {
                r.grow(cap);
            }
        }
        self.rows.push(Bits::new(self.rows.first().map_or(n, Bits::width).max(n)));
        Ok(v)
    }

    /// Adds an edge; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        if self.sides[a] == self.sides[b] {
            return Err(GraphError::SameSideEdge(self.labels[a].clone(), self.labels[b].clone()));
        }
        if self.rows[a].get(b) {
            return Ok(());
        }
        self.rows[a].set(b);
        self.rows[b].set(a);
        insert_sorted(&mut self.adj[a], b);
        insert_sorted(&mut self.adj[b], a);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let a = self.require(a)?;
        let b = self.require(b)?;
        self.add_edge(a, b)
    }

    pub fn remove_vertex_by_label(&self, label: &str) -> Result<Bigraph, GraphError> {
        let v = self.require(label)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.vertex(label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn vertices_on(&self, side: Side) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.sides[v] == side).collect()
    }

    pub fn x_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::X)
    }

    pub fn y_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::Y)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn neighbors_of(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbourhood of a labelled vertex, as labels.
    pub fn neighbors(&self, label: &str) -> Result<Vec<&str>, GraphError> {
        let v = self.require(label)?;
        Ok(self.adj[v].iter().map(|&u| self.labels[u].as_str()).collect())
    }

    /// Edges as (x, y) index pairs, ordered by x then y.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for x in self.x_vertices() {
            for &y in &self.adj[x] {
                out.push((x, y));
            }
        }
        out
    }

    /// All unordered pairs of distinct vertices with equal neighbourhoods.
    pub fn find_copies(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] == self.adj[v] && (self.sides[u] == self.sides[v] || self.adj[u].is_empty()) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Induced subgraph on `keep`, preserving the given order.
    pub fn induced(&self, keep: &[usize]) -> Bigraph {
        let mut g = Bigraph::new();
        for &v in keep {
            g.add_vertex(&self.labels[v], self.sides[v]).expect("distinct labels");
        }
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    g.add_edge(i, j).expect("bipartite");
                }
            }
        }
        g
    }

    /// Same graph with X and Y exchanged.
    pub fn swap_sides(&self) -> Bigraph {
        let mut g = self.clone();
        for s in &mut g.sides {
            *s = s.other();
        }
        g
    }

    /// Disjoint union; labels of `other` get `suffix` appended when they clash.
    pub fn union_with(&self, other: &Bigraph, suffix: &str) -> Bigraph {
        let mut g = self.clone();
        let mut map = Vec::with_capacity(other.n());
        for v in 0..other.n() {
            let mut l = other.labels[v].clone();
            while g.index.contains_key(&l) {
                l.push_str(suffix);
            }
            map.push(g.add_vertex(&l, other.sides[v]).expect("fresh label"));
        }
        for (x, y) in other.edges() {
            g.add_edge(map[x], map[y]).expect("bipartite");
        }
        g
    }

    /// True when both graphs have the same labels on the same sides and the
    /// same labelled edges.
    pub fn same_labelled(&self, other: &Bigraph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        for v in 0..self.n() {
            match other.vertex(&self.labels[v]) {
                Some(w) if other.sides[w] == self.sides[v] => {}
                _ => return false,
            }
        }
        self.edges().into_iter().all(|(x, y)| {
            let a = other.index[&self.labels[x]];
            let b = other.index[&self.labels[y]];
            other.adjacent(a, b)
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for side in [Side::X, Side::Y] {
            s.push_str(&side.to_string());
            for v in self.vertices_on(side) {
                s.push(' ');
                s.push_str(&self.labels[v]);
            }
            s.push('\n');
        }
        for (x, y) in self.edges() {
            s.push_str(&format!("E {} {}\n", self.labels[x], self.labels[y]));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Bigraph, ParseError> {
        let mut g = Bigraph::new();
        let mut edges = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let mut toks = tokens(line);
            let Some((c0, head)) = toks.next() else { continue };
            let err = |column: usize, message: String| ParseError { line: ln + 1, column, message };
            match head {
                "X" | "Y" => {
                    let side = if head == "X" { Side::X } else { Side::Y };
                    for (c, t) in toks {
                        if let Some(v) = g.vertex(t) {
                            let msg = if g.side(v) == side {
                                format!("duplicate label `{t}`")
                            } else {
                                format!("label `{t}` listed on both sides")
                            };
                            return Err(err(c, msg));
                        }
                        g.add_vertex(t, side).expect("checked above");
                    }
                }
                "E" => {
                    let rest: Vec<_> = toks.collect();
                    if rest.len() != 2 {
                        return Err(err(c0, "edge line needs exactly two labels".into()));
                    }
                    edges.push((ln + 1, rest[0], rest[1]));
                }
                other => return Err(err(c0, format!("unknown record `{other}`"))),
            }
        }
        for (line, (ca, a), (cb, b)) in edges {
            let va = g.vertex(a).ok_or_else(|| ParseError { line, column: ca, message: format!("unknown vertex `{a}`") })?;
            let vb = g.vertex(b).ok_or_else(|| ParseError { line, column: cb, message: format!("unknown vertex `{b}`") })?;
            if g.side(va) == g.side(vb) {
                return Err(ParseError { line, column: ca, message: format!("edge `{a}`-`{b}` has both ends on one side") });
            }
            g.add_edge(va, vb).expect("checked sides");
        }
        Ok(g)
    }
}

impl fmt::Display for Bigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Whitespace tokens with 1-based column numbers.
pub(crate) fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let col = line[..offset].chars().count() + 1;
        offset += end;
        rest = &trimmed[end..];
        Some((col, tok))
    })
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(p) = v.binary_search(&x) {
        v.insert(p, x);
    }
}
