//! Induced subgraph search by backtracking over bit-set candidate masks.

use crate::bigraph::{Bigraph, Side};
use crate::bits::Bits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `mapping[p]` is the host vertex of pattern vertex `p`.
    pub mapping: Vec<usize>,
    /// Pattern X is mapped into host Y.
    pub side_swapped: bool,
}

impl Embedding {
    /// Re-checks the induced condition and side consistency.
    pub fn is_valid(&self, host: &Bigraph, pattern: &Bigraph) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.n() {
            return false;
        }
        let mut seen = Bits::new(host.n());
        for (p, &h) in m.iter().enumerate() {
            if h >= host.n() || seen.get(h) {
                return false;
            }
            seen.set(h);
            let want = if self.side_swapped { pattern.side(p).other() } else { pattern.side(p) };
            if host.side(h) != want {
                return false;
            }
        }
        (0..m.len()).all(|a| (a + 1..m.len()).all(|b| pattern.adjacent(a, b) == host.adjacent(m[a], m[b])))
    }
}

/// Up to `limit` induced embeddings of `pattern` in `host`, trying both side
/// orientations. `None` means no limit.
pub fn induced_subgraph_search(host: &Bigraph, pattern: &Bigraph, limit: Option<usize>) -> Vec<Embedding> {
    let mut out = Vec::new();
    if pattern.n() > host.n() || limit == Some(0) {
        return out;
    }
    for swapped in [false, true] {
        let mut s = Search::new(host, pattern, swapped, limit, &mut out);
        s.run();
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
    }
    out
}

pub fn contains_induced(host: &Bigraph, pattern: &Bigraph) -> bool {
    !induced_subgraph_search(host, pattern, Some(1)).is_empty()
}

struct Search<'a> {
    host: &'a Bigraph,
    pattern: &'a Bigraph,
    swapped: bool,
    limit: Option<usize>,
    out: &'a mut Vec<Embedding>,
    order: Vec<usize>,
    side_mask: [Bits; 2],
    map: Vec<usize>,
    used: Bits,
}

impl<'a> Search<'a> {
    fn new(host: &'a Bigraph, pattern: &'a Bigraph, swapped: bool, limit: Option<usize>, out: &'a mut Vec<Embedding>) -> Self {
        let mut side_mask = [Bits::new(host.n()), Bits::new(host.n())];
        for v in 0..host.n() {
            side_mask[(host.side(v) == Side::Y) as usize].set(v);
        }
        Search {
            host,
            pattern,
            swapped,
            limit,
            out,
            order: pattern_order(pattern),
            side_mask,
            map: vec![usize::MAX; pattern.n()],
            used: Bits::new(host.n()),
        }
    }

    fn run(&mut self) {
        self.extend(0);
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.out.len() >= l)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.out.push(Embedding { mapping: self.map.clone(), side_swapped: self.swapped });
            return self.done();
        }
        let p = self.order[depth];
        let want = if self.swapped { self.pattern.side(p).other() } else { self.pattern.side(p) };
        let mut cand = self.side_mask[(want == Side::Y) as usize].clone();
        cand.and_not_with(&self.used);
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            if self.pattern.side(q) == self.pattern.side(p) {
                continue;
            }
            if self.pattern.adjacent(p, q) {
                cand.and_with(self.host.row(hq));
            } else {
                cand.and_not_with(self.host.row(hq));
            }
        }
        let need = self.pattern.degree(p);
        for h in cand.iter().collect::<Vec<_>>() {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[p] = h;
            self.used.set(h);
            let stop = self.extend(depth + 1);
            self.used.clear(h);
            self.map[p] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Highest degree first, then greedily the vertex with most placed
/// neighbours (ties by degree, then index).
fn pattern_order(p: &Bigraph) -> Vec<usize> {
    let n = p.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = p.neighbors_of(v).iter().filter(|&&w| placed[w]).count();
                (links, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}
