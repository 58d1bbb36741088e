//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use mubig::diffcon::{solve_difference_constraints, DifferenceConstraint};
use mubig::interval::{int, rat, Interval, Rational};
use mubig::representation::{
    intersection_bigraph, is_mixed_proper, is_mixed_unit, reflect, translate, validate, Representation,
};
use mubig::{Bigraph, Side};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 10_000;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..5).prop_map(|(n, d)| rat(n, d))
}

pub fn arb_interval() -> impl Strategy<Value = Interval> {
    (arb_rational(), 0i64..9, 1i64..5, any::<bool>(), any::<bool>()).prop_map(|(l, n, d, a, b)| {
        let r = &l + rat(n, d);
        // a point needs both ends closed
        let (a, b) = if n == 0 { (true, true) } else { (a, b) };
        Interval::new(l, r, a, b).expect("non-empty")
    })
}

fn arb_unit_interval() -> impl Strategy<Value = Interval> {
    (-8i64..8, 1i64..3, any::<bool>(), any::<bool>())
        .prop_map(|(n, d, a, b)| Interval::new(rat(n, d), rat(n, d) + int(1), a, b).expect("unit"))
}

/// Labelled intervals with a side each; unit lengths when `unit` is set.
pub fn arb_sided_rep(max: usize) -> impl Strategy<Value = Vec<(Side, Interval)>> {
    let side = prop_oneof![Just(Side::X), Just(Side::Y)];
    let iv = prop_oneof![arb_interval(), arb_unit_interval()];
    proptest::collection::vec((side, iv), 1..=max)
}

pub fn build(items: &[(Side, Interval)]) -> (Representation, Vec<(String, Side)>) {
    let mut rep = Representation::new();
    let mut sides = Vec::new();
    for (k, (s, iv)) in items.iter().enumerate() {
        let label = format!("v{k}");
        rep.insert(&label, iv.clone());
        sides.push((label, *s));
    }
    (rep, sides)
}

pub fn graph_of(rep: &Representation, sides: &[(String, Side)]) -> Bigraph {
    intersection_bigraph(rep, &|l: &str| sides.iter().find(|(m, _)| m == l).map(|(_, s)| *s))
}

/// Intersection decided by sampling every end point and every midpoint
/// between consecutive ends.
fn intersects_by_points(a: &Interval, b: &Interval) -> bool {
    let mut pts = [a.l.clone(), a.r.clone(), b.l.clone(), b.r.clone()];
    pts.sort();
    let mids: Vec<Rational> = pts.windows(2).map(|w| (&w[0] + &w[1]) / int(2)).collect();
    let contains = |i: &Interval, p: &Rational| {
        (i.l < *p || (i.l == *p && i.left_closed)) && (*p < i.r || (*p == i.r && i.right_closed))
    };
    pts.iter().chain(&mids).any(|p| contains(a, p) && contains(b, p))
}

pub fn intersection_laws(a: &Interval, b: &Interval) -> Result<(), TestCaseError> {
    prop_assert!(a.intersects(a));
    prop_assert_eq!(a.intersects(b), b.intersects(a));
    prop_assert_eq!(a.intersects(b), intersects_by_points(a, b));
    Ok(())
}

/// A random graph on the same labels, so validity is sometimes false.
pub fn arb_case(max: usize) -> impl Strategy<Value = (Vec<(Side, Interval)>, Vec<bool>, bool)> {
    arb_sided_rep(max).prop_flat_map(|items| {
        let n = items.len();
        (Just(items), proptest::collection::vec(any::<bool>(), n * n), any::<bool>())
    })
}

fn graph_from_bits(sides: &[(String, Side)], bits: &[bool]) -> Bigraph {
    let mut g = Bigraph::new();
    for (l, s) in sides {
        g.add_vertex(l, *s).unwrap();
    }
    let n = sides.len();
    for a in 0..n {
        for b in a + 1..n {
            if sides[a].1 != sides[b].1 && bits[a * n + b] {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

fn relabel(g: &Bigraph, rep: &Representation) -> (Bigraph, Representation) {
    let name = |l: &str| format!("w_{l}");
    let mut h = Bigraph::new();
    for v in 0..g.n() {
        h.add_vertex(&name(g.label(v)), g.side(v)).unwrap();
    }
    for (a, b) in g.edges() {
        h.add_edge(a, b).unwrap();
    }
    let mut r = Representation::new();
    for (l, iv) in rep.iter() {
        r.insert(&name(l), iv.clone());
    }
    (h, r)
}

pub fn trivial_modifications(items: &[(Side, Interval)], bits: &[bool], own: bool, t: &Rational) -> Result<(), TestCaseError> {
    let (rep, sides) = build(items);
    let g = if own { graph_of(&rep, &sides) } else { graph_from_bits(&sides, bits) };
    let key = |g: &Bigraph, r: &Representation| (validate(g, r).unwrap().valid, is_mixed_unit(r), is_mixed_proper(r));
    let base = key(&g, &rep);
    prop_assert_eq!(key(&g, &translate(&rep, t)), base);
    prop_assert_eq!(key(&g, &reflect(&rep)), base);
    let (h, r) = relabel(&g, &rep);
    prop_assert_eq!(key(&h, &r), base);
    Ok(())
}

pub fn round_trip(items: &[(Side, Interval)]) -> Result<(), TestCaseError> {
    let (rep, sides) = build(items);
    let g = graph_of(&rep, &sides);
    let report = validate(&g, &rep).unwrap();
    prop_assert!(report.valid);
    let text = rep.to_text();
    prop_assert_eq!(Representation::parse(&text).unwrap(), rep);
    prop_assert!(Bigraph::parse(&g.to_text()).unwrap().same_labelled(&g));
    Ok(())
}

/// Difference systems on up to five variables with bounds in {-1, 0, 1}.
pub fn arb_system() -> impl Strategy<Value = (usize, Vec<(usize, usize, i64, bool)>)> {
    (1usize..=5).prop_flat_map(|n| {
        let c = (0..n, 0..n, -1i64..=1, any::<bool>());
        (Just(n), proptest::collection::vec(c, 0..=2 * n + 2))
    })
}

/// Exhaustive search over the grid of step `1/(n+1)` on `[-n, n]`, one
/// variable per connected part pinned at 0. Values are kept as integers
/// scaled by `n + 1`.
pub fn grid_feasible(n: usize, cs: &[(usize, usize, i64, bool)]) -> bool {
    let k = n as i64 + 1;
    let span = n as i64 * k;
    // parts of the constraint graph, visited in breadth-first order
    let mut order = Vec::new();
    let mut pinned = vec![false; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        pinned[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(a, b, _, _) in cs {
                for (p, q) in [(a, b), (b, a)] {
                    if p == v && !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    let holds = |x: &[Option<i64>], &(hi, lo, b, strict): &(usize, usize, i64, bool)| match (x[hi], x[lo]) {
        (Some(p), Some(q)) => {
            if strict {
                p - q < b * k
            } else {
                p - q <= b * k
            }
        }
        _ => true,
    };
    fn go(
        i: usize,
        order: &[usize],
        pinned: &[bool],
        x: &mut [Option<i64>],
        span: i64,
        cs: &[(usize, usize, i64, bool)],
        holds: &dyn Fn(&[Option<i64>], &(usize, usize, i64, bool)) -> bool,
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        let range: Vec<i64> = if pinned[v] { vec![0] } else { (-span..=span).collect() };
        for val in range {
            x[v] = Some(val);
            if cs.iter().filter(|c| c.0 == v || c.1 == v).all(|c| holds(x, c)) && go(i + 1, order, pinned, x, span, cs, holds) {
                return true;
            }
        }
        x[v] = None;
        false
    }
    let mut x = vec![None; n];
    go(0, &order, &pinned, &mut x, span, cs, &holds)
}

pub fn solver_matches_grid(n: usize, cs: &[(usize, usize, i64, bool)]) -> Result<(), TestCaseError> {
    let sys: Vec<DifferenceConstraint> =
        cs.iter().map(|&(hi, lo, b, strict)| DifferenceConstraint::new(hi, lo, int(b), strict)).collect();
    let got = solve_difference_constraints(&sys, n);
    if let Some(x) = &got {
        prop_assert!(sys.iter().all(|c| c.holds(x)));
    }
    prop_assert_eq!(got.is_some(), grid_feasible(n, cs));
    Ok(())
}
