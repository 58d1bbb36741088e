//! Worked examples for each module, plus hand transcriptions of the figures
//! checked against the generators.

use std::fs;
use std::path::Path;

use mubig::closed::{bad_pair_counts, min_bad_pair_representation, recognize_interval_closed};
use mubig::diffcon::{solve_difference_constraints, DifferenceConstraint};
use mubig::embed::{contains_induced, induced_subgraph_search};
use mubig::families::{forbidden_catalog_ids, generate, tilde_of, Family, FamilyId};
use mubig::fixtures::{fixture, FixtureId};
use mubig::interval::{int, rat, Interval, IntervalClass};
use mubig::recognize::{recognize_mixed_unit, Budget, Status};
use mubig::render::ascii;
use mubig::repair::{claim1_witnesses, extract_structure, finish_clean, repair, rewrite_left, rewrite_right, RepairError};
use mubig::representation::{
    intersection_bigraph, is_almost_proper, is_mixed_proper, is_mixed_unit, is_valid, list_bad_pairs, reflect,
    validate, BadPair, Representation,
};
use mubig::{enumerate_connected_bipartite, is_isomorphic, Bigraph, Side};

fn cc(l: i64, r: i64) -> Interval {
    Interval::closed(int(l), int(r))
}

fn iv(l: i64, r: i64, class: IntervalClass) -> Interval {
    Interval::with_class(int(l), int(r), class).unwrap()
}

fn rep_of(rows: &[(&str, Interval)]) -> Representation {
    let mut rep = Representation::new();
    for (l, i) in rows {
        rep.insert(l, i.clone());
    }
    rep
}

fn path(n: usize) -> Bigraph {
    let mut g = Bigraph::new();
    for k in 0..n {
        g.add_vertex(&format!("v{k}"), if k % 2 == 0 { Side::X } else { Side::Y }).unwrap();
    }
    for k in 1..n {
        g.add_edge(k - 1, k).unwrap();
    }
    g
}

fn cycle(n: usize) -> Bigraph {
    let mut g = path(n);
    g.add_edge(0, n - 1).unwrap();
    g
}

fn star_pendant() -> (Bigraph, Representation) {
    let g = Bigraph::from_parts(
        &["x", "x'"],
        &["y_1", "y_2", "y_3"],
        &[("x", "y_1"), ("x", "y_2"), ("x", "y_3"), ("x'", "y_2")],
    )
    .unwrap();
    let rep = rep_of(&[
        ("y_1", cc(0, 1)),
        ("y_2", cc(2, 3)),
        ("y_3", cc(4, 5)),
        ("x", cc(1, 4)),
        ("x'", Interval::closed(rat(21, 10), rat(29, 10))),
    ]);
    (g, rep)
}

fn plain(f: Family) -> Bigraph {
    generate(FamilyId::plain(f)).unwrap()
}

#[test]
fn neighbourhoods_and_copies() {
    let h2 = plain(Family::H2);
    let mut n = h2.neighbors("y_1").unwrap();
    n.sort();
    assert_eq!(n, ["x_1", "x_2", "x_3"]);
    assert!(h2.neighbors("nope").is_err());
    let k22 = Bigraph::from_parts(&["a", "b"], &["c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap();
    assert_eq!(k22.find_copies().len(), 2);
    assert!(plain(Family::H1).find_copies().is_empty());
    let cherry = Bigraph::from_parts(&["c"], &["p", "q"], &[("c", "p"), ("c", "q")]).unwrap();
    assert_eq!(cherry.find_copies(), vec![(1, 2)]);
}

#[test]
fn embeddings_between_small_named_graphs() {
    let (f1, h1, h2) = (plain(Family::F(1)), plain(Family::H1), plain(Family::H2));
    let found = induced_subgraph_search(&f1, &h1, Some(1));
    assert_eq!(found.len(), 1);
    assert!(found[0].is_valid(&f1, &h1));
    assert!(contains_induced(&h2, &h2));
    assert!(induced_subgraph_search(&h1, &h2, None).is_empty());
}

#[test]
fn small_graph_counts() {
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_connected_bipartite(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 6]);
}

#[test]
fn interval_examples() {
    assert!(cc(0, 1).intersects(&cc(1, 2)));
    assert!(!iv(0, 1, IntervalClass::CO).intersects(&cc(1, 2)));
    assert!(iv(1, 2, IntervalClass::OO).intersects(&cc(1, 2)));
    assert!(!iv(1, 2, IntervalClass::OO).intersects(&cc(0, 1)));
    assert!(Interval::closed(rat(-1, 2), rat(1, 2)).is_unit());
    assert!(!cc(0, 2).is_unit());
    assert!(iv(0, 1, IntervalClass::OO).is_unit());
    assert_eq!(iv(0, 1, IntervalClass::CO).translate(&int(2)), iv(2, 3, IntervalClass::CO));
    assert_eq!(iv(0, 1, IntervalClass::CO).reflect(), iv(-1, 0, IntervalClass::OC));
}

#[test]
fn validation_and_predicates() {
    let (h1, h1_rep) = fixture(FixtureId::H1Fig2).unwrap();
    assert!(is_valid(&h1, &h1_rep));
    assert!(is_mixed_unit(&h1_rep));
    assert!(is_almost_proper(&h1_rep));
    let (f6, f6_rep) = fixture(FixtureId::F6Fig6).unwrap();
    assert!(is_valid(&f6, &f6_rep));
    let (k, k_rep) = fixture(FixtureId::Kp(1, 1)).unwrap();
    assert!(is_valid(&k, &k_rep) && is_mixed_unit(&k_rep));

    let edge = Bigraph::from_parts(&["a"], &["b"], &[("a", "b")]).unwrap();
    let report = validate(&edge, &rep_of(&[("a", cc(0, 1)), ("b", cc(2, 3))])).unwrap();
    assert!(!report.valid);
    assert_eq!(report.missing_edges, vec![("a".to_string(), "b".to_string())]);
    assert!(validate(&edge, &rep_of(&[("a", cc(0, 1))])).is_err());

    assert!(!is_mixed_unit(&rep_of(&[("u", cc(0, 2))])));
    let nested = rep_of(&[("u", cc(0, 2)), ("v", Interval::closed(rat(1, 2), int(1)))]);
    assert!(!is_mixed_proper(&nested));
    assert!(!is_mixed_proper(&rep_of(&[("u", iv(0, 1, IntervalClass::OO))])));
    assert!(!is_almost_proper(&rep_of(&[("u", iv(0, 1, IntervalClass::CO)), ("v", cc(0, 1))])));
    assert!(is_almost_proper(&Representation::new()));
}

#[test]
fn bad_pair_listing() {
    let pairs = list_bad_pairs(&rep_of(&[("u", cc(2, 3)), ("v", cc(1, 4))]));
    assert_eq!(pairs, vec![BadPair { inner: "u".into(), outer: "v".into() }]);
    let units = rep_of(&[("a", cc(0, 1)), ("b", Interval::closed(rat(1, 2), rat(3, 2))), ("c", cc(2, 3))]);
    assert!(list_bad_pairs(&units).is_empty());
    // y_2 also sits inside x, and x' inside y_2
    let (_, rep) = star_pendant();
    let mut got: Vec<(String, String)> = list_bad_pairs(&rep).into_iter().map(|b| (b.inner, b.outer)).collect();
    got.sort();
    let want = [("x'", "x"), ("x'", "y_2"), ("y_2", "x")].map(|(a, b)| (a.to_string(), b.to_string()));
    assert_eq!(got, want);
}

#[test]
fn intersection_graphs_of_tables() {
    let (h2, rep) = fixture(FixtureId::H2Fig3I).unwrap();
    let side = |l: &str| h2.vertex(l).map(|v| h2.side(v));
    assert!(is_isomorphic(&intersection_bigraph(&rep, &side), &plain(Family::H2)));
    let (q, rep) = fixture(FixtureId::Qp(1)).unwrap();
    let side = |l: &str| q.vertex(l).map(|v| q.side(v));
    assert!(intersection_bigraph(&rep, &side).same_labelled(&generate(FamilyId::primed(Family::Q(1))).unwrap()));
    let apart = rep_of(&[("a", cc(0, 1)), ("b", cc(2, 3))]);
    let g = intersection_bigraph(&apart, &|l: &str| Some(if l == "a" { Side::X } else { Side::Y }));
    assert_eq!((g.n(), g.edge_count()), (2, 0));
}

#[test]
fn generator_sizes() {
    let h2 = plain(Family::H2);
    assert_eq!(h2.n(), 7);
    // the drawing has seven edges
    assert_eq!(h2.edge_count(), 7);
    let b0 = plain(Family::B0);
    assert_eq!((b0.n(), b0.edge_count()), (6, 6));
    let (kp, table) = fixture(FixtureId::Kp(1, 1)).unwrap();
    let mut labels: Vec<&str> = table.iter().map(|(l, _)| l).collect();
    labels.sort();
    let mut names: Vec<&str> = kp.labels().iter().map(String::as_str).collect();
    names.sort();
    assert_eq!(labels, names);
    assert!(kp.same_labelled(&generate(FamilyId::primed(Family::Kfam(1, 1))).unwrap()));
}

#[test]
fn pinned_pendants_are_copies() {
    for f in [Family::P(1), Family::Q(1), Family::R(1), Family::S(1), Family::Kfam(1, 1)] {
        let g = generate(FamilyId::primed(f)).unwrap();
        let pair = (g.vertex("v'").unwrap(), g.vertex("v''").unwrap());
        assert!(g.find_copies().contains(&(pair.0.min(pair.1), pair.0.max(pair.1))), "{f:?}");
    }
}

#[test]
fn tilde_constructions() {
    let sp = generate(FamilyId::primed(Family::S(1))).unwrap();
    let st = generate(FamilyId::tilde(Family::S(1))).unwrap();
    assert_eq!(st.n(), sp.n() - 2 + 5);
    assert!(st.same_labelled(&tilde_of(&sp).unwrap()));
    assert!(generate(FamilyId::tilde(Family::Kfam(1, 1))).is_ok());
    assert!(generate(FamilyId::tilde(Family::L(1, 1))).is_err());
}

#[test]
fn vertex_counts_grow_with_parameters() {
    use Family::*;
    let n = |f: Family| plain(f).n();
    for i in 1..4 {
        for f in [|i| P(i), |i| Q(i), |i| R(i), |i| S(i), |i| Mfam(i), |i| N(i), |i| Hp(i)] {
            assert!(n(f(i)) < n(f(i + 1)));
        }
        for j in 1..4 {
            for f in [|i, j| Kfam(i, j), |i, j| T(i, j), |i, j| L(i, j)] {
                assert!(n(f(i, j)) < n(f(i + 1, j)));
                assert!(n(f(i, j)) < n(f(i, j + 1)));
            }
        }
    }
}

#[test]
fn catalog_bounds() {
    assert!(forbidden_catalog_ids(0).is_empty());
    let small = forbidden_catalog_ids(8);
    assert!(!small.is_empty());
    assert!(small.iter().all(|(_, g)| g.n() <= 8));
    let mut codes: Vec<_> = small.iter().map(|(_, g)| mubig::canonical_form(g)).collect();
    let before = codes.len();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), before, "catalog members are pairwise non-isomorphic");
}

#[test]
fn difference_constraint_examples() {
    let c = |hi, lo, b, strict| DifferenceConstraint::new(hi, lo, int(b), strict);
    let x = solve_difference_constraints(&[c(0, 1, 0, false), c(1, 0, 0, false)], 2).unwrap();
    assert_eq!(x[0], x[1]);
    assert!(solve_difference_constraints(&[c(0, 1, 0, true), c(1, 0, 0, false)], 2).is_none());
    let x = solve_difference_constraints(&[c(0, 1, 1, false), c(1, 0, -1, false)], 2).unwrap();
    assert_eq!(&x[0] - &x[1], int(1));
}

#[test]
fn recognizer_examples() {
    let budget = Budget::unlimited();
    let out = recognize_mixed_unit(&plain(Family::H1), &budget, true);
    assert_eq!(out.status, Status::Sat);
    assert!(is_valid(&plain(Family::H1), out.witness.as_ref().unwrap()));
    assert_eq!(recognize_mixed_unit(&plain(Family::B1), &budget, true).status, Status::Unsat);
    assert_eq!(recognize_mixed_unit(&path(4), &budget, true).status, Status::Sat);
    assert_eq!(recognize_mixed_unit(&plain(Family::K), &budget, true).status, Status::Unsat);
    assert_eq!(recognize_mixed_unit(&plain(Family::K), &Budget::nodes(1), true).status, Status::BudgetExceeded);
}

#[test]
fn recognizer_ignores_side_names_and_is_deterministic() {
    let budget = Budget::unlimited();
    for g in enumerate_connected_bipartite(7) {
        let a = recognize_mixed_unit(&g, &budget, true);
        let b = recognize_mixed_unit(&g.swap_sides(), &budget, true);
        assert_eq!(a.status, b.status);
        let again = recognize_mixed_unit(&g, &budget, true);
        assert_eq!(a.witness, again.witness);
    }
}

#[test]
fn induced_subgraphs_of_sat_graphs_are_sat() {
    let budget = Budget::unlimited();
    for g in enumerate_connected_bipartite(7) {
        if recognize_mixed_unit(&g, &budget, true).status != Status::Sat {
            continue;
        }
        for v in 0..g.n() {
            let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
            let h = g.induced(&keep);
            assert_eq!(recognize_mixed_unit(&h, &budget, true).status, Status::Sat, "{}", h.to_text());
        }
    }
}

#[test]
fn closed_search_examples() {
    let star = Bigraph::from_parts(&["c"], &["a", "b", "d"], &[("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
    let rep = recognize_interval_closed(&star).unwrap().unwrap();
    assert!(is_valid(&star, &rep) && rep.iter().all(|(_, i)| i.is_closed()));
    // the six-cycle has no closed-interval model
    assert!(recognize_interval_closed(&cycle(6)).unwrap().is_none());
    assert!(recognize_interval_closed(&cycle(8)).unwrap().is_none());

    let unit = path(5);
    let rep = min_bad_pair_representation(&unit).unwrap().unwrap();
    assert!(list_bad_pairs(&rep).is_empty());
    // the star with a pendant is a unit interval bigraph
    let (g, _) = star_pendant();
    let rep = min_bad_pair_representation(&g).unwrap().unwrap();
    assert_eq!(bad_pair_counts(&g, &rep).0, 0);
    let apart = Bigraph::from_parts(&["a"], &["b"], &[]).unwrap();
    let rep = min_bad_pair_representation(&apart).unwrap().unwrap();
    assert!(list_bad_pairs(&rep).is_empty());
}

#[test]
fn repair_walkthrough() {
    let (g, rep) = star_pendant();
    let p = BadPair { inner: "x'".into(), outer: "x".into() };
    assert_eq!(claim1_witnesses(&g, &rep, &p).unwrap(), ("y_1".to_string(), "y_3".to_string()));
    let s = extract_structure(&g, &rep, &p).unwrap();
    assert_eq!((s.k_r(), s.k_l()), (1, 1));
    let r = rewrite_right(&g, &rep, &s).unwrap();
    assert!(is_valid(&g, &r));
    let r = rewrite_left(&g, &r, &s).unwrap();
    assert!(is_valid(&g, &r));
    let done = finish_clean(&g, &r, &p).unwrap();
    assert_eq!(done.get("x'"), Some(&iv(1, 4, IntervalClass::OO)));
    // repair also clears the pairs that y_2 takes part in
    let out = repair(&g, &rep, false).unwrap();
    assert!(is_valid(&g, &out.rep) && is_mixed_proper(&out.rep));
    assert_eq!(out.rep.get("x'"), Some(&iv(1, 4, IntervalClass::OO)));
    assert!(list_bad_pairs(&out.rep).is_empty());

    // a unit model has nothing to repair
    let units = rep_of(&[("v0", cc(0, 1)), ("v1", cc(1, 2)), ("v2", cc(2, 3))]);
    let p3 = path(3);
    assert!(matches!(
        claim1_witnesses(&p3, &units, &BadPair { inner: "v0".into(), outer: "v1".into() }),
        Err(RepairError::NotABadPair(_))
    ));
    assert_eq!(repair(&p3, &units, false).unwrap().rep, units);
}

#[test]
fn layer_rewrite_formulas() {
    // x holds x'; y_1 and y_2 interleave to its right, y_2 has its own
    // private neighbour to close the chain
    let g = Bigraph::from_parts(
        &["x", "x'", "w"],
        &["y_0", "y_1", "y_2", "y_3"],
        &[("x", "y_0"), ("x", "y_1"), ("x", "y_2"), ("x", "y_3"), ("x'", "y_3"), ("w", "y_2")],
    )
    .unwrap();
    let rep = rep_of(&[
        ("y_0", cc(-1, 0)),
        ("x", cc(0, 4)),
        ("x'", cc(1, 2)),
        ("y_3", Interval::closed(rat(3, 2), rat(5, 2))),
        ("y_1", cc(3, 5)),
        ("y_2", Interval::closed(rat(7, 2), int(6))),
        ("w", Interval::closed(rat(11, 2), int(7))),
    ]);
    assert!(is_valid(&g, &rep));
    let p = BadPair { inner: "x'".into(), outer: "x".into() };
    let s = extract_structure(&g, &rep, &p).unwrap();
    assert_eq!(s.right_layers[0], vec!["y_1".to_string(), "y_2".to_string()]);
    let r = rewrite_right(&g, &rep, &s).unwrap();
    assert_eq!(r.get("y_2"), Some(&cc(4, 6)));
    assert_eq!(r.get("y_1"), Some(&iv(4, 6, IntervalClass::CO)));

    // the mirror image gives the left-open copy
    let m = reflect(&rep);
    let s = extract_structure(&g, &m, &p).unwrap();
    assert_eq!(s.left_layers[0], vec!["y_1".to_string(), "y_2".to_string()]);
    let r = rewrite_left(&g, &m, &s).unwrap();
    assert_eq!(r.get("y_2"), Some(&cc(-6, -4)));
    assert_eq!(r.get("y_1"), Some(&iv(-6, -4, IntervalClass::OC)));
}

#[test]
fn unclean_pair_is_refused() {
    // y_1 runs into the inside of x, so the open copy would meet it
    let (g, mut rep) = star_pendant();
    rep.insert("x", cc(0, 4));
    assert!(is_valid(&g, &rep));
    let p = BadPair { inner: "x'".into(), outer: "x".into() };
    assert!(matches!(finish_clean(&g, &rep, &p), Err(RepairError::NotClean(_))));
}

#[test]
fn rendering_rows() {
    let text = ascii(&rep_of(&[("a", cc(0, 1))]), 8);
    assert!(text.starts_with("a [======]"));
    let text = ascii(&rep_of(&[("a", iv(0, 1, IntervalClass::OO))]), 8);
    assert!(text.starts_with("a (======)"));
    let (_, rep) = fixture(FixtureId::H1Fig2).unwrap();
    assert_eq!(ascii(&rep, 40).lines().count(), rep.len());
}

fn family_for(stem: &str) -> Option<FamilyId> {
    use Family::*;
    let parts: Vec<&str> = stem.split('_').collect();
    let num = |k: usize| parts.get(k).and_then(|t| t.parse::<usize>().ok());
    let fixed = match parts[0] {
        "H0" => Some(H0),
        "H1" => Some(H1),
        "H2" => Some(H2),
        "H3" => Some(H3),
        "B0" => Some(B0),
        "B1" => Some(B1),
        "B2" => Some(B2),
        "K" if parts.len() == 1 || num(1).is_none() => Some(K),
        "M" => Some(M),
        f if f.starts_with('F') && f.len() > 1 => f[1..].parse().ok().map(F),
        _ => None,
    };
    if let Some(f) = fixed {
        return Some(FamilyId::plain(f));
    }
    let (i, j) = (num(1)?, num(2));
    let id = match parts[0] {
        "K" => FamilyId::plain(Kfam(i, j?)),
        "Kp" => FamilyId::primed(Kfam(i, j?)),
        "T" => FamilyId::plain(T(i, j?)),
        "Tp" => FamilyId::primed(T(i, j?)),
        "L" => FamilyId::plain(L(i, j?)),
        "P" => FamilyId::plain(P(i)),
        "Pp" => FamilyId::primed(P(i)),
        "Q" => FamilyId::plain(Q(i)),
        "Qp" => FamilyId::primed(Q(i)),
        "R" => FamilyId::plain(R(i)),
        "Rp" => FamilyId::primed(R(i)),
        "S" => FamilyId::plain(S(i)),
        "Sp" => FamilyId::primed(S(i)),
        "Mfam" => FamilyId::plain(Mfam(i)),
        "N" => FamilyId::plain(N(i)),
        "Hp" => FamilyId::plain(Hp(i)),
        _ => return None,
    };
    Some(id)
}

#[test]
fn figure_transcriptions_match_generators() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/figs");
    let mut checked = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let p = entry.unwrap().path();
        let stem = p.file_stem().unwrap().to_str().unwrap().to_string();
        let id = family_for(&stem).unwrap_or_else(|| panic!("no family for {stem}"));
        let drawn = Bigraph::parse(&fs::read_to_string(&p).unwrap()).unwrap();
        let made = generate(id).unwrap();
        if stem.ends_with("_labelled") {
            assert!(drawn.same_labelled(&made), "{stem}");
        } else {
            assert!(is_isomorphic(&drawn, &made), "{stem}");
        }
        checked += 1;
    }
    assert!(checked >= 50);
}
