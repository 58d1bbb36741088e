mod common;

use common::*;
use mubig::interval::rat;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn intersection_is_symmetric_and_reflexive(a in arb_interval(), b in arb_interval()) {
        intersection_laws(&a, &b)?;
    }

    #[test]
    fn trivial_modifications_preserve_predicates(
        (items, bits, own) in arb_case(7),
        n in -20i64..20,
        d in 1i64..6,
    ) {
        trivial_modifications(&items, &bits, own, &rat(n, d))?;
    }

    #[test]
    fn difference_solver_matches_grid((n, cs) in arb_system()) {
        solver_matches_grid(n, &cs)?;
    }

    #[test]
    fn intersection_graph_round_trips(items in arb_sided_rep(9)) {
        round_trip(&items)?;
    }
}
