//! Systems of difference constraints `x[hi] - x[lo] <= bound`, some strict.
//!
//! Strictness is carried as a second lexicographic weight: a strict edge
//! costs `(bound, -1)`. Bellman-Ford on these pairs finds the potentials
//! `(a, s)`, and `x = a + eps * s` for a small enough positive `eps` turns
//! every strict edge that is tight in `a` into a strict inequality.

use num_traits::{Signed, Zero};

use crate::interval::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceConstraint {
    pub hi: usize,
    pub lo: usize,
    pub bound: Rational,
    pub strict: bool,
}

impl DifferenceConstraint {
    pub fn new(hi: usize, lo: usize, bound: Rational, strict: bool) -> Self {
        DifferenceConstraint { hi, lo, bound, strict }
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let d = &x[self.hi] - &x[self.lo];
        if self.strict {
            d < self.bound
        } else {
            d <= self.bound
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Lex {
    a: Rational,
    s: i64,
}

/// Values for `n` variables satisfying every constraint, or `None` when the
/// system is infeasible.
pub fn solve_difference_constraints(cs: &[DifferenceConstraint], n: usize) -> Option<Vec<Rational>> {
    for c in cs {
        assert!(c.hi < n && c.lo < n, "constraint on unknown variable");
        if c.hi == c.lo && (c.bound.is_negative() || (c.bound.is_zero() && c.strict)) {
            return None;
        }
    }
    let mut dist: Vec<Lex> = vec![Lex { a: Rational::zero(), s: 0 }; n];
    let mut changed = true;
    let mut rounds = 0;
    while changed {
        changed = false;
        rounds += 1;
        if rounds > n + 1 {
            return None;
        }
        for c in cs {
            let cand = Lex { a: &dist[c.lo].a + &c.bound, s: dist[c.lo].s - c.strict as i64 };
            if cand < dist[c.hi] {
                dist[c.hi] = cand;
                changed = true;
            }
        }
    }
    // eps must stay below every positive slack divided by the spread of s.
    let mut min_slack: Option<Rational> = None;
    for c in cs {
        let slack = &c.bound - (&dist[c.hi].a - &dist[c.lo].a);
        if slack.is_positive() && min_slack.as_ref().is_none_or(|m| &slack < m) {
            min_slack = Some(slack);
        }
    }
    let eps = match min_slack {
        Some(d) => d / int(n as i64 + 1),
        None => int(1),
    };
    let x: Vec<Rational> = dist.iter().map(|d| &d.a + &eps * int(d.s)).collect();
    debug_assert!(cs.iter().all(|c| c.holds(&x)));
    Some(x)
}

/// True when `x` satisfies every constraint.
pub fn satisfies(cs: &[DifferenceConstraint], x: &[Rational]) -> bool {
    cs.iter().all(|c| c.holds(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(hi: usize, lo: usize, b: i64, strict: bool) -> DifferenceConstraint {
        DifferenceConstraint::new(hi, lo, int(b), strict)
    }

    #[test]
    fn small_systems() {
        let eq = [c(0, 1, 0, false), c(1, 0, 0, false)];
        let x = solve_difference_constraints(&eq, 2).unwrap();
        assert_eq!(x[0], x[1]);
        assert!(solve_difference_constraints(&[c(0, 1, 0, true), c(1, 0, 0, false)], 2).is_none());
        let forced = [c(0, 1, 1, false), c(1, 0, -1, false)];
        let x = solve_difference_constraints(&forced, 2).unwrap();
        assert_eq!(&x[0] - &x[1], int(1));
    }

    #[test]
    fn strict_chain_fits_in_unit_window() {
        let mut cs: Vec<_> = (0..4).map(|k| c(k, k + 1, 0, true)).collect();
        cs.push(c(4, 0, 1, true));
        let x = solve_difference_constraints(&cs, 5).unwrap();
        assert!(satisfies(&cs, &x));
    }
}
