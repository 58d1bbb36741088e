//! Interval tables for the small graphs and the pinned families.
//!
//! Each fixture pairs the generated graph with its interval table. Where a
//! table allows a choice of ends, `Variant::Closed` picks the closed one and
//! `Variant::HalfOpen` the other.

use std::fmt;
use std::str::FromStr;

use crate::bigraph::Bigraph;
use crate::families::{generate, Family, FamilyError, FamilyId};
use crate::interval::{int, rat, Interval, Rational};
use crate::representation::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixtureId {
    H1Fig2,
    H2Fig3I,
    H2Fig3Ii,
    H3Fig4I,
    H3Fig4Ii,
    F6Fig6,
    F1Fig25,
    Kp(usize, usize),
    Pp(usize),
    Tp(usize, usize),
    Qp(usize),
    Sp(usize),
    Rp(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    #[default]
    Closed,
    HalfOpen,
}

impl FixtureId {
    pub const FIXED: [FixtureId; 7] = [
        FixtureId::H1Fig2,
        FixtureId::H2Fig3I,
        FixtureId::H2Fig3Ii,
        FixtureId::H3Fig4I,
        FixtureId::H3Fig4Ii,
        FixtureId::F6Fig6,
        FixtureId::F1Fig25,
    ];

    /// The graph this table represents.
    pub fn family(&self) -> FamilyId {
        match *self {
            FixtureId::H1Fig2 => FamilyId::plain(Family::H1),
            FixtureId::H2Fig3I | FixtureId::H2Fig3Ii => FamilyId::plain(Family::H2),
            FixtureId::H3Fig4I | FixtureId::H3Fig4Ii => FamilyId::plain(Family::H3),
            FixtureId::F6Fig6 => FamilyId::plain(Family::F(6)),
            FixtureId::F1Fig25 => FamilyId::plain(Family::F(1)),
            FixtureId::Kp(i, j) => FamilyId::primed(Family::Kfam(i, j)),
            FixtureId::Pp(i) => FamilyId::primed(Family::P(i)),
            FixtureId::Tp(i, j) => FamilyId::primed(Family::T(i, j)),
            FixtureId::Qp(i) => FamilyId::primed(Family::Q(i)),
            FixtureId::Sp(i) => FamilyId::primed(Family::S(i)),
            FixtureId::Rp(i) => FamilyId::primed(Family::R(i)),
        }
    }

    /// True when the table has an alternative interval choice.
    pub fn has_variants(&self) -> bool {
        matches!(self, FixtureId::Kp(..) | FixtureId::Pp(_) | FixtureId::Qp(_) | FixtureId::Sp(_) | FixtureId::Rp(_))
    }

    /// Primed fixtures with all parameters in `1..=max`.
    pub fn primed_up_to(max: usize) -> Vec<FixtureId> {
        let mut out = Vec::new();
        for i in 1..=max {
            for j in 1..=max {
                out.push(FixtureId::Kp(i, j));
                out.push(FixtureId::Tp(i, j));
            }
            out.extend([FixtureId::Pp(i), FixtureId::Qp(i), FixtureId::Sp(i), FixtureId::Rp(i)]);
        }
        out
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::H1Fig2 => f.write_str("H1_fig2"),
            FixtureId::H2Fig3I => f.write_str("H2_fig3_i"),
            FixtureId::H2Fig3Ii => f.write_str("H2_fig3_ii"),
            FixtureId::H3Fig4I => f.write_str("H3_fig4_i"),
            FixtureId::H3Fig4Ii => f.write_str("H3_fig4_ii"),
            FixtureId::F6Fig6 => f.write_str("F6_fig6"),
            FixtureId::F1Fig25 => f.write_str("F1_fig25"),
            FixtureId::Kp(i, j) => write!(f, "Kp({i},{j})"),
            FixtureId::Pp(i) => write!(f, "Pp({i})"),
            FixtureId::Tp(i, j) => write!(f, "Tp({i},{j})"),
            FixtureId::Qp(i) => write!(f, "Qp({i})"),
            FixtureId::Sp(i) => write!(f, "Sp({i})"),
            FixtureId::Rp(i) => write!(f, "Rp({i})"),
        }
    }
}

impl FromStr for FixtureId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::UnknownName(s.to_string());
        for id in FixtureId::FIXED {
            if id.to_string() == s {
                return Ok(id);
            }
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let ps: Vec<usize> = inner.split(',').map(|p| p.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        if ps.contains(&0) {
            return Err(FamilyError::BadParams(s.to_string(), "parameters start at 1".into()));
        }
        match (head, ps.as_slice()) {
            ("Kp", &[i, j]) => Ok(FixtureId::Kp(i, j)),
            ("Tp", &[i, j]) => Ok(FixtureId::Tp(i, j)),
            ("Pp", &[i]) => Ok(FixtureId::Pp(i)),
            ("Qp", &[i]) => Ok(FixtureId::Qp(i)),
            ("Sp", &[i]) => Ok(FixtureId::Sp(i)),
            ("Rp", &[i]) => Ok(FixtureId::Rp(i)),
            _ => Err(bad()),
        }
    }
}

fn iv(l: Rational, r: Rational, lc: bool, rc: bool) -> Interval {
    Interval::new(l, r, lc, rc).expect("fixture interval")
}

/// Closed unit interval starting at `l`.
fn cu(l: Rational) -> Interval {
    let r = &l + int(1);
    iv(l, r, true, true)
}

fn half(n: i64) -> Rational {
    rat(n, 2)
}

struct Table {
    rep: Representation,
}

impl Table {
    fn new() -> Self {
        Table { rep: Representation::new() }
    }

    fn put(&mut self, label: &str, i: Interval) {
        assert!(self.rep.get(label).is_none(), "label {label} assigned twice");
        self.rep.insert(label, i);
    }

    fn c(&mut self, label: &str, l: Rational, r: Rational) {
        self.put(label, iv(l, r, true, true));
    }

    fn o(&mut self, label: &str, l: Rational, r: Rational) {
        self.put(label, iv(l, r, false, false));
    }
}

fn table_h1() -> Table {
    let mut t = Table::new();
    t.c("y_2", int(6), int(7));
    t.c("y_1", int(5), int(6));
    t.c("y_3", int(7), int(8));
    t.c("x_1", int(4), int(5));
    t.c("x_4", int(6), int(7));
    t.c("x_3", int(8), int(9));
    t.o("x_2", int(6), int(7));
    t
}

fn table_h2_i() -> Table {
    let mut t = Table::new();
    t.c("y_2", int(4), int(5));
    t.c("y_1", int(6), int(7));
    t.c("y_4", int(5), int(6));
    t.c("y_3", int(7), int(8));
    t.c("x_2", int(5), int(6));
    t.c("x_3", int(6), int(7));
    t.o("x_1", int(6), int(7));
    t
}

fn table_h2_ii() -> Table {
    let mut t = Table::new();
    t.c("x_2", int(11), int(12));
    t.c("x_1", int(13), int(14));
    t.c("x_3", half(23), half(25));
    t.c("y_2", int(10), int(11));
    t.c("y_1", int(12), int(13));
    t.c("y_4", half(21), half(23));
    t.o("y_3", int(12), int(13));
    t
}

fn table_h3_i() -> Table {
    let mut t = Table::new();
    t.c("y_1", int(5), int(6));
    t.c("y_2", int(4), int(5));
    t.c("y_3", int(6), int(7));
    t.c("x_2", int(4), int(5));
    t.c("x_3", int(6), int(7));
    t.c("x_4", int(5), int(6));
    t.o("x_1", int(5), int(6));
    t
}

fn table_h3_ii() -> Table {
    let mut t = Table::new();
    t.c("x_4", int(10), int(11));
    t.c("x_2", int(9), int(10));
    t.c("x_3", half(21), half(23));
    t.c("x_1", int(11), int(12));
    t.c("y_2", int(9), int(10));
    t.c("y_1", int(10), int(11));
    t.o("y_3", int(10), int(11));
    t
}

fn table_f6() -> Table {
    let mut t = Table::new();
    t.c("y_5", int(5), int(6));
    t.c("y_3", int(7), int(8));
    t.c("y_1", int(6), int(7));
    t.c("y_4", int(8), int(9));
    t.c("x_2", int(5), int(6));
    t.c("x_3", int(7), int(8));
    t.c("x_5", int(4), int(5));
    t.c("x_4", int(6), int(7));
    t.o("x_1", int(6), int(7));
    t.put("y_2", iv(int(5), int(6), false, true));
    t
}

fn table_f1() -> Table {
    let mut t = Table::new();
    t.c("x_1", int(6), int(7));
    t.c("y_0", int(6), int(7));
    t.c("y_1", int(5), int(6));
    t.c("y_2", int(7), int(8));
    t.c("x_3", int(8), int(9));
    t.c("x_2", int(4), int(5));
    t.put("y_3", iv(int(5), int(6), false, true));
    t.o("x_0", int(6), int(7));
    t
}

fn i64p(p: usize) -> i64 {
    p as i64
}

fn table_kp(i: usize, j: usize, v: Variant) -> Table {
    let alt = v == Variant::HalfOpen;
    let mut t = Table::new();
    t.o("x_0", int(0), int(1));
    t.c("y_0", half(-1), half(1));
    t.c("y", int(-1), int(0));
    // right spine: position p sits at [p, p+1]
    for p in 0..=j {
        let lab = if p == j { "u".to_string() } else { spine0(p, "") };
        t.put(&lab, cu(int(i64p(p))));
    }
    for n in 1..=j as i64 + 1 {
        if 2 * n - 2 < j as i64 {
            t.put(&format!("y_{n}'"), iv(int(2 * n - 1), int(2 * n), true, false));
        }
        if 2 * n - 1 < j as i64 {
            t.put(&format!("x_{n}'"), iv(int(2 * n), int(2 * n + 1), true, false));
        }
    }
    let j1 = j as i64 + 1;
    t.put("v'", iv(int(j1), int(j1 + 1), true, !alt));
    t.put("v''", iv(int(j1), int(j1 + 1), true, !alt));
    // left spine: position p sits at [-p-3/2, -p-1/2]
    for p in 0..=i {
        let lab = if p == i { "z".to_string() } else { spine0(p, "''") };
        let p = i64p(p);
        t.c(&lab, half(-2 * p - 3), half(-2 * p - 1));
    }
    let ii = i as i64;
    for n in 1..=ii + 1 {
        if 2 * n - 2 < ii {
            t.put(&format!("y_{n}'''"), iv(half(-4 * n + 1), half(-4 * n + 3), false, true));
        }
        if 2 * n - 1 < ii {
            t.put(&format!("x_{n}'''"), iv(half(-4 * n - 1), half(-4 * n + 1), false, true));
        }
    }
    t.c("w", half(-2 * ii - 5), half(-2 * ii - 3));
    t.o("w'", half(-2 * ii - 3), half(-2 * ii - 1));
    t.c("z'", half(-2 * ii - 7), half(-2 * ii - 5));
    t.o("z''", half(-2 * ii - 3), half(-2 * ii - 1));
    t
}

fn spine0(p: usize, mark: &str) -> String {
    if p.is_multiple_of(2) {
        format!("x_{}{mark}", p / 2 + 1)
    } else {
        format!("y_{}{mark}", p.div_ceil(2))
    }
}

fn spine1(p: usize, mark: &str) -> String {
    if p % 2 == 1 {
        format!("y_{}{mark}", p.div_ceil(2))
    } else {
        format!("x_{}{mark}", p / 2)
    }
}

/// Spine x_1, y_1, ... at [p+shift, p+shift+1] ending in u, pendants on
/// inner positions, then v' and v'' just right of u.
fn tail0(t: &mut Table, last: usize, shift: i64, pendant: impl Fn(usize) -> (String, Interval), alt: bool) {
    for p in 0..=last {
        let lab = if p == last { "u".to_string() } else { spine0(p, "") };
        t.put(&lab, cu(int(i64p(p) + shift)));
    }
    for p in 0..last {
        let (lab, i) = pendant(p);
        t.put(&lab, i);
    }
    let a = i64p(last) + shift + 1;
    t.put("v'", iv(int(a), int(a + 1), true, !alt));
    t.put("v''", iv(int(a), int(a + 1), true, !alt));
}

fn table_pp(i: usize, v: Variant) -> Table {
    let mut t = Table::new();
    t.o("x_1''", int(0), int(1));
    t.c("y_1''", half(-1), half(1));
    t.c("y_2''", int(-1), int(0));
    t.c("x_3''", int(-1), int(0));
    t.c("y_4''", int(-2), int(-1));
    t.c("x_2''", half(-1), half(1));
    t.c("y_3''", half(-3), half(-1));
    let pend = |p: usize| {
        let n = (p / 2 + 1) as i64;
        if p.is_multiple_of(2) {
            (format!("y_{n}'"), iv(int(2 * n - 1), int(2 * n), true, false))
        } else {
            let n = p.div_ceil(2) as i64;
            (format!("x_{n}'"), iv(int(2 * n), int(2 * n + 1), true, false))
        }
    };
    tail0(&mut t, i - 1, 0, pend, v == Variant::HalfOpen);
    t
}

fn table_qp(i: usize, v: Variant) -> Table {
    let alt = v == Variant::HalfOpen;
    let mut t = Table::new();
    t.o("x_1''", int(-1), int(0));
    t.c("y_1''", int(-1), int(0));
    t.c("x_3''", int(-1), int(0));
    t.put("y_3''", iv(int(-2), int(-1), !alt, true));
    t.c("x_2''", int(0), int(1));
    t.c("y_5''", int(0), int(1));
    t.put("x_5''", iv(int(0), int(1), true, false));
    t.put("y_4''", iv(int(0), int(1), true, false));
    t.c("y_2''", int(1), int(2));
    t.put("x_4''", iv(int(1), int(2), true, false));
    let pend = |p: usize| {
        if p.is_multiple_of(2) {
            let n = (p / 2 + 1) as i64;
            (format!("y_{n}'"), iv(int(2 * n), int(2 * n + 1), true, false))
        } else {
            let n = (p.div_ceil(2) + 1) as i64;
            (format!("x_{n}'"), iv(int(2 * n - 1), int(2 * n), true, false))
        }
    };
    tail0(&mut t, i - 1, 1, pend, alt);
    t
}

fn table_tp(i: usize, j: usize) -> Table {
    let mut t = Table::new();
    t.c("x", int(0), int(1));
    t.o("x_0", int(0), int(1));
    t.o("y_0", int(0), int(1));
    t.put("y", iv(int(-1), int(0), false, true));
    for p in 1..=j {
        let lab = if p == j { "u".to_string() } else { spine1(p, "") };
        t.put(&lab, cu(int(i64p(p))));
    }
    for p in 1..j {
        if p % 2 == 1 {
            let n = p.div_ceil(2) as i64;
            t.put(&format!("x_{n}'"), iv(int(2 * n - 1), int(2 * n), true, false));
        } else {
            let n = (p / 2) as i64;
            t.put(&format!("y_{n}'"), iv(int(2 * n), int(2 * n + 1), true, false));
        }
    }
    let jj = j as i64;
    t.c("v_0", int(jj + 1), int(jj + 2));
    t.put("v_0'", iv(int(jj + 1), int(jj + 2), true, false));
    t.c("u_0", int(jj + 2), int(jj + 3));
    t.o("u_0'", int(jj + 1), int(jj + 2));
    t.put("v'", iv(int(jj), int(jj + 1), false, true));
    for p in 1..=i {
        let lab = if p == i { "z".to_string() } else { spine1(p, "''") };
        let p = i64p(p);
        t.c(&lab, int(-p), int(-p + 1));
    }
    for p in 1..i {
        if p % 2 == 1 {
            let n = p.div_ceil(2) as i64;
            t.put(&format!("x_{n}'''"), iv(int(-2 * n), int(-2 * n + 1), false, true));
        } else {
            let n = (p / 2) as i64;
            t.put(&format!("y_{n}'''"), iv(int(-2 * n - 1), int(-2 * n), false, true));
        }
    }
    let ii = i as i64;
    t.c("w_0", int(-ii - 1), int(-ii));
    t.put("w_0'", iv(int(-ii - 1), int(-ii), false, true));
    t.c("z_0", int(-ii - 2), int(-ii - 1));
    t.o("z_0'", int(-ii - 1), int(-ii));
    t
}

/// The spine shared by the S' and R' tables: x at [0,1], then position p
/// at [p, p+1] up to u, each position before u with a half-open copy of its
/// successor hanging off it.
fn sr_tail(t: &mut Table, i: usize) {
    for p in 1..=i {
        let lab = if p == i { "u".to_string() } else { spine1(p, "") };
        t.put(&lab, cu(int(i64p(p))));
    }
    for p in 0..i {
        if p.is_multiple_of(2) {
            let n = (p / 2 + 1) as i64;
            t.put(&format!("y_{n}'"), iv(int(2 * n - 1), int(2 * n), true, false));
        } else {
            let n = p.div_ceil(2) as i64;
            t.put(&format!("x_{n}'"), iv(int(2 * n), int(2 * n + 1), true, false));
        }
    }
    let a = i as i64 + 1;
    t.c("v'", int(a), int(a + 1));
    t.put("v''", iv(int(a), int(a + 1), true, false));
}

fn table_sp(i: usize, v: Variant) -> Table {
    let mut t = Table::new();
    t.c("x", int(0), int(1));
    t.o("y'", int(0), int(1));
    t.o("x'", int(0), int(1));
    t.c("y_0", int(-1), int(0));
    t.put("x_0", iv(int(-2), int(-1), v == Variant::Closed, true));
    t.o("x_1''", int(1), int(2));
    sr_tail(&mut t, i);
    t
}

fn table_rp(i: usize, v: Variant) -> Table {
    let mut t = Table::new();
    t.c("x", int(0), int(1));
    t.o("y'", int(0), int(1));
    t.o("x'", int(0), int(1));
    t.c("y_1''", int(-1), int(0));
    t.put("x_1''", iv(int(-2), int(-1), v == Variant::Closed, true));
    t.put("y_2''", iv(int(-1), int(0), false, true));
    t.o("x''", int(-1), int(0));
    sr_tail(&mut t, i);
    t
}

/// Graph and default (closed-choice) table.
pub fn fixture(id: FixtureId) -> Result<(Bigraph, Representation), FamilyError> {
    fixture_variant(id, Variant::Closed)
}

pub fn fixture_variant(id: FixtureId, v: Variant) -> Result<(Bigraph, Representation), FamilyError> {
    let g = generate(id.family())?;
    let t = match id {
        FixtureId::H1Fig2 => table_h1(),
        FixtureId::H2Fig3I => table_h2_i(),
        FixtureId::H2Fig3Ii => table_h2_ii(),
        FixtureId::H3Fig4I => table_h3_i(),
        FixtureId::H3Fig4Ii => table_h3_ii(),
        FixtureId::F6Fig6 => table_f6(),
        FixtureId::F1Fig25 => table_f1(),
        FixtureId::Kp(i, j) => table_kp(i, j, v),
        FixtureId::Pp(i) => table_pp(i, v),
        FixtureId::Tp(i, j) => table_tp(i, j),
        FixtureId::Qp(i) => table_qp(i, v),
        FixtureId::Sp(i) => table_sp(i, v),
        FixtureId::Rp(i) => table_rp(i, v),
    };
    Ok((g, t.rep))
}
