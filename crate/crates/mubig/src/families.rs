//! Generators for the forbidden catalog and the pinned families.
//!
//! Fixed graphs are stored as compact literals: `X ..; Y ..; a-b c-d ..`.
//! Parameterised families are built from a head gadget, a spine with one
//! pendant per inner spine vertex, and a tail gadget.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bigraph::{Bigraph, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    H1,
    H2,
    H3,
    F(u8),
    B0,
    B1,
    B2,
    K,
    M,
    H0,
    L(usize, usize),
    Mfam(usize),
    N(usize),
    Hp(usize),
    Kfam(usize, usize),
    P(usize),
    Q(usize),
    R(usize),
    S(usize),
    T(usize, usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modifier {
    #[default]
    Plain,
    Primed,
    Tilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub modifier: Modifier,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0} has no {1} construction")]
    Unsupported(String, &'static str),
    #[error("bad parameters for {0}: {1}")]
    BadParams(String, String),
    #[error("unknown family `{0}`")]
    UnknownName(String),
}

impl FamilyId {
    pub fn plain(family: Family) -> Self {
        FamilyId { family, modifier: Modifier::Plain }
    }

    pub fn primed(family: Family) -> Self {
        FamilyId { family, modifier: Modifier::Primed }
    }

    pub fn tilde(family: Family) -> Self {
        FamilyId { family, modifier: Modifier::Tilde }
    }
}

impl Family {
    /// Name used on the command line.
    pub fn name(&self) -> String {
        match self {
            Family::H1 => "H1".into(),
            Family::H2 => "H2".into(),
            Family::H3 => "H3".into(),
            Family::F(k) => format!("F{k}"),
            Family::B0 => "B0".into(),
            Family::B1 => "B1".into(),
            Family::B2 => "B2".into(),
            Family::K => "K".into(),
            Family::M => "M".into(),
            Family::H0 => "H0".into(),
            Family::L(..) => "L".into(),
            Family::Mfam(_) => "Mfam".into(),
            Family::N(_) => "N".into(),
            Family::Hp(_) => "Hp".into(),
            Family::Kfam(..) => "Kfam".into(),
            Family::P(_) => "P".into(),
            Family::Q(_) => "Q".into(),
            Family::R(_) => "R".into(),
            Family::S(_) => "S".into(),
            Family::T(..) => "T".into(),
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::L(i, j) | Family::Kfam(i, j) | Family::T(i, j) => vec![i, j],
            Family::Mfam(i) | Family::N(i) | Family::Hp(i) | Family::P(i) | Family::Q(i) | Family::R(i) | Family::S(i) => {
                vec![i]
            }
            _ => Vec::new(),
        }
    }

    /// Builds a family from its command-line name and parameters. Missing
    /// parameters default to 1.
    pub fn from_name(name: &str, i: Option<usize>, j: Option<usize>) -> Result<Family, FamilyError> {
        let i = i.unwrap_or(1);
        let j = j.unwrap_or(1);
        let f = match name {
            "H1" => Family::H1,
            "H2" => Family::H2,
            "H3" => Family::H3,
            "B0" => Family::B0,
            "B1" => Family::B1,
            "B2" => Family::B2,
            "K" => Family::K,
            "M" => Family::M,
            "H0" => Family::H0,
            "L" => Family::L(i, j),
            "Mfam" => Family::Mfam(i),
            "N" => Family::N(i),
            "Hp" => Family::Hp(i),
            "Kfam" => Family::Kfam(i, j),
            "P" => Family::P(i),
            "Q" => Family::Q(i),
            "R" => Family::R(i),
            "S" => Family::S(i),
            "T" => Family::T(i, j),
            _ => match name.strip_prefix('F').and_then(|k| k.parse::<u8>().ok()) {
                Some(k) if (1..=13).contains(&k) => Family::F(k),
                _ => return Err(FamilyError::UnknownName(name.to_string())),
            },
        };
        Ok(f)
    }

    pub fn supports_primed(&self) -> bool {
        matches!(self, Family::Kfam(..) | Family::P(_) | Family::T(..) | Family::Q(_) | Family::S(_) | Family::R(_))
    }

    pub fn supports_tilde(&self) -> bool {
        matches!(self, Family::Kfam(..) | Family::P(_) | Family::Q(_) | Family::S(_) | Family::R(_))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family.name();
        match self.modifier {
            Modifier::Plain => write!(f, "{name}")?,
            Modifier::Primed => write!(f, "{name}'")?,
            Modifier::Tilde => write!(f, "~{name}")?,
        }
        let ps = self.family.params();
        if !ps.is_empty() {
            let ps: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    /// Parses the `Display` form, e.g. `F5`, `Kfam'(1,2)`, `~S(1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (modifier, rest) = match s.strip_prefix('~') {
            Some(r) => (Modifier::Tilde, r),
            None => (Modifier::Plain, s),
        };
        let (head, params) = match rest.find('(') {
            Some(k) => {
                let inner = rest[k..].strip_prefix('(').and_then(|p| p.strip_suffix(')'));
                let inner = inner.ok_or_else(|| FamilyError::UnknownName(s.to_string()))?;
                let ps: Result<Vec<usize>, _> = inner.split(',').map(|p| p.trim().parse::<usize>()).collect();
                (&rest[..k], ps.map_err(|e| FamilyError::BadParams(s.to_string(), e.to_string()))?)
            }
            None => (rest, Vec::new()),
        };
        let (modifier, head) = match head.strip_suffix('\'') {
            Some(h) if modifier == Modifier::Plain => (Modifier::Primed, h),
            Some(_) => return Err(FamilyError::UnknownName(s.to_string())),
            None => (modifier, head),
        };
        let family = Family::from_name(head, params.first().copied(), params.get(1).copied())?;
        if family.params().len() != params.len() {
            return Err(FamilyError::BadParams(s.to_string(), format!("expected {} parameters", family.params().len())));
        }
        Ok(FamilyId { family, modifier })
    }
}

const H1: &str = "X x_2 x_4 x_1 x_3; Y y_2 y_1 y_3; x_2-y_2 x_4-y_2 x_4-y_1 x_4-y_3 x_1-y_1 x_3-y_3";
const H2: &str = "X x_2 x_1 x_3; Y y_2 y_1 y_3 y_4; x_2-y_2 x_2-y_1 x_2-y_4 x_1-y_1 x_3-y_1 x_3-y_3 x_3-y_4";
const H3: &str = "X x_2 x_3 x_4 x_1; Y y_2 y_1 y_3; x_2-y_2 x_4-y_2 x_2-y_1 x_3-y_1 x_4-y_1 x_1-y_1 x_3-y_3 x_4-y_3";
const F1: &str = "X x_2 x_1 x_0 x_3; Y y_1 y_0 y_2 y_3; x_2-y_1 x_1-y_1 x_1-y_0 x_1-y_2 x_1-y_3 x_0-y_0 x_3-y_2";
const F2: &str = "X x_1 x_2 x_3 x_4; Y y_1 y_2 y_3 y_4; x_1-y_1 x_2-y_1 x_3-y_1 x_4-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_2 x_4-y_3";
const F3: &str = "X x_1 x_2 x_3 x_4; Y y_1 y_2 y_3 y_4 y_5; x_1-y_1 x_2-y_1 x_3-y_1 x_2-y_2 x_2-y_3 x_2-y_5 x_3-y_3 x_4-y_3 x_3-y_4 x_3-y_5";
const F4: &str = "X x_1 x_2 x_3 x_4 x_5; Y y_1 y_2 y_3 y_4; x_1-y_1 x_2-y_1 x_3-y_1 x_5-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_3 x_4-y_3 x_5-y_3 x_3-y_4";
const F5: &str = "X x_1 x_2 x_3 x_4 x_5; Y y_1 y_2 y_3 y_4; x_1-y_1 x_2-y_1 x_4-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_2 x_3-y_3 x_4-y_3 x_4-y_4 x_5-y_4";
const F6: &str = "X x_3 x_2 x_4 x_1 x_5; Y y_4 y_1 y_2 y_3 y_5; x_3-y_4 x_3-y_1 x_3-y_3 x_2-y_1 x_4-y_1 x_1-y_1 x_2-y_2 x_2-y_5 x_4-y_2 x_4-y_3 x_4-y_5 x_5-y_5";
const F7: &str = "X x_1 x_2 x_3 x_4 x_5; Y y_1 y_2 y_3 y_4 y_5 y_6; x_1-y_1 x_2-y_1 x_4-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_2 x_4-y_4 x_4-y_5 x_4-y_6 x_5-y_6";
const F8: &str = "X x_1 x_2 x_3 x_4; Y y_1 y_2 y_3 y_4 y_5; x_1-y_1 x_1-y_4 x_2-y_1 x_3-y_1 x_2-y_2 x_3-y_2 x_3-y_3 x_3-y_4 x_3-y_5 x_4-y_3 x_4-y_4";
const F9: &str = "X x_1 x_2 x_3 x_4 x_5 x_6; Y y_1 y_2 y_3 y_4; x_1-y_1 x_1-y_3 x_1-y_4 x_2-y_1 x_3-y_1 x_4-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_3 x_6-y_3 x_4-y_4 x_5-y_4";
const F10: &str = "X x_1 x_2 x_3 x_4 x_5 x_6; Y y_1 y_2 y_3 y_4 y_5; x_1-y_1 x_1-y_3 x_1-y_4 x_2-y_1 x_3-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_3 x_4-y_3 x_5-y_4 x_6-y_4 x_5-y_5";
const F11: &str = "X x_1 x_2 x_3 x_4; Y y_1 y_2 y_3 y_4 y_5; x_1-y_1 x_1-y_4 x_2-y_1 x_3-y_1 x_4-y_1 x_2-y_2 x_3-y_2 x_4-y_2 x_3-y_3 x_3-y_4 x_3-y_5 x_4-y_3 x_4-y_4";
const F12: &str = "X x_1 x_2 x_3 x_4 x_5 x_6 x_7; Y y_1 y_2 y_3 y_4; x_1-y_1 x_1-y_2 x_1-y_4 x_2-y_1 x_3-y_1 x_5-y_1 x_6-y_1 x_2-y_2 x_3-y_2 x_7-y_2 x_3-y_3 x_3-y_4 x_4-y_3 x_5-y_3 x_4-y_4 x_5-y_4";
const F13: &str = "X x_1 x_2 x_3 x_4 x_5; Y y_1 y_2 y_3 y_4 y_5; x_1-y_1 x_2-y_1 x_4-y_1 x_5-y_1 x_2-y_2 x_2-y_3 x_2-y_5 x_3-y_2 x_3-y_3 x_4-y_3 x_5-y_3 x_4-y_4 x_4-y_5 x_5-y_5";
const B0: &str = "X u u_0' u_0; Y v_0'' v_0 v_0'; u-v_0'' u-v_0 u-v_0' u_0'-v_0'' u_0-v_0'' u_0-v_0'";
const B1: &str = "X x_1 x_2 x_3 x_4 x_5; Y y_1 y_2 y_3 y_4; x_1-y_1 x_2-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_3-y_2 x_4-y_3 x_5-y_4";
const B2: &str = "X x_1 x_2 x_3 x_4 x_5 x_6; Y y_1 y_2 y_3 y_4 y_5 y_6; x_1-y_1 x_2-y_1 x_6-y_1 x_2-y_2 x_2-y_3 x_2-y_4 x_2-y_5 x_2-y_6 x_3-y_2 x_4-y_3 x_5-y_3 x_5-y_4 x_6-y_5";
const K: &str = "X x_2 x_3 x_4 x_4' x_5 x_1; Y y_1 y_4 y_2 y_2' y_3 y_3'; x_2-y_1 x_2-y_4 x_2-y_2 x_2-y_2' x_3-y_1 x_1-y_1 x_3-y_4 x_3-y_3 x_3-y_3' x_4-y_2 x_4'-y_2' x_5-y_3";
const M: &str = "X x_3 x_2 x_5 x_1 x_4; Y y_3 y_1 y_2 y_4 y_5 y_6; x_3-y_3 x_3-y_1 x_3-y_4 x_2-y_1 x_5-y_1 x_1-y_1 x_4-y_1 x_2-y_2 x_2-y_4 x_1-y_5 x_1-y_6 x_4-y_5";
const H0: &str = "X x_4 x_3 x_2 x_1 x_5 x_6; Y y_2 y_3 y_1 y_5 y_4; x_4-y_2 x_2-y_2 x_4-y_3 x_4-y_1 x_3-y_3 x_3-y_1 x_2-y_1 x_1-y_1 x_5-y_1 x_6-y_1 x_1-y_5 x_1-y_4 x_5-y_4";

fn literal(src: &str) -> Bigraph {
    let mut parts = src.split(';');
    let mut g = Bigraph::new();
    for side in [Side::X, Side::Y] {
        let part = parts.next().expect("side list");
        for label in part.split_whitespace().skip(1) {
            g.add_vertex(label, side).expect("distinct labels");
        }
    }
    for e in parts.next().expect("edge list").split_whitespace() {
        let (a, b) = e.split_once('-').expect("edge");
        g.add_edge_by_label(a, b).expect("valid edge");
    }
    g
}

struct Gb {
    g: Bigraph,
}

impl Gb {
    fn new() -> Self {
        Gb { g: Bigraph::new() }
    }

    fn side_of(&self, v: &str) -> Side {
        self.g.side(self.g.vertex(v).expect("known vertex"))
    }

    fn v(&mut self, label: &str, side: Side) {
        self.g.add_vertex(label, side).expect("fresh label");
    }

    /// Adds `label` on the side opposite to `anchor` and joins them.
    fn hang(&mut self, anchor: &str, label: &str) {
        let s = self.side_of(anchor).other();
        self.v(label, s);
        self.e(anchor, label);
    }

    fn e(&mut self, a: &str, b: &str) {
        self.g.add_edge_by_label(a, b).expect("edge between sides");
    }

    fn edges(&mut self, es: &[(&str, &str)]) {
        for (a, b) in es {
            self.e(a, b);
        }
    }
}

fn par(p: usize) -> Side {
    if p.is_multiple_of(2) {
        Side::X
    } else {
        Side::Y
    }
}

/// Spine label at position p, counting x_1 at position 0: x_1, y_1, x_2, ...
fn spine0(p: usize, mark: &str) -> String {
    if p.is_multiple_of(2) {
        format!("x_{}{mark}", p / 2 + 1)
    } else {
        format!("y_{}{mark}", p.div_ceil(2))
    }
}

/// Spine label at position p >= 1, counting y_1 at position 1: y_1, x_1, y_2, ...
fn spine1(p: usize, mark: &str) -> String {
    if p % 2 == 1 {
        format!("y_{}{mark}", p.div_ceil(2))
    } else {
        format!("x_{}{mark}", p / 2)
    }
}

/// Spine from position 0 to `last` labelled by `spine0`, the last one named
/// `end`. Inner positions get a pendant named by `pendant`.
fn chain0(b: &mut Gb, last: usize, mark: &str, end: &str, attach: &[&str], pendant: impl Fn(usize) -> String) {
    let mut prev: Option<String> = None;
    for p in 0..=last {
        let lab = if p == last { end.to_string() } else { spine0(p, mark) };
        b.v(&lab, par(p));
        match &prev {
            Some(q) => b.e(q, &lab),
            None => {
                for a in attach {
                    b.e(a, &lab);
                }
            }
        }
        if p < last {
            b.hang(&lab, &pendant(p));
        }
        prev = Some(lab);
    }
}

fn kp(i: usize, j: usize) -> Gb {
    let mut b = Gb::new();
    b.v("x_0", Side::X);
    b.v("y_0", Side::Y);
    b.v("y", Side::Y);
    b.e("x_0", "y_0");
    chain0(&mut b, j, "", "u", &["y_0", "y"], |p| {
        if p.is_multiple_of(2) {
            format!("y_{}'", p / 2 + 1)
        } else {
            format!("x_{}'", p.div_ceil(2))
        }
    });
    b.hang("u", "v'");
    b.hang("u", "v''");
    chain0(&mut b, i, "''", "z", &["y_0", "y"], |p| {
        if p.is_multiple_of(2) {
            format!("y_{}'''", p / 2 + 1)
        } else {
            format!("x_{}'''", p.div_ceil(2))
        }
    });
    b.hang("z", "w");
    b.hang("z", "w'");
    b.hang("w", "z'");
    b.hang("w'", "z''");
    b
}

fn pp(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["x_1''", "x_2''", "x_3''"] {
        b.v(x, Side::X);
    }
    for y in ["y_1''", "y_2''", "y_3''", "y_4''"] {
        b.v(y, Side::Y);
    }
    b.edges(&[
        ("x_1''", "y_1''"),
        ("x_2''", "y_1''"),
        ("x_3''", "y_1''"),
        ("x_2''", "y_2''"),
        ("x_3''", "y_2''"),
        ("x_3''", "y_3''"),
        ("x_3''", "y_4''"),
        ("x_2''", "y_3''"),
    ]);
    chain0(&mut b, i - 1, "", "u", &["y_1''", "y_2''"], |p| {
        if p.is_multiple_of(2) {
            format!("y_{}'", p / 2 + 1)
        } else {
            format!("x_{}'", p.div_ceil(2))
        }
    });
    b.hang("u", "v'");
    b.hang("u", "v''");
    b
}

fn qp(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["x_1''", "x_2''", "x_3''", "x_4''", "x_5''"] {
        b.v(x, Side::X);
    }
    for y in ["y_1''", "y_2''", "y_3''", "y_4''", "y_5''"] {
        b.v(y, Side::Y);
    }
    b.edges(&[
        ("x_1''", "y_1''"),
        ("x_2''", "y_1''"),
        ("x_3''", "y_1''"),
        ("x_5''", "y_1''"),
        ("x_3''", "y_3''"),
        ("x_3''", "y_4''"),
        ("x_3''", "y_5''"),
        ("x_2''", "y_2''"),
        ("x_2''", "y_4''"),
        ("x_2''", "y_5''"),
        ("x_4''", "y_5''"),
        ("x_5''", "y_5''"),
        ("x_5''", "y_4''"),
        ("x_4''", "y_2''"),
    ]);
    chain0(&mut b, i - 1, "", "u", &["y_2''", "y_5''"], |p| {
        if p.is_multiple_of(2) {
            format!("y_{}'", p / 2 + 1)
        } else {
            format!("x_{}'", p.div_ceil(2) + 1)
        }
    });
    b.hang("u", "v'");
    b.hang("u", "v''");
    b
}

/// Spine y_1, x_1, y_2, ... from position 1 to `last` (named `end`) hanging
/// off x, with pendants on positions `pend_from..last`.
fn chain1(b: &mut Gb, last: usize, mark: &str, end: &str, pend_from: usize, pendant: impl Fn(usize) -> String) {
    let name = |p: usize| match p {
        0 => "x".to_string(),
        p if p == last => end.to_string(),
        p => spine1(p, mark),
    };
    for p in 1..=last {
        b.v(&name(p), par(p));
        b.e(&name(p - 1), &name(p));
    }
    for p in pend_from..last {
        b.hang(&name(p), &pendant(p));
    }
}

fn sr_tail(b: &mut Gb, i: usize) {
    chain1(b, i, "", "u", 0, |p| {
        if p.is_multiple_of(2) {
            format!("y_{}'", p / 2 + 1)
        } else {
            format!("x_{}'", p.div_ceil(2))
        }
    });
    b.hang("u", "v'");
    b.hang("u", "v''");
}

fn sp(i: usize) -> Gb {
    let mut b = Gb::new();
    b.v("x", Side::X);
    b.v("x'", Side::X);
    b.v("x_0", Side::X);
    b.v("y'", Side::Y);
    b.v("y_0", Side::Y);
    b.edges(&[("x", "y'"), ("x'", "y'"), ("x", "y_0"), ("x_0", "y_0")]);
    sr_tail(&mut b, i);
    let r1 = if i == 1 { "u".to_string() } else { spine1(1, "") };
    b.v("x_1''", Side::X);
    b.e("x_1''", &r1);
    b.e("x_1''", "y_1'");
    b
}

fn rp(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["x", "x'", "x_1''", "x''"] {
        b.v(x, Side::X);
    }
    for y in ["y'", "y_1''", "y_2''"] {
        b.v(y, Side::Y);
    }
    b.edges(&[
        ("x", "y'"),
        ("x'", "y'"),
        ("x", "y_1''"),
        ("x", "y_2''"),
        ("x_1''", "y_1''"),
        ("x''", "y_1''"),
        ("x''", "y_2''"),
    ]);
    sr_tail(&mut b, i);
    b
}

fn tp(i: usize, j: usize) -> Gb {
    let mut b = Gb::new();
    b.v("x", Side::X);
    b.v("x_0", Side::X);
    b.v("y_0", Side::Y);
    b.v("y", Side::Y);
    b.edges(&[("x", "y_0"), ("x_0", "y_0"), ("x", "y")]);
    for (len, mark, pmark, end) in [(j, "", "'", "u"), (i, "''", "'''", "z")] {
        chain1(&mut b, len, mark, end, 1, |p| {
            if p % 2 == 1 {
                format!("x_{}{pmark}", p.div_ceil(2))
            } else {
                format!("y_{}{pmark}", p / 2)
            }
        });
    }
    b.hang("u", "v'");
    b.hang("u", "v_0");
    b.hang("u", "v_0'");
    b.hang("v_0", "u_0");
    b.hang("v_0", "u_0'");
    b.e("v_0'", "u_0'");
    b.hang("z", "w_0");
    b.hang("z", "w_0'");
    b.hang("w_0", "z_0");
    b.hang("w_0", "z_0'");
    b.e("w_0'", "z_0'");
    b
}

/// Spine s_1..s_i hanging off `attach`; s_k has pendant p_k for k < i and
/// s_i carries the two paths t_1 t_1' and t_2 t_2'.
fn prior_tail(b: &mut Gb, attach: &[&str], i: usize) {
    let mut side = b.side_of(attach[0]).other();
    let mut prev: Option<String> = None;
    for k in 1..=i {
        let s = format!("s_{k}");
        b.v(&s, side);
        match &prev {
            Some(q) => b.e(q, &s),
            None => {
                for a in attach {
                    b.e(a, &s);
                }
            }
        }
        if k < i {
            b.hang(&s, &format!("p_{k}"));
        }
        prev = Some(s);
        side = side.other();
    }
    let last = format!("s_{i}");
    for t in ["t_1", "t_2"] {
        b.hang(&last, t);
        b.hang(t, &format!("{t}'"));
    }
}

fn mfam(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["a", "d", "b'", "c'"] {
        b.v(x, Side::X);
    }
    for y in ["b", "c", "a'"] {
        b.v(y, Side::Y);
    }
    b.edges(&[("a", "b"), ("a", "c"), ("d", "b"), ("d", "c"), ("b'", "b"), ("c'", "c"), ("a", "a'")]);
    prior_tail(&mut b, &["a"], i);
    b
}

fn nfam(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["c", "d", "e", "g"] {
        b.v(x, Side::X);
    }
    for y in ["a", "b", "f", "h"] {
        b.v(y, Side::Y);
    }
    b.edges(&[("c", "a"), ("c", "b"), ("c", "f"), ("c", "h"), ("d", "a"), ("d", "b"), ("e", "a"), ("e", "f"), ("g", "f")]);
    prior_tail(&mut b, &["a", "b"], i);
    b
}

fn hpfam(i: usize) -> Gb {
    let mut b = Gb::new();
    for x in ["a", "e", "f"] {
        b.v(x, Side::X);
    }
    for y in ["b", "c", "d", "a'"] {
        b.v(y, Side::Y);
    }
    b.edges(&[("a", "b"), ("a", "c"), ("a", "d"), ("a", "a'"), ("e", "b"), ("e", "d"), ("f", "c"), ("f", "d")]);
    prior_tail(&mut b, &["a"], i);
    b
}

/// z with a pendant and a neighbour b_0 carrying a 2-path, i-1 spine
/// vertices to c (which has a 2-path and a pendant), j-1 more to t, and t
/// with two 2-paths. Inner spine vertices have one pendant each.
fn lfam(i: usize, j: usize) -> Gb {
    let mut b = Gb::new();
    b.v("z", Side::X);
    b.hang("z", "z'");
    b.hang("z", "b_0");
    b.hang("b_0", "b_0'");
    b.hang("b_0'", "b_0''");
    let mut prev = "b_0".to_string();
    for k in 1..i {
        let v = format!("p_{k}");
        b.hang(&prev, &v);
        b.hang(&v, &format!("p_{k}'"));
        prev = v;
    }
    b.hang(&prev, "c");
    b.hang("c", "c_1");
    b.hang("c_1", "c_2");
    b.hang("c", "c'");
    let mut prev = "c".to_string();
    for k in 1..j {
        let v = format!("q_{k}");
        b.hang(&prev, &v);
        b.hang(&v, &format!("q_{k}'"));
        prev = v;
    }
    b.hang(&prev, "t");
    for t in ["t_1", "t_2"] {
        b.hang("t", t);
        b.hang(t, &format!("{t}'"));
    }
    b
}

fn primed_graph(f: Family) -> Gb {
    match f {
        Family::Kfam(i, j) => kp(i, j),
        Family::P(i) => pp(i),
        Family::Q(i) => qp(i),
        Family::R(i) => rp(i),
        Family::S(i) => sp(i),
        Family::T(i, j) => tp(i, j),
        _ => unreachable!("checked by supports_primed"),
    }
}

/// Generates the graph identified by `id`.
pub fn generate(id: FamilyId) -> Result<Bigraph, FamilyError> {
    let f = id.family;
    let name = id.to_string();
    if f.params().contains(&0) {
        return Err(FamilyError::BadParams(name, "parameters start at 1".into()));
    }
    if let Family::F(k) = f {
        if !(1..=13).contains(&k) {
            return Err(FamilyError::BadParams(name, "F ranges over 1..=13".into()));
        }
    }
    match id.modifier {
        Modifier::Primed if !f.supports_primed() => return Err(FamilyError::Unsupported(name, "primed")),
        Modifier::Tilde if !f.supports_tilde() => return Err(FamilyError::Unsupported(name, "tilde")),
        _ => {}
    }
    let g = match (f, id.modifier) {
        (_, Modifier::Primed) => primed_graph(f).g,
        (_, Modifier::Tilde) => tilde_of(&primed_graph(f).g)?,
        (Family::T(..), _) => {
            let mut b = primed_graph(f);
            b.hang("z", "w'");
            b.g
        }
        (Family::Kfam(..) | Family::P(_) | Family::Q(_) | Family::R(_) | Family::S(_), _) => {
            let mut b = primed_graph(f);
            b.hang("v'", "t'");
            b.hang("v''", "t''");
            b.g
        }
        (Family::L(i, j), _) => lfam(i, j).g,
        (Family::Mfam(i), _) => mfam(i).g,
        (Family::N(i), _) => nfam(i).g,
        (Family::Hp(i), _) => hpfam(i).g,
        (fixed, _) => literal(fixed_literal(fixed)),
    };
    debug_assert!(g.is_connected());
    Ok(g)
}

fn fixed_literal(f: Family) -> &'static str {
    match f {
        Family::H1 => H1,
        Family::H2 => H2,
        Family::H3 => H3,
        Family::F(k) => [F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13][k as usize - 1],
        Family::B0 => B0,
        Family::B1 => B1,
        Family::B2 => B2,
        Family::K => K,
        Family::M => M,
        Family::H0 => H0,
        _ => unreachable!("parameterised family"),
    }
}

/// Replaces the two pendants v', v'' at u by a copy of B0 whose degree-3
/// vertex is u itself.
pub fn tilde_of(primed: &Bigraph) -> Result<Bigraph, FamilyError> {
    let missing = |l: &str| FamilyError::Unsupported(format!("graph without pendant `{l}` at u"), "tilde");
    let u = primed.vertex("u").ok_or_else(|| missing("u"))?;
    let mut drop = Vec::new();
    for l in ["v'", "v''"] {
        let v = primed.vertex(l).ok_or_else(|| missing(l))?;
        if !primed.adjacent(u, v) || primed.degree(v) != 1 {
            return Err(missing(l));
        }
        drop.push(v);
    }
    let keep: Vec<usize> = (0..primed.n()).filter(|v| !drop.contains(v)).collect();
    let mut b = Gb { g: primed.induced(&keep) };
    for v in ["v_0", "v_0'", "v_0''"] {
        b.hang("u", v);
    }
    b.hang("v_0''", "u_0'");
    b.hang("v_0''", "u_0");
    b.e("v_0'", "u_0");
    Ok(b.g)
}

fn catalog_templates() -> Vec<FamilyId> {
    let mut out: Vec<FamilyId> = [2u8, 4, 5, 8, 9, 11, 12].iter().map(|&k| FamilyId::plain(Family::F(k))).collect();
    for f in [Family::B1, Family::B2, Family::K, Family::M, Family::H0] {
        out.push(FamilyId::plain(f));
    }
    let fams = [
        Family::L(1, 1),
        Family::Mfam(1),
        Family::N(1),
        Family::Hp(1),
        Family::Kfam(1, 1),
        Family::P(1),
        Family::Q(1),
        Family::R(1),
        Family::S(1),
        Family::T(1, 1),
    ];
    out.extend(fams.iter().map(|&f| FamilyId::plain(f)));
    out.extend(fams.iter().filter(|f| f.supports_tilde()).map(|&f| FamilyId::tilde(f)));
    out
}

fn with_params(f: Family, i: usize, j: usize) -> Family {
    match f {
        Family::L(..) => Family::L(i, j),
        Family::Mfam(_) => Family::Mfam(i),
        Family::N(_) => Family::N(i),
        Family::Hp(_) => Family::Hp(i),
        Family::Kfam(..) => Family::Kfam(i, j),
        Family::P(_) => Family::P(i),
        Family::Q(_) => Family::Q(i),
        Family::R(_) => Family::R(i),
        Family::S(_) => Family::S(i),
        Family::T(..) => Family::T(i, j),
        other => other,
    }
}

/// Every forbidden graph with at most `max_vertices` vertices, with its id.
/// Parameters are swept upward until the vertex count passes the bound.
pub fn forbidden_catalog_ids(max_vertices: usize) -> Vec<(FamilyId, Bigraph)> {
    let mut out = Vec::new();
    for t in catalog_templates() {
        let arity = t.family.params().len();
        let mk = |i, j| {
            let id = FamilyId { family: with_params(t.family, i, j), modifier: t.modifier };
            (id, generate(id).expect("catalog member"))
        };
        let imax = if arity == 0 { 1 } else { usize::MAX };
        let jmax = if arity == 2 { usize::MAX } else { 1 };
        for i in 1..=imax {
            if mk(i, 1).1.n() > max_vertices {
                break;
            }
            for j in 1..=jmax {
                let (id, g) = mk(i, j);
                if g.n() > max_vertices {
                    break;
                }
                out.push((id, g));
            }
        }
    }
    out
}

pub fn forbidden_catalog(max_vertices: usize) -> Vec<Bigraph> {
    forbidden_catalog_ids(max_vertices).into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["F5", "Kfam'(1,2)", "~S(3)", "T(2,1)", "H0", "Mfam(2)"] {
            assert_eq!(s.parse::<FamilyId>().unwrap().to_string(), s);
        }
        assert!("F14".parse::<FamilyId>().is_err());
        assert!("Kfam(1)".parse::<FamilyId>().is_err());
    }

    #[test]
    fn unsupported_modifiers() {
        assert!(matches!(generate(FamilyId::tilde(Family::L(1, 1))), Err(FamilyError::Unsupported(..))));
        assert!(matches!(generate(FamilyId::tilde(Family::T(1, 1))), Err(FamilyError::Unsupported(..))));
        assert!(matches!(generate(FamilyId::primed(Family::M)), Err(FamilyError::Unsupported(..))));
        assert!(matches!(generate(FamilyId::plain(Family::P(0))), Err(FamilyError::BadParams(..))));
    }
}
