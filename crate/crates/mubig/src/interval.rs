//! Intervals with rational endpoints and open/closed ends.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-2.25`.
pub fn parse_rational(s: &str) -> Result<Rational, IntervalError> {
    let bad = || IntervalError::Syntax(s.to_string());
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let mut n: BigInt = digits.parse().map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(n, d));
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(p))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("empty interval: l={l}, r={r}")]
    Empty { l: String, r: String },
    #[error("cannot parse `{0}`")]
    Syntax(String),
}

/// The four boundary types. `CO` is closed on the left and open on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntervalClass {
    CC,
    OO,
    CO,
    OC,
}

impl IntervalClass {
    pub const ALL: [IntervalClass; 4] = [IntervalClass::CC, IntervalClass::OO, IntervalClass::CO, IntervalClass::OC];

    pub fn from_flags(left_closed: bool, right_closed: bool) -> Self {
        match (left_closed, right_closed) {
            (true, true) => IntervalClass::CC,
            (false, false) => IntervalClass::OO,
            (true, false) => IntervalClass::CO,
            (false, true) => IntervalClass::OC,
        }
    }

    pub fn flags(self) -> (bool, bool) {
        match self {
            IntervalClass::CC => (true, true),
            IntervalClass::OO => (false, false),
            IntervalClass::CO => (true, false),
            IntervalClass::OC => (false, true),
        }
    }
}

impl fmt::Display for IntervalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl Interval {
    pub fn new(l: Rational, r: Rational, left_closed: bool, right_closed: bool) -> Result<Self, IntervalError> {
        let ok = match l.cmp(&r) {
            Ordering::Less => true,
            Ordering::Equal => left_closed && right_closed,
            Ordering::Greater => false,
        };
        if !ok {
            return Err(IntervalError::Empty { l: fmt_rational(&l), r: fmt_rational(&r) });
        }
        Ok(Interval { l, r, left_closed, right_closed })
    }

    pub fn with_class(l: Rational, r: Rational, class: IntervalClass) -> Result<Self, IntervalError> {
        let (a, b) = class.flags();
        Interval::new(l, r, a, b)
    }

    /// Unit interval `[l, l+1]` with the given class.
    pub fn unit(l: Rational, class: IntervalClass) -> Self {
        let r = &l + Rational::one();
        Interval::with_class(l, r, class).expect("positive length")
    }

    pub fn closed(l: Rational, r: Rational) -> Self {
        Interval::new(l, r, true, true).expect("valid closed interval")
    }

    pub fn class(&self) -> IntervalClass {
        IntervalClass::from_flags(self.left_closed, self.right_closed)
    }

    pub fn is_closed(&self) -> bool {
        self.left_closed && self.right_closed
    }

    pub fn length(&self) -> Rational {
        &self.r - &self.l
    }

    pub fn is_unit(&self) -> bool {
        self.length().is_one()
    }

    /// Point-set intersection; touching ends count only when both are closed.
    pub fn intersects(&self, other: &Interval) -> bool {
        // max of left ends, min of right ends, with closedness at ties
        let (lo, lo_closed) = match self.l.cmp(&other.l) {
            Ordering::Greater => (&self.l, self.left_closed),
            Ordering::Less => (&other.l, other.left_closed),
            Ordering::Equal => (&self.l, self.left_closed && other.left_closed),
        };
        let (hi, hi_closed) = match self.r.cmp(&other.r) {
            Ordering::Less => (&self.r, self.right_closed),
            Ordering::Greater => (&other.r, other.right_closed),
            Ordering::Equal => (&self.r, self.right_closed && other.right_closed),
        };
        match lo.cmp(hi) {
            Ordering::Less => true,
            Ordering::Equal => lo_closed && hi_closed,
            Ordering::Greater => false,
        }
    }

    /// Set inclusion `self ⊆ other`.
    pub fn subset_of(&self, other: &Interval) -> bool {
        let left = match self.l.cmp(&other.l) {
            Ordering::Greater => true,
            Ordering::Equal => other.left_closed || !self.left_closed,
            Ordering::Less => false,
        };
        let right = match self.r.cmp(&other.r) {
            Ordering::Less => true,
            Ordering::Equal => other.right_closed || !self.right_closed,
            Ordering::Greater => false,
        };
        left && right
    }

    pub fn same_endpoints(&self, other: &Interval) -> bool {
        self.l == other.l && self.r == other.r
    }

    pub fn translate(&self, t: &Rational) -> Interval {
        Interval { l: &self.l + t, r: &self.r + t, ..self.clone() }
    }

    /// Mirror image about zero.
    pub fn reflect(&self) -> Interval {
        Interval { l: -&self.r, r: -&self.l, left_closed: self.right_closed, right_closed: self.left_closed }
    }

    /// Multiply both endpoints by a positive factor.
    pub fn scale(&self, k: &Rational) -> Interval {
        assert!(k.is_positive(), "scale factor must be positive");
        Interval { l: &self.l * k, r: &self.r * k, ..self.clone() }
    }

    pub fn with_flags(&self, left_closed: bool, right_closed: bool) -> Result<Interval, IntervalError> {
        Interval::new(self.l.clone(), self.r.clone(), left_closed, right_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.left_closed { '[' } else { '(' },
            fmt_rational(&self.l),
            fmt_rational(&self.r),
            if self.right_closed { ']' } else { ')' }
        )
    }
}

impl FromStr for Interval {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || IntervalError::Syntax(s.to_string());
        let mut chars = t.chars();
        let first = chars.next().ok_or_else(bad)?;
        let last = chars.next_back().ok_or_else(bad)?;
        let lc = match first {
            '[' => true,
            '(' => false,
            _ => return Err(bad()),
        };
        let rc = match last {
            ']' => true,
            ')' => false,
            _ => return Err(bad()),
        };
        let body = &t[1..t.len() - 1];
        let (a, b) = body.split_once(',').ok_or_else(bad)?;
        Interval::new(parse_rational(a)?, parse_rational(b)?, lc, rc)
    }
}
