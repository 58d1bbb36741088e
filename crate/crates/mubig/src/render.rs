//! Text and SVG drawings of representations.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::interval::{fmt_rational, Interval, Rational};
use crate::representation::Representation;

fn sorted(rep: &Representation) -> Vec<(&str, &Interval)> {
    let mut rows: Vec<(&str, &Interval)> = rep.iter().collect();
    rows.sort_by(|a, b| a.1.l.cmp(&b.1.l).then(a.1.r.cmp(&b.1.r)).then(a.0.cmp(b.0)));
    rows
}

fn span(rows: &[(&str, &Interval)]) -> Option<(Rational, Rational)> {
    let lo = rows.iter().map(|(_, i)| i.l.clone()).min()?;
    let hi = rows.iter().map(|(_, i)| i.r.clone()).max()?;
    Some((lo, hi))
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// One row per vertex, ordered by left end. `[` and `]` mark closed ends,
/// `(` and `)` open ones.
pub fn ascii(rep: &Representation, width: usize) -> String {
    let rows = sorted(rep);
    let Some((lo, hi)) = span(&rows) else { return String::new() };
    let width = width.max(8);
    let scale = (to_f64(&hi) - to_f64(&lo)).max(1e-9);
    let col = |q: &Rational| (((to_f64(q) - to_f64(&lo)) / scale) * (width - 1) as f64).round() as usize;
    let name_w = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (label, iv) in rows {
        let (a, b) = (col(&iv.l), col(&iv.r).max(col(&iv.l) + 1));
        let mut line = vec![' '; width + 1];
        for c in line.iter_mut().take(b).skip(a + 1) {
            *c = '=';
        }
        line[a] = if iv.left_closed { '[' } else { '(' };
        line[b.min(width)] = if iv.right_closed { ']' } else { ')' };
        let bar: String = line.into_iter().collect();
        let _ = writeln!(out, "{label:>name_w$} {} {iv}", bar.trim_end());
    }
    out
}

/// Same layout as [`ascii`], drawn as SVG. Closed ends are filled dots,
/// open ends hollow.
pub fn svg(rep: &Representation) -> String {
    let rows = sorted(rep);
    let (lo, hi) = span(&rows).unwrap_or_else(|| (Rational::from_integer(0.into()), Rational::from_integer(1.into())));
    let (w, row_h, pad, label_w) = (600.0, 22.0, 12.0, 80.0);
    let scale = (to_f64(&hi) - to_f64(&lo)).max(1e-9);
    let x = |q: &Rational| label_w + pad + (to_f64(q) - to_f64(&lo)) / scale * (w - label_w - 2.0 * pad);
    let h = pad * 2.0 + row_h * rows.len() as f64 + 18.0;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" font-family="monospace" font-size="12">"#);
    for (k, (label, iv)) in rows.iter().enumerate() {
        let y = pad + row_h * (k as f64 + 0.5);
        let (x1, x2) = (x(&iv.l), x(&iv.r));
        let _ = writeln!(s, r#"  <text x="{pad}" y="{:.1}">{}</text>"#, y + 4.0, escape(label));
        let _ = writeln!(s, r#"  <line x1="{x1:.1}" y1="{y:.1}" x2="{x2:.1}" y2="{y:.1}" stroke="black" stroke-width="2"/>"#);
        for (px, closed) in [(x1, iv.left_closed), (x2, iv.right_closed)] {
            let fill = if closed { "black" } else { "white" };
            let _ = writeln!(s, r#"  <circle cx="{px:.1}" cy="{y:.1}" r="4" fill="{fill}" stroke="black"/>"#);
        }
    }
    let base = h - 8.0;
    let _ = writeln!(s, r#"  <text x="{:.1}" y="{base:.1}">{}</text>"#, x(&lo), fmt_rational(&lo));
    let _ = writeln!(s, r#"  <text x="{:.1}" y="{base:.1}" text-anchor="end">{}</text>"#, x(&hi), fmt_rational(&hi));
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{int, IntervalClass};

    #[test]
    fn rows_follow_left_ends() {
        let mut rep = Representation::new();
        rep.insert("b", Interval::closed(int(2), int(3)));
        rep.insert("a", Interval::with_class(int(0), int(1), IntervalClass::OC).unwrap());
        let text = ascii(&rep, 20);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("a ("));
        assert!(lines[1].contains('['));
        assert!(svg(&rep).contains(r#"fill="white""#));
    }
}
