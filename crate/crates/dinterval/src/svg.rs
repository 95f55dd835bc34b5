//! Interval diagrams as SVG.

use std::fmt::Write as _;

use dinterval_core::{DIntervalRep, Interval, Rational, Vertex};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 30.0;
const ROW: f64 = 26.0;

/// Greedy rows: intervals sorted by left endpoint go to the first row whose
/// last interval ends strictly before them.
fn rows(items: &[(Vertex, usize, &Interval)]) -> Vec<usize> {
    let mut ends: Vec<&Rational> = Vec::new();
    let mut out = Vec::with_capacity(items.len());
    for (_, _, iv) in items {
        match ends.iter().position(|r| **r < iv.l) {
            Some(k) => {
                ends[k] = &iv.r;
                out.push(k);
            }
            None => {
                ends.push(&iv.r);
                out.push(ends.len() - 1);
            }
        }
    }
    out
}

/// One labeled horizontal segment per interval: `v` for a vertex with a
/// single interval, `v_i` for its `i`-th interval otherwise.
pub fn render_svg(rep: &DIntervalRep) -> String {
    let mut items: Vec<(Vertex, usize, &Interval)> = rep
        .parts()
        .iter()
        .flat_map(|(&v, ps)| ps.iter().enumerate().map(move |(i, iv)| (v, i, iv)))
        .collect();
    items.sort_by(|a, b| (&a.2.l, &a.2.r, a.0, a.1).cmp(&(&b.2.l, &b.2.r, b.0, b.1)));
    let row = rows(&items);
    let nrows = row.iter().max().map_or(0, |r| r + 1);
    let height = 2.0 * MARGIN + ROW * nrows as f64 + 20.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    if let (Some(lo), Some(hi)) = (
        items.iter().map(|t| &t.2.l).min(),
        items.iter().map(|t| &t.2.r).max(),
    ) {
        let (lo, hi) = (lo.to_f64(), hi.to_f64());
        let span = if hi > lo { hi - lo } else { 1.0 };
        let scale = (WIDTH - 2.0 * MARGIN) / span;
        let x = |c: &Rational| MARGIN + (c.to_f64() - lo) * scale;
        for ((v, i, iv), r) in items.iter().zip(&row) {
            let y = MARGIN + ROW * (*r as f64 + 1.0);
            let (x1, x2) = (x(&iv.l), x(&iv.r));
            let label = if rep.get(*v).map_or(0, <[Interval]>::len) > 1 {
                format!(
                    "{}<tspan baseline-shift=\"sub\" font-size=\"8\">{}</tspan>",
                    v,
                    i + 1
                )
            } else {
                v.to_string()
            };
            writeln!(
                out,
                r#"  <g><title>{v}: [{}, {}]</title><line x1="{x1:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="black" stroke-width="2" stroke-linecap="round"/><text x="{:.2}" y="{:.2}" text-anchor="middle">{label}</text></g>"#,
                iv.l,
                iv.r,
                (x1 + x2) / 2.0,
                y - 5.0,
            )
            .unwrap();
        }
        let axis = MARGIN + ROW * (nrows as f64 + 1.0);
        writeln!(
            out,
            r##"  <path d="M{MARGIN:.2} {axis:.2} H{:.2}" stroke="#888" fill="none"/>"##,
            WIDTH - MARGIN
        )
        .unwrap();
        let (first, last) = (lo.ceil() as i64, hi.floor() as i64);
        if last - first <= 60 {
            for t in first..=last {
                let tx = x(&Rational::from(t));
                writeln!(
                    out,
                    r##"  <text x="{tx:.2}" y="{:.2}" text-anchor="middle" fill="#888">{t}</text>"##,
                    axis + 14.0
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
