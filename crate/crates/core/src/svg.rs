//! SVG rendering of lattice curves.

use std::fmt::Write as _;

use crate::curve::LatticeCurve;

/// Pixels per lattice unit.
pub const SCALE: i64 = 40;

/// Renders `curve` as a single polyline over its bounding box plus a
/// one-unit margin, with "up" drawn upward. A closed simple curve has its
/// interior shaded. The start vertex gets a small marker.
pub fn render_curve(curve: &LatticeCurve, grid: bool) -> String {
    let (lo, hi) = curve.bounding_box();
    let width = (hi.x - lo.x + 2) * SCALE;
    let height = (hi.y - lo.y + 2) * SCALE;
    let px = |x: i64| (x - lo.x + 1) * SCALE;
    let py = |y: i64| (hi.y - y + 1) * SCALE;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    if grid {
        writeln!(out, r##"<g stroke="#dddddd" stroke-width="1">"##).unwrap();
        for x in lo.x - 1..=hi.x + 1 {
            writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{height}"/>"#, px(x)).unwrap();
        }
        for y in lo.y - 1..=hi.y + 1 {
            writeln!(out, r#"<line x1="0" y1="{0}" x2="{width}" y2="{0}"/>"#, py(y)).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    let shaded = curve.is_closed() && curve.is_simple().unwrap_or(false) && !curve.is_empty();
    let fill = if shaded { "#cfe2f3" } else { "none" };
    let points: Vec<String> = curve
        .vertices()
        .iter()
        .map(|p| format!("{},{}", px(p.x), py(p.y)))
        .collect();
    writeln!(
        out,
        r#"<polyline points="{}" fill="{fill}" stroke="black" stroke-width="3" stroke-linejoin="round"/>"#,
        points.join(" ")
    )
    .unwrap();
    let start = curve.vertices()[0];
    writeln!(out, r#"<circle cx="{}" cy="{}" r="5" fill="red"/>"#, px(start.x), py(start.y)).unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
