use std::fmt::Write;

use super::layout::Layout;
use super::DrawingCert;
use crate::geometry::Point;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

/// One SVG document for a certificate and a layout of its planarization.
/// Each base edge is drawn as a single polyline through its crossings, so
/// crossings show up as plain transversal intersections; thick edges get a
/// heavier stroke, and original vertices carry their labels.
pub fn render_svg(cert: &DrawingCert, layout: &Layout<f64>) -> String {
    let pts: Vec<&Point<f64>> = layout.routes.values().flatten().chain(layout.positions.values()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in &pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1e-9);
    let tx = |p: &Point<f64>| (MARGIN + (p.x - x0) * scale, SIZE - MARGIN - (p.y - y0) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let base = cert.base();
    let p = &layout.planarization;
    for (id, _) in base.graph().edges() {
        let mut line: Vec<(f64, f64)> = Vec::new();
        for seg in &p.chains[&id] {
            for q in &layout.routes[seg] {
                let xy = tx(q);
                if line.last() != Some(&xy) {
                    line.push(xy);
                }
            }
        }
        let points = line.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect::<Vec<_>>().join(" ");
        let width = if base.is_thick(id) { 3.5 } else { 1.0 };
        writeln!(
            out,
            r#"<polyline data-edge="{}" points="{points}" fill="none" stroke="black" stroke-width="{width}"/>"#,
            id.0
        )
        .unwrap();
    }
    for (v, label) in base.graph().labeled_vertices() {
        let (x, y) = tx(&layout.positions[&v]);
        writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#).unwrap();
        let text = label.map_or_else(|| v.0.to_string(), escape);
        writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="9" font-family="sans-serif">{text}</text>"#,
            x + 4.0,
            y - 4.0
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::layout::{layout, OuterFace};
    use crate::drawing::k5_one_crossing;

    #[test]
    fn one_polyline_per_edge() {
        let cert = k5_one_crossing();
        let l = layout(&cert, OuterFace::Largest).unwrap();
        let svg = render_svg(&cert, &l);
        assert_eq!(svg.matches("<polyline").count(), 10);
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(svg.starts_with("<svg"));
    }
}
