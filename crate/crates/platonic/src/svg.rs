//! SVG 1.1 drawings of dissections.
//!
//! Coordinates are exact field values rounded to three decimals after
//! scaling; the y axis is flipped so the drawing matches the usual
//! orientation. Output depends only on the dissection and the scale.

use std::fmt::Write as _;

use platonic_core::tiling::{Dissection, Mode, Point};

const MARGIN: f64 = 12.0;
const PALETTE: [&str; 6] = ["#d95f02", "#1b9e77", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"];

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Render `d` at `scale` pixels per unit length.
pub fn render(d: &Dissection, scale: f64, title: &str) -> String {
    let target = d.target.vertices();
    let xs: Vec<f64> = target.iter().map(|p| p.x.to_f64()).collect();
    let ys: Vec<f64> = target.iter().map(|p| p.y.to_f64()).collect();
    let min_x = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let max_x = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min_y = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let max_y = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = (max_x - min_x) * scale + 2.0 * MARGIN;
    let height = (max_y - min_y) * scale + 2.0 * MARGIN;
    let project = |p: &Point| {
        let x = MARGIN + (p.x.to_f64() - min_x) * scale;
        let y = MARGIN + (max_y - p.y.to_f64()) * scale;
        format!("{},{}", num(x), num(y))
    };
    let points = |vs: &[Point]| vs.iter().map(project).collect::<Vec<_>>().join(" ");
    let opacity = match d.mode {
        Mode::Disjoint => "0.85",
        Mode::Covering => "0.35",
    };

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        num(width),
        num(height)
    );
    let _ = writeln!(w, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        w,
        r##"  <polygon class="target" points="{}" fill="none" stroke="#000000" stroke-width="2" stroke-dasharray="6 4"/>"##,
        points(&target)
    );
    for (i, piece) in d.pieces.iter().enumerate() {
        let kind = piece.basic().map_or("triangle", |b| b.kind.name());
        let _ = writeln!(
            w,
            r##"  <polygon class="piece" data-index="{i}" data-kind="{kind}" points="{}" fill="{}" fill-opacity="{opacity}" stroke="#222222" stroke-width="1"/>"##,
            points(piece.vertices()),
            PALETTE[i % PALETTE.len()]
        );
    }
    let _ = writeln!(w, "</svg>");
    out
}
