//! Minimal SVG drawings of embeddings.

use std::fmt::Write;

use udg_graph::{Embedding, Part};

const SIZE: f64 = 1000.0;
const PAD: f64 = 40.0;

#[derive(Debug, Clone, Copy, Default)]
pub struct PlotOptions {
    /// draw radius-1/2 disks behind the points
    pub circles: bool,
}

/// Fixed 1000 px square, uniform scale. Strips `[0, delta] x [-sigma, sigma]`
/// and its translate by one are shaded when both constants are present.
pub fn render(emb: &Embedding, opts: PlotOptions) -> String {
    let pts = &emb.points;
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let r = if opts.circles { 0.5 } else { 0.0 };
    for p in pts {
        lo = (lo.0.min(p.x - r), lo.1.min(p.y - r));
        hi = (hi.0.max(p.x + r), hi.1.max(p.y + r));
    }
    if pts.is_empty() {
        lo = (0.0, 0.0);
        hi = (1.0, 1.0);
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-12);
    let k = (SIZE - 2.0 * PAD) / span;
    let sx = |x: f64| PAD + (x - lo.0) * k;
    // y up in the plane, down in SVG
    let sy = |y: f64| SIZE - PAD - (y - lo.1) * k;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let (Some(d), Some(sg)) = (emb.params.delta, emb.params.sigma) {
        for base in [0.0, 1.0] {
            let _ = writeln!(
                s,
                r##"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="#eeeeee" stroke="#999999"/>"##,
                sx(0.0),
                sy(base + sg),
                d * k,
                2.0 * sg * k
            );
        }
    }
    let colour = |v: usize| match emb.parts.as_ref().map(|p| p[v]) {
        Some(Part::U) => "#1f5fbf",
        Some(Part::W) => "#bf3f1f",
        None => "#222222",
    };
    if opts.circles {
        for (v, p) in pts.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="{}" stroke-opacity="0.3"/>"#,
                sx(p.x),
                sy(p.y),
                0.5 * k,
                colour(v)
            );
        }
    }
    for (u, v) in emb.target.edges() {
        let (a, b) = (pts[u], pts[v]);
        let _ = writeln!(
            s,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#555555" stroke-opacity="0.4"/>"##,
            sx(a.x),
            sy(a.y),
            sx(b.x),
            sy(b.y)
        );
    }
    for (v, p) in pts.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="4" fill="{}"><title>{v}</title></circle>"#,
            sx(p.x),
            sy(p.y),
            colour(v)
        );
    }
    s.push_str("</svg>\n");
    s
}
