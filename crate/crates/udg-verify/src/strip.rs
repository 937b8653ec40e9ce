use serde::Serialize;
use udg_graph::{Embedding, Part};

use crate::geometry::dist;
use crate::{VerifyError, EXACT_UNIT_TOL};

/// Points may sit this far outside a band edge and still count as inside.
pub const BAND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StripReport {
    pub ok: bool,
    /// vertices outside their band
    pub outside: Vec<usize>,
    /// cross pairs with 0 < |d - 1| < q'' sigma
    pub annulus: Vec<(usize, usize, f64)>,
    pub exact_unit_pairs: usize,
    /// smallest |d - 1| over cross pairs that are not exact unit pairs
    pub min_cross_gap: Option<f64>,
    /// largest |y| in U and |y - 1| in W
    pub max_band_offset: f64,
    pub x_range: Option<(f64, f64)>,
}

/// U must lie in [0, delta] x [-sigma, sigma] and W in
/// [0, delta] x [1 - sigma, 1 + sigma]; cross distances must avoid
/// (1 - q'' sigma, 1 + q'' sigma) unless they are exact unit distances.
pub fn check_strip_conditions(
    emb: &Embedding,
    delta: f64,
    sigma: f64,
    q_dprime: f64,
) -> Result<StripReport, VerifyError> {
    let parts = emb.parts.as_ref().ok_or(VerifyError::MissingParts)?;
    let pts = &emb.points;
    let mut outside = Vec::new();
    let mut max_off = 0.0f64;
    let mut x_range: Option<(f64, f64)> = None;
    for (v, p) in pts.iter().enumerate() {
        let off = match parts[v] {
            Part::U => p.y.abs(),
            Part::W => (p.y - 1.0).abs(),
        };
        max_off = max_off.max(off);
        x_range = Some(x_range.map_or((p.x, p.x), |(a, b)| (a.min(p.x), b.max(p.x))));
        if off > sigma + BAND_TOL || p.x < -BAND_TOL || p.x > delta + BAND_TOL {
            outside.push(v);
        }
    }
    let band = q_dprime * sigma;
    let mut annulus = Vec::new();
    let mut exact = 0;
    let mut min_gap: Option<f64> = None;
    for u in 0..pts.len() {
        for w in u + 1..pts.len() {
            if parts[u] == parts[w] {
                continue;
            }
            let gap = (dist(pts[u], pts[w]) - 1.0).abs();
            if gap <= EXACT_UNIT_TOL {
                exact += 1;
                continue;
            }
            min_gap = Some(min_gap.map_or(gap, |m: f64| m.min(gap)));
            if gap < band {
                annulus.push((u, w, dist(pts[u], pts[w])));
            }
        }
    }
    Ok(StripReport {
        ok: outside.is_empty() && annulus.is_empty(),
        outside,
        annulus,
        exact_unit_pairs: exact,
        min_cross_gap: min_gap,
        max_band_offset: max_off,
        x_range,
    })
}
