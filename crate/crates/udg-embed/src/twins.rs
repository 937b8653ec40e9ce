//! Copies of twin edges and repeated legs.

use udg_graph::{Embedding, Graph};

use crate::vec2::V2;
use crate::EmbedError;

/// Groups of vertices to be placed as translated copies of already placed
/// sources. Copy `j` of the class is shifted `j + 1` steps along `axis`.
#[derive(Debug, Clone, PartialEq)]
pub struct CopyClass {
    pub axis: V2,
    /// per copy, pairs `(source, new vertex)`
    pub copies: Vec<Vec<(usize, usize)>>,
    /// length scale of the surrounding construction
    pub scale: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Spacing {
    /// step `scale * factor` along the class axis
    Fixed(f64),
    /// best of a few steps and both sides, scored by the resulting margin
    Adaptive,
}

const FACTORS: [f64; 4] = [1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0, 1.0 / 128.0];

/// Smallest margin over pairs touching `fresh`: `d - 1` for non-edges and
/// `1 - d` for edges that are not exact unit pairs.
fn score(g: &Graph, pts: &[Option<V2>], fresh: &[usize]) -> f64 {
    let mut best = f64::INFINITY;
    for &u in fresh {
        let pu = pts[u].expect("fresh vertex placed");
        for (v, pv) in pts.iter().enumerate() {
            let Some(pv) = pv else { continue };
            if v == u || (fresh.contains(&v) && v < u) {
                continue;
            }
            let d = pu.dist(*pv);
            let m = if g.has_edge(u, v) {
                if (d - 1.0).abs() <= udg_verify::EXACT_UNIT_TOL {
                    continue;
                }
                1.0 - d
            } else {
                d - 1.0
            };
            best = best.min(m);
        }
    }
    best
}

fn apply(pts: &mut [Option<V2>], c: &CopyClass, step: V2) -> Result<Vec<usize>, EmbedError> {
    let mut fresh = Vec::new();
    for (j, copy) in c.copies.iter().enumerate() {
        for &(src, new) in copy {
            let p = pts[src].ok_or_else(|| EmbedError::Precondition(format!("copy source {src} unplaced")))?;
            pts[new] = Some(p + step * (j + 1) as f64);
            fresh.push(new);
        }
    }
    Ok(fresh)
}

/// Places every class in order; returns the step length used per class.
pub fn place_copies(
    g: &Graph,
    pts: &mut [Option<V2>],
    classes: &[CopyClass],
    spacing: Spacing,
) -> Result<Vec<f64>, EmbedError> {
    let mut used = Vec::with_capacity(classes.len());
    for c in classes {
        let axis = c.axis.unit();
        let step = match spacing {
            Spacing::Fixed(f) => axis * (c.scale * f),
            Spacing::Adaptive => {
                let mut best: Option<(f64, V2)> = None;
                for f in FACTORS {
                    for sign in [1.0, -1.0] {
                        let step = axis * (sign * c.scale * f);
                        let mut trial = pts.to_vec();
                        let fresh = apply(&mut trial, c, step)?;
                        let s = score(g, &trial, &fresh);
                        if best.is_none_or(|(b, _)| s > b) {
                            best = Some((s, step));
                        }
                    }
                }
                best.map(|b| b.1).unwrap_or(axis * c.scale)
            }
        };
        apply(pts, c, step)?;
        used.push(step.norm());
    }
    Ok(used)
}

/// Extends an embedding of a twin-free part of `target` to all of it.
/// `emb` places `host[i]` of `target` at `emb.points[i]`; every other vertex
/// must occur as a new vertex in `classes`.
pub fn duplicate_twins(
    emb: &Embedding,
    host: &[usize],
    target: &Graph,
    classes: &[CopyClass],
    spacing: Spacing,
) -> Result<Embedding, EmbedError> {
    if host.len() != emb.points.len() {
        return Err(EmbedError::Parameter("host map length differs from embedding".into()));
    }
    let mut pts: Vec<Option<V2>> = vec![None; target.n()];
    for (i, &v) in host.iter().enumerate() {
        pts[v] = Some(emb.points[i].into());
    }
    let used = place_copies(target, &mut pts, classes, spacing)?;
    let points = pts
        .iter()
        .enumerate()
        .map(|(v, p)| {
            p.map(Into::into)
                .ok_or(EmbedError::Precondition(format!("vertex {v} not covered")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut params = emb.params.clone();
    params.twin_spacing = used.iter().copied().reduce(f64::min);
    let mut out = Embedding::new(target.clone(), points)
        .map_err(|e| EmbedError::Precondition(e.to_string()))?
        .with_params(params);
    if let Some(p) = &emb.parts {
        let mut parts = vec![None; target.n()];
        for (i, &v) in host.iter().enumerate() {
            parts[v] = Some(p[i]);
        }
        for c in classes {
            for copy in &c.copies {
                for &(s, n) in copy {
                    parts[n] = parts[s];
                }
            }
        }
        if let Some(parts) = parts.into_iter().collect::<Option<Vec<_>>>() {
            out = out.with_parts(parts);
        }
    }
    Ok(out)
}
