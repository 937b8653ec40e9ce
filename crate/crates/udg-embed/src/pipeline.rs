//! End-to-end constructions for class members and their complements.

use serde::Serialize;
use udg_graph::{BipartiteGraph, Embedding, EmbeddingParams, Graph, Part, Point};
use udg_structure::{recognize_class_x, Decomposition, Piece, Recognition};
use udg_verify::{check_strip_conditions, verify_embedding, DEFAULT_SLACK};

use crate::block::BlockGeometry;
use crate::layout::{layout_chain, layout_lobster, Layout};
use crate::tau::{tau_hypothesis, tau_transform, TauCheck};
use crate::twins::{place_copies, Spacing};
use crate::vec2::{v2, V2};
use crate::EmbedError;

/// Smallest block parameter tried before giving up.
pub const EPS_FLOOR: f64 = 1.0 / 1048576.0;

/// Margin constant demanded of the star construction on `n` vertices.
pub fn q_dprime(n: usize) -> f64 {
    1.0 / (64f64.powi(4) * 200.0 * (n.max(1) as f64).powi(2))
}

/// Starting block parameter for `n` vertices.
pub fn default_epsilon(n: usize) -> f64 {
    (1.0 / (15.0 * n.max(1) as f64)).min(1.0 / 128.0) / 2.0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarCertificate {
    pub epsilon: f64,
    pub mu: f64,
    pub delta: f64,
    pub sigma: f64,
    pub q_dprime: f64,
    pub exact_unit_pairs: usize,
    /// smallest |d - 1| over cross pairs that are not exact unit pairs
    pub min_cross_gap: Option<f64>,
    pub twin_spacing: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplementCertificate {
    pub star: StarCertificate,
    pub scale: f64,
    /// smallest |d - 1| over cross pairs after scaling
    pub scaled_min_gap: f64,
    pub tau: TauCheck,
    /// strip embedding after scaling, before the polar map
    #[serde(skip)]
    pub scaled: Embedding,
}

/// `y` shift that centres `U` on 0 and `W` on 1 as well as possible.
fn band_shift(pts: &[V2], parts: &[Part], verts: impl Iterator<Item = usize>) -> f64 {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in verts {
        let y = match parts[v] {
            Part::U => pts[v].y,
            Part::W => pts[v].y - 1.0,
        };
        lo = lo.min(y);
        hi = hi.max(y);
    }
    if lo.is_finite() {
        0.5 * (lo + hi)
    } else {
        0.0
    }
}

/// Uncertified placement of all vertices of `d` at block parameter `eps`.
/// Returns the points and the smallest twin step used.
fn place(d: &Decomposition, target: &Graph, eps: f64, spacing: Spacing) -> Result<(Vec<V2>, Option<f64>), EmbedError> {
    let geo = BlockGeometry::new(eps);
    let mut all: Vec<Option<V2>> = vec![None; d.n];
    let mut classes = Vec::new();
    let mut comps: Vec<(Vec<usize>, f64, f64)> = Vec::new();
    for c in &d.components {
        let mut lay = Layout::new(d.parts.clone());
        if c.strips().next().is_some() {
            layout_chain(&mut lay, c, &geo)?;
        } else {
            for p in &c.pieces {
                if let Piece::Lobster(l) = p {
                    layout_lobster(&mut lay, l, geo.lines.mu)?;
                }
            }
        }
        let verts: Vec<usize> = (0..d.n).filter(|&v| lay.pts[v].is_some()).collect();
        let pts: Vec<V2> = lay.pts.iter().map(|p| p.unwrap_or(v2(0.0, 0.0))).collect();
        let t = band_shift(&pts, &d.parts, verts.iter().copied());
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for &v in &verts {
            let p = pts[v] - v2(0.0, t);
            all[v] = Some(p);
            lo = lo.min(p.x);
            hi = hi.max(p.x);
        }
        classes.extend(lay.classes);
        comps.push((verts, lo, hi));
    }
    // side by side, far enough apart that no cross pair reaches distance one
    let (mut umax, mut wmin) = (f64::NEG_INFINITY, f64::INFINITY);
    for (v, p) in all.iter().enumerate() {
        if let Some(p) = p {
            match d.parts[v] {
                Part::U => umax = umax.max(p.y),
                Part::W => wmin = wmin.min(p.y),
            }
        }
    }
    let dy = (wmin - umax).min(1.0);
    let gap = (1.0 - dy * dy).max(0.0).sqrt() + 2.0 * eps;
    let mut x = 0.0;
    for (verts, lo, hi) in &comps {
        for &v in verts {
            if let Some(p) = all[v].as_mut() {
                p.x += x - lo;
            }
        }
        x += hi - lo + gap;
    }
    let used = place_copies(target, &mut all, &classes, spacing)?;
    for &(removed, rep) in &d.collapsed {
        all[removed] = all[rep];
    }
    let mut pts = Vec::with_capacity(d.n);
    for (v, p) in all.into_iter().enumerate() {
        pts.push(p.ok_or_else(|| EmbedError::Precondition(format!("vertex {v} left unplaced")))?);
    }
    let xmin = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let t = band_shift(&pts, &d.parts, 0..d.n);
    for p in &mut pts {
        *p = *p - v2(xmin, t);
    }
    Ok((pts, used.into_iter().reduce(f64::min)))
}

fn star_target(g: &Graph, parts: &[Part]) -> Result<Graph, EmbedError> {
    Ok(BipartiteGraph::new(g.clone(), parts.to_vec(), false)
        .map_err(|e| EmbedError::Parameter(format!("parts do not split the graph: {e}")))?
        .star_op()
        .into_graph())
}

fn to_points(pts: &[V2]) -> Vec<Point> {
    pts.iter().map(|&p| p.into()).collect()
}

/// One certified attempt at block parameter `eps`.
fn star_attempt(
    g: &Graph,
    d: &Decomposition,
    eps: f64,
    spacing: Spacing,
) -> Result<(Embedding, StarCertificate), String> {
    let target = star_target(g, &d.parts).map_err(|e| e.to_string())?;
    let (pts, twin) = place(d, &target, eps, spacing).map_err(|e| e.to_string())?;
    let q = q_dprime(g.n());
    let mu = BlockGeometry::new(eps).lines.mu;
    let mut emb = Embedding::new(target.clone(), to_points(&pts))
        .map_err(|e| e.to_string())?
        .with_parts(d.parts.clone());
    let delta = pts.iter().map(|p| p.x).fold(0.0, f64::max);
    if delta >= 1.0 / 3.0 {
        return Err(format!("width {delta} not below 1/3"));
    }
    let r = verify_embedding(&target, &emb, DEFAULT_SLACK).map_err(|e| e.to_string())?;
    if !r.ok {
        let v = &r.violations[0];
        return Err(format!(
            "{} violations, first ({}, {}) at {}",
            r.violations.len(),
            v.u,
            v.v,
            v.dist
        ));
    }
    let mut sigma = 0.0f64;
    for (p, part) in pts.iter().zip(&d.parts) {
        sigma = sigma.max(match part {
            Part::U => p.y.abs(),
            Part::W => (p.y - 1.0).abs(),
        });
    }
    let s = check_strip_conditions(&emb, delta, sigma, q).map_err(|e| e.to_string())?;
    if !s.ok {
        return Err(format!(
            "strip conditions fail: {} outside, {} in annulus",
            s.outside.len(),
            s.annulus.len()
        ));
    }
    emb = emb.with_params(EmbeddingParams {
        construction: Some("class-x-star".into()),
        epsilon: Some(eps),
        mu: Some(mu),
        delta: Some(delta),
        sigma: Some(sigma),
        q_dprime: Some(q),
        twin_spacing: twin,
        ..Default::default()
    });
    let cert = StarCertificate {
        epsilon: eps,
        mu,
        delta,
        sigma,
        q_dprime: q,
        exact_unit_pairs: s.exact_unit_pairs,
        min_cross_gap: s.min_cross_gap,
        twin_spacing: twin,
    };
    Ok((emb, cert))
}

fn member(g: &Graph) -> Result<Decomposition, EmbedError> {
    match recognize_class_x(g)? {
        Recognition::Member(d) => Ok(d),
        Recognition::Forbidden(w) => Err(EmbedError::NotMember(w)),
    }
}

/// Representation of the star of a decomposed graph, halving the block
/// parameter from `eps` until it certifies.
pub fn embed_decomposition_star(
    g: &Graph,
    d: &Decomposition,
    eps: f64,
    spacing: Spacing,
) -> Result<(Embedding, StarCertificate), EmbedError> {
    if !(eps > 0.0 && eps < 1.0 / 128.0 + 1e-15) {
        return Err(EmbedError::Parameter(format!("epsilon = {eps} outside (0, 1/128]")));
    }
    let mut e = eps;
    let mut last = String::new();
    while e >= EPS_FLOOR {
        match star_attempt(g, d, e, spacing) {
            Ok(r) => return Ok(r),
            Err(m) => last = m,
        }
        e /= 2.0;
    }
    Err(EmbedError::Certification {
        epsilon: e * 2.0,
        reason: last,
    })
}

/// Star representation of a class member with certified strip constants.
pub fn embed_class_x_star(g: &Graph) -> Result<(Embedding, StarCertificate), EmbedError> {
    let d = member(g)?;
    embed_decomposition_star(g, &d, default_epsilon(g.n()), Spacing::Adaptive)
}

/// Scales by `1 - m/2` where `m` is the smallest non-exact cross gap, then
/// re-centres the bands. Returns the scaled points and their smallest gap.
fn scale_star(emb: &Embedding, m: f64) -> (Embedding, f64, f64) {
    let s = 1.0 - m / 2.0;
    let parts = emb.parts.as_ref().expect("star output has parts");
    let pts: Vec<V2> = emb.points.iter().map(|&p| V2::from(p) * s).collect();
    let t = band_shift(&pts, parts, 0..pts.len());
    let pts: Vec<V2> = pts.into_iter().map(|p| p - v2(0.0, t)).collect();
    let mut gap = f64::INFINITY;
    for u in 0..pts.len() {
        for w in u + 1..pts.len() {
            if parts[u] != parts[w] {
                gap = gap.min((pts[u].dist(pts[w]) - 1.0).abs());
            }
        }
    }
    let mut out = emb.clone();
    out.points = to_points(&pts);
    out.params.scale = Some(s);
    (out, s, gap)
}

/// Representation of the complement of a class member: star construction,
/// scaling away the exact unit pairs, then the polar map.
pub fn embed_class_x_complement(g: &Graph) -> Result<(Embedding, ComplementCertificate), EmbedError> {
    let d = member(g)?;
    let mut e = default_epsilon(g.n());
    let mut last = String::new();
    while e >= EPS_FLOOR {
        let (star, cert) = match star_attempt(g, &d, e, Spacing::Adaptive) {
            Ok(r) => r,
            Err(m) => {
                last = m;
                e /= 2.0;
                continue;
            }
        };
        let m = cert.min_cross_gap.unwrap_or(cert.sigma.max(e * e));
        let (scaled, s, gap) = scale_star(&star, m);
        let check = tau_hypothesis(&scaled)?;
        if check.ok {
            let mut out = tau_transform(&scaled)?;
            out.params.construction = Some("class-x-complement".into());
            return Ok((
                out,
                ComplementCertificate {
                    star: cert,
                    scale: s,
                    scaled_min_gap: gap,
                    tau: check,
                    scaled,
                },
            ));
        }
        last = format!("polar map hypothesis fails: {} pairs in annulus", check.annulus.len());
        e /= 2.0;
    }
    Err(EmbedError::Certification {
        epsilon: e * 2.0,
        reason: last,
    })
}
