//! The polar map that turns a strip representation into one of the
//! bipartite complement.

use serde::Serialize;
use udg_graph::{BipartiteGraph, Embedding, Part, Point};

use crate::polar::PolarPoint;
use crate::EmbedError;

const SIGMA_MAX: f64 = 1.0 / 12.0;
const DELTA_MAX: f64 = 1.0 / 3.0;
const TOL: f64 = 1e-12;

/// Image of one point. `U` points are read as `(alpha, y)`, `W` points as
/// `(alpha, 1 + y)`.
pub fn tau_point(p: Point, part: Part) -> Point {
    let pp = match part {
        Part::U => PolarPoint {
            radius: 0.5 + p.y,
            angle: -std::f64::consts::FRAC_PI_2 + 2.0 * p.x,
        },
        Part::W => PolarPoint {
            radius: 0.5 - (p.y - 1.0),
            angle: std::f64::consts::FRAC_PI_2 + 2.0 * p.x,
        },
    };
    pp.to_cartesian().into()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TauCheck {
    pub ok: bool,
    pub sigma: f64,
    pub delta: f64,
    /// points with negative x
    pub outside: Vec<usize>,
    /// cross pairs with |d - 1| <= 100 sigma^2
    pub annulus: Vec<(usize, usize, f64)>,
}

/// Checks the preconditions of [`tau_transform`]: band offset below 1/12,
/// x in [0, 1/3), and no cross distance within `100 sigma^2` of one.
pub fn tau_hypothesis(emb: &Embedding) -> Result<TauCheck, EmbedError> {
    let parts = emb
        .parts
        .as_ref()
        .ok_or_else(|| EmbedError::Parameter("embedding needs part labels".into()))?;
    let mut sigma = 0.0f64;
    let mut delta = 0.0f64;
    let mut outside = Vec::new();
    for (v, p) in emb.points.iter().enumerate() {
        let off = match parts[v] {
            Part::U => p.y.abs(),
            Part::W => (p.y - 1.0).abs(),
        };
        sigma = sigma.max(off);
        delta = delta.max(p.x);
        if p.x < -TOL {
            outside.push(v);
        }
    }
    let band = 100.0 * sigma * sigma;
    let mut annulus = Vec::new();
    let pts = &emb.points;
    for u in 0..pts.len() {
        for w in u + 1..pts.len() {
            if parts[u] != parts[w] {
                let d = (pts[u].x - pts[w].x).hypot(pts[u].y - pts[w].y);
                if (d - 1.0).abs() <= band {
                    annulus.push((u, w, d));
                }
            }
        }
    }
    Ok(TauCheck {
        ok: outside.is_empty() && annulus.is_empty() && sigma < SIGMA_MAX && delta < DELTA_MAX,
        sigma,
        delta,
        outside,
        annulus,
    })
}

/// Applies the map pointwise after checking its hypotheses. The target of
/// the result is the bipartite complement of the input target, with both
/// parts cliques.
pub fn tau_transform(emb: &Embedding) -> Result<Embedding, EmbedError> {
    let check = tau_hypothesis(emb)?;
    if !check.ok {
        return Err(EmbedError::Hypothesis(Box::new(check)));
    }
    let parts = emb.parts.clone().expect("checked above");
    let co = BipartiteGraph::new(emb.target.clone(), parts.clone(), true)
        .or_else(|_| BipartiteGraph::new(emb.target.clone(), parts.clone(), false).map(|b| b.star_op()))
        .map_err(|e| EmbedError::Parameter(format!("target does not respect the parts: {e}")))?;
    let target = co.bipartite_complement().into_graph();
    let points = emb.points.iter().zip(&parts).map(|(&p, &q)| tau_point(p, q)).collect();
    let mut params = emb.params.clone();
    params.construction = Some("tau".into());
    // strip constants describe the input only
    params.delta = None;
    params.sigma = None;
    Ok(Embedding::new(target, points)
        .map_err(|e| EmbedError::Precondition(e.to_string()))?
        .with_params(params)
        .with_parts(parts))
}

/// Offset of the point on ray `R(beta)` at unit distance from the image of
/// `(0, 1 + a)`, closed form.
pub fn special_value_f(beta: f64, a: f64) -> f64 {
    let s = (2.0 * beta).sin();
    let c = beta.cos();
    a - c * c - 2.0 * a * beta.sin().powi(2) + (1.0 - (0.5 - a).powi(2) * s * s).sqrt()
}

/// The same offset found by bisection on the ray.
pub fn special_value_f_numeric(beta: f64, a: f64) -> f64 {
    let apex = tau_point(Point::new(0.0, 1.0 + a), Part::W);
    let dist = |r: f64| {
        let q = PolarPoint {
            radius: r,
            angle: -std::f64::consts::FRAC_PI_2 + 2.0 * beta,
        }
        .to_cartesian();
        (q.x - apex.x).hypot(q.y - apex.y)
    };
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if dist(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi) - 0.5
}

/// Offset of the special point `C`: `a + 1 - sqrt(1 - beta^2)`.
pub fn special_value_c(beta: f64, a: f64) -> f64 {
    a + 1.0 - (1.0 - beta * beta).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_points_map_to_opposite_halves() {
        let a = tau_point(Point::new(0.0, 1.0), Part::W);
        let b = tau_point(Point::new(0.0, 0.0), Part::U);
        assert!((a.x - 0.5).abs() < 1e-15 && a.y.abs() < 1e-15);
        assert!((b.x + 0.5).abs() < 1e-15 && b.y.abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_bisection() {
        for &(b, a) in &[(0.0, 0.0), (0.1, 0.02), (0.3, -0.08), (1.0 / 3.0, 1.0 / 12.0)] {
            assert!((special_value_f(b, a) - special_value_f_numeric(b, a)).abs() < 1e-13);
        }
    }
}
