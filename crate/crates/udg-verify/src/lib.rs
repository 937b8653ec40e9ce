//! Independent checks for claimed unit disk representations.
//!
//! Nothing here knows how a placement was built; only the point type is
//! shared with the constructions.

pub mod convexity;
pub mod geometry;
pub mod strip;

use serde::Serialize;
use thiserror::Error;
use udg_graph::{Embedding, Graph};

pub use convexity::{check_convexity_constraints, ConvexityReport, CrossingFailure, PatternKind};
pub use strip::{check_strip_conditions, StripReport};

/// Default numeric slack for adjacency decisions.
pub const DEFAULT_SLACK: f64 = 1e-9;
/// Pairs closer than this to distance one count as exact unit pairs.
pub const EXACT_UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("graph has {graph} vertices but the embedding places {points}")]
    Coverage { graph: usize, points: usize },
    #[error("negative slack {0}")]
    Slack(f64),
    #[error("embedding carries no part labels")]
    MissingParts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Edge,
    NonEdge,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub dist: f64,
    pub expected: Relation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// 1 minus the longest edge; `None` without edges
    pub min_edge_slack: Option<f64>,
    /// shortest non-edge minus 1; `None` without non-edges
    pub min_nonedge_margin: Option<f64>,
    /// edges within [`EXACT_UNIT_TOL`] of length one
    pub exact_unit_edges: usize,
    /// smallest |d - 1| over pairs that are not exact unit edges
    pub min_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strip_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convexity_ok: Option<bool>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Checks `uv in E  <=>  |p_u - p_v| <= 1` up to `slack`: edges need
/// `d <= 1 + slack`, non-edges `d > 1 - slack`. Exact margins are reported
/// so callers can hold each construction to its own bound.
pub fn verify_embedding(g: &Graph, emb: &Embedding, slack: f64) -> Result<VerificationReport, VerifyError> {
    if emb.points.len() != g.n() {
        return Err(VerifyError::Coverage {
            graph: g.n(),
            points: emb.points.len(),
        });
    }
    if slack.is_nan() || slack < 0.0 {
        return Err(VerifyError::Slack(slack));
    }
    let pts = &emb.points;
    let mut violations = Vec::new();
    let mut max_edge: Option<f64> = None;
    let mut min_non: Option<f64> = None;
    let mut min_gap: Option<f64> = None;
    let mut exact = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let d = geometry::dist(pts[u], pts[v]);
            let edge = g.has_edge(u, v);
            if edge {
                max_edge = Some(max_edge.map_or(d, |m: f64| m.max(d)));
                if d > 1.0 + slack {
                    violations.push(Violation {
                        u,
                        v,
                        dist: d,
                        expected: Relation::Edge,
                    });
                }
            } else {
                min_non = Some(min_non.map_or(d, |m: f64| m.min(d)));
                if d <= 1.0 - slack {
                    violations.push(Violation {
                        u,
                        v,
                        dist: d,
                        expected: Relation::NonEdge,
                    });
                }
            }
            let gap = (d - 1.0).abs();
            if edge && gap <= EXACT_UNIT_TOL {
                exact += 1;
            } else {
                min_gap = Some(min_gap.map_or(gap, |m: f64| m.min(gap)));
            }
        }
    }
    Ok(VerificationReport {
        ok: violations.is_empty(),
        violations,
        min_edge_slack: max_edge.map(|m| 1.0 - m),
        min_nonedge_margin: min_non.map(|m| m - 1.0),
        exact_unit_edges: exact,
        min_gap,
        strip_ok: None,
        convexity_ok: None,
    })
}

/// Largest distance inside each part; both must stay within `1 + slack`
/// for a co-bipartite target.
pub fn part_diameters(emb: &Embedding) -> Result<(f64, f64), VerifyError> {
    let parts = emb.parts.as_ref().ok_or(VerifyError::MissingParts)?;
    let mut diam = [0.0f64; 2];
    for u in 0..emb.points.len() {
        for v in u + 1..emb.points.len() {
            if parts[u] == parts[v] {
                let i = (parts[u] == udg_graph::Part::W) as usize;
                diam[i] = diam[i].max(geometry::dist(emb.points[u], emb.points[v]));
            }
        }
    }
    Ok((diam[0], diam[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use udg_graph::Point;

    fn emb(g: &Graph, pts: &[(f64, f64)]) -> Embedding {
        Embedding::new(g.clone(), pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn unit_square_is_c4() {
        let g = Graph::cycle(4);
        let e = emb(&g, &[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let r = verify_embedding(&g, &e, DEFAULT_SLACK).unwrap();
        assert!(r.ok);
        assert_eq!(r.exact_unit_edges, 4);
        assert!((r.min_nonedge_margin.unwrap() - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(r.min_edge_slack, Some(0.0));
    }

    #[test]
    fn wrong_relation_reported() {
        let g = Graph::path(3);
        let e = emb(&g, &[(0., 0.), (0.45, 0.), (0.9, 0.)]);
        let r = verify_embedding(&g, &e, DEFAULT_SLACK).unwrap();
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        assert_eq!((r.violations[0].u, r.violations[0].v), (0, 2));
        assert_eq!(r.violations[0].expected, Relation::NonEdge);
    }

    #[test]
    fn coverage_error() {
        let e = emb(&Graph::path(2), &[(0., 0.), (1., 0.)]);
        assert_eq!(
            verify_embedding(&Graph::path(3), &e, 0.0),
            Err(VerifyError::Coverage { graph: 3, points: 2 })
        );
    }

    #[test]
    fn empty_graph_has_no_margins() {
        let g = Graph::empty(0);
        let r = verify_embedding(&g, &emb(&g, &[]), 0.0).unwrap();
        assert!(r.ok && r.min_gap.is_none() && r.min_edge_slack.is_none());
    }
}
