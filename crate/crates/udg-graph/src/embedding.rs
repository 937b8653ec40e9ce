//! Point placements and their JSON form.
//!
//! ```json
//! {"target": "<graph6>", "params": {...}, "parts": "UUWW", "points": [[x, y], ...]}
//! ```
//!
//! Coordinates are written with the shortest decimal form that parses back
//! to the identical double, so files round-trip bit for bit.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bipartite::Part;
use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point { x: a[0], y: a[1] }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Parameter record attached to a construction. Every field is optional
/// because each construction sets only the constants it uses.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EmbeddingParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_prime: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_prime: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_dprime: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_total: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<f64>,
    /// twin offset actually used, when it differs from `t1 * epsilon`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twin_spacing: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub target: Graph,
    pub params: EmbeddingParams,
    pub points: Vec<Point>,
    pub parts: Option<Vec<Part>>,
}

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("malformed embedding JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad target graph: {0}")]
    Target(#[from] graph6::Graph6Error),
    #[error("target has {n} vertices but {points} points were given")]
    Coverage { n: usize, points: usize },
    #[error("coordinate of vertex {0} is not finite")]
    NonFinite(usize),
    #[error("parts string has length {got}, expected {expected}")]
    PartsLength { expected: usize, got: usize },
    #[error("parts string may only contain 'U' and 'W'")]
    PartsChar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    target: String,
    #[serde(default)]
    params: EmbeddingParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<String>,
    points: Vec<Point>,
}

impl Embedding {
    pub fn new(target: Graph, points: Vec<Point>) -> Result<Self, EmbeddingError> {
        let e = Embedding {
            target,
            params: EmbeddingParams::default(),
            points,
            parts: None,
        };
        e.validate()?;
        Ok(e)
    }

    pub fn with_params(mut self, params: EmbeddingParams) -> Self {
        self.params = params;
        self
    }

    pub fn with_parts(mut self, parts: Vec<Part>) -> Self {
        assert_eq!(parts.len(), self.points.len());
        self.parts = Some(parts);
        self
    }

    pub fn validate(&self) -> Result<(), EmbeddingError> {
        if self.points.len() != self.target.n() {
            return Err(EmbeddingError::Coverage {
                n: self.target.n(),
                points: self.points.len(),
            });
        }
        if let Some(i) = self.points.iter().position(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(EmbeddingError::NonFinite(i));
        }
        if let Some(parts) = &self.parts {
            if parts.len() != self.points.len() {
                return Err(EmbeddingError::PartsLength {
                    expected: self.points.len(),
                    got: parts.len(),
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let wire = Wire {
            target: graph6::encode(&self.target),
            params: self.params.clone(),
            parts: self.parts.as_ref().map(|p| p.iter().map(|p| p.as_char()).collect()),
            points: self.points.clone(),
        };
        serde_json::to_string(&wire).expect("finite coordinates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, EmbeddingError> {
        let wire: Wire = serde_json::from_str(s)?;
        let target = graph6::decode(&wire.target)?;
        let parts = match wire.parts {
            None => None,
            Some(s) => Some(
                s.chars()
                    .map(|c| match c {
                        'U' => Ok(Part::U),
                        'W' => Ok(Part::W),
                        _ => Err(EmbeddingError::PartsChar),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let e = Embedding {
            target,
            params: wire.params,
            points: wire.points,
            parts,
        };
        e.validate()?;
        Ok(e)
    }

    /// Same placement for an induced subgraph on `vertices`.
    pub fn restrict(&self, vertices: &[usize]) -> Embedding {
        Embedding {
            target: self.target.induced_subgraph(vertices),
            params: self.params.clone(),
            points: vertices.iter().map(|&v| self.points[v]).collect(),
            parts: self.parts.as_ref().map(|p| vertices.iter().map(|&v| p[v]).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let pts = vec![
            Point::new(0.1, 1.0 / 3.0),
            Point::new(-2.0f64.sqrt(), 1e-300),
            Point::new(f64::MIN_POSITIVE, 0.0),
        ];
        let e = Embedding::new(Graph::path(3), pts)
            .unwrap()
            .with_parts(vec![Part::U, Part::W, Part::U]);
        let back = Embedding::from_json(&e.to_json()).unwrap();
        for (a, b) in e.points.iter().zip(&back.points) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
        }
        assert_eq!(back, e);
    }

    #[test]
    fn coverage_checked() {
        let bad = r#"{"target":"Dhc","points":[[0,0]]}"#;
        assert!(matches!(
            Embedding::from_json(bad),
            Err(EmbeddingError::Coverage { n: 5, points: 1 })
        ));
    }
}
