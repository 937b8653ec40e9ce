use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use udg_graph::{Embedding, EmbeddingParams, Graph, Point};
use udg_verify::verify_embedding;

use crate::potential::potential_grad;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub iterations: usize,
    pub step_initial: f64,
    pub step_final: f64,
    pub seed: u64,
    /// separation demanded by the potential; results verify at half of it
    pub target_slack: f64,
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 64,
            iterations: 4000,
            step_initial: 0.05,
            step_final: 1e-4,
            seed: 0,
            target_slack: 1e-3,
            max_vertices: 16,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.restarts == 0 || self.iterations == 0 {
            return Err("restarts and iterations must be positive".into());
        }
        if !(self.step_initial > 0.0 && self.step_final > 0.0 && self.step_final <= self.step_initial) {
            return Err("steps must be positive and non-increasing".into());
        }
        if !(self.target_slack > 0.0 && self.target_slack < 0.5) {
            return Err("target slack must lie in (0, 0.5)".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// `None` means inconclusive, never "not a unit disk graph"
    pub embedding: Option<Embedding>,
    pub best_potential: f64,
    /// restart that produced the result, or the one with lowest potential
    pub restart: usize,
}

/// Gradient descent on the violation potential from uniform starts in
/// `[0, sqrt n]^2`, with a geometric step schedule. Restarts run in order and
/// the first one whose result verifies with every pair at least half the
/// target slack away from distance one is kept.
pub fn search_embedding(g: &Graph, cfg: &SearchConfig) -> Result<SearchResult, String> {
    cfg.validate()?;
    let n = g.n();
    if n > cfg.max_vertices {
        return Err(format!("{n} vertices exceed the search cap {}", cfg.max_vertices));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let side = (n.max(1) as f64).sqrt();
    let decay = (cfg.step_final / cfg.step_initial).powf(1.0 / cfg.iterations.max(2) as f64);
    let mut best = (f64::INFINITY, 0);
    let mut grad = vec![0.0; 2 * n];
    for r in 0..cfg.restarts {
        let mut x: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(0.0..side)).collect();
        let mut step = cfg.step_initial;
        let mut p = f64::INFINITY;
        for _ in 0..cfg.iterations {
            p = potential_grad(g, &x, cfg.target_slack, &mut grad);
            if p == 0.0 {
                break;
            }
            for (xi, gi) in x.iter_mut().zip(&grad) {
                *xi -= step * gi;
            }
            step *= decay;
        }
        if p < best.0 {
            best = (p, r);
        }
        let pts = (0..n).map(|v| Point::new(x[2 * v], x[2 * v + 1])).collect();
        let emb = Embedding::new(g.clone(), pts)
            .map_err(|e| e.to_string())?
            .with_params(EmbeddingParams {
                construction: Some("search".into()),
                ..Default::default()
            });
        let rep = verify_embedding(g, &emb, 0.0).map_err(|e| e.to_string())?;
        let half = cfg.target_slack / 2.0;
        let separated =
            rep.min_edge_slack.is_none_or(|m| m >= half) && rep.min_nonedge_margin.is_none_or(|m| m >= half);
        if rep.ok && separated {
            return Ok(SearchResult {
                embedding: Some(emb),
                best_potential: p,
                restart: r,
            });
        }
    }
    Ok(SearchResult {
        embedding: None,
        best_potential: best.0,
        restart: best.1,
    })
}
