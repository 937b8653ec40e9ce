use std::f64::consts::PI;

use udg_graph::{Embedding, EmbeddingParams, Graph, Point};

use crate::EmbedError;

/// Open-closed interval of radii for which the rim chords split correctly:
/// `2 rho sin(k pi/(2k+1)) > 1`, `2 rho sin((k-1) pi/(2k+1)) <= 1`, `rho <= 1`.
pub fn feasible_radius(k: usize) -> (f64, f64) {
    let m = (2 * k + 1) as f64;
    let lo = 1.0 / (2.0 * (k as f64 * PI / m).sin());
    let s = ((k - 1) as f64 * PI / m).sin();
    let hi = if s > 0.0 { (1.0 / (2.0 * s)).min(1.0) } else { 1.0 };
    (lo, hi)
}

/// Complement of `K1 + C_{2k+1}`: cycle vertices `0..2k+1`, centre `2k+1`.
/// Cycle vertex `i` sits at rim position `i k mod (2k+1)`, so cycle
/// neighbours face each other across the longest chords.
pub fn embed_complement_k1_cycle(k: usize) -> Result<Embedding, EmbedError> {
    if k == 0 {
        return Err(EmbedError::Parameter("k must be at least 1".into()));
    }
    let (lo, hi) = feasible_radius(k);
    assert!(lo < hi, "radius interval empty for k = {k}");
    let rho = 0.5 * (lo + hi);
    let m = 2 * k + 1;
    let mut pts = Vec::with_capacity(m + 1);
    for i in 0..m {
        let a = 2.0 * PI * ((i * k) % m) as f64 / m as f64;
        pts.push(Point::new(rho * a.cos(), rho * a.sin()));
    }
    pts.push(Point::new(0.0, 0.0));
    let target = Graph::cycle(m).disjoint_union(&Graph::empty(1)).complement();
    let params = EmbeddingParams {
        construction: Some("complement-k1-cycle".into()),
        rho: Some(rho),
        ..Default::default()
    };
    Ok(Embedding::new(target, pts).expect("finite points").with_params(params))
}

/// Complement of `P_m`, cut out of the smallest circle construction whose
/// cycle is longer than the path.
pub fn embed_complement_path(m: usize) -> Result<Embedding, EmbedError> {
    if m == 0 {
        return Err(EmbedError::Parameter("m must be at least 1".into()));
    }
    let k = m.div_ceil(2).max(1);
    let full = embed_complement_k1_cycle(k)?;
    let keep: Vec<usize> = (0..m).collect();
    let mut e = full.restrict(&keep);
    e.params.construction = Some("complement-path".into());
    Ok(e)
}
