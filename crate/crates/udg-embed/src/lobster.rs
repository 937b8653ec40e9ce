//! Stand-alone lobster and basic caterpillar entry points.

use udg_graph::{Embedding, EmbeddingParams, Graph, Part};
use udg_structure::{ComponentDecomp, Decomposition, Lobster, Piece};

use crate::layout::{layout_lobster, Layout};
use crate::pipeline::{embed_decomposition_star, StarCertificate};
use crate::twins::{place_copies, Spacing};
use crate::EmbedError;

/// Part labels of a lobster: spine alternates starting in `U`, legs take
/// the other side of their spine vertex, feet the same side.
pub fn lobster_parts(l: &Lobster, n: usize) -> Result<Vec<Part>, EmbedError> {
    let mut parts = vec![None; n];
    let mut put = |v: usize, p: Part| -> Result<(), EmbedError> {
        match parts.get_mut(v) {
            Some(slot @ None) => {
                *slot = Some(p);
                Ok(())
            }
            Some(Some(_)) => Err(EmbedError::Parameter(format!("vertex {v} listed twice"))),
            None => Err(EmbedError::Parameter(format!("vertex {v} out of range"))),
        }
    };
    for (i, &s) in l.spine.iter().enumerate() {
        let p = if i % 2 == 0 { Part::U } else { Part::W };
        put(s, p)?;
        for leg in l.legs.get(i).into_iter().flatten() {
            put(leg.leg, p.other())?;
            if let Some(f) = leg.foot {
                put(f, p)?;
            }
        }
    }
    parts
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| EmbedError::Parameter(format!("vertex {v} not in the lobster"))))
        .collect()
}

/// Four-line representation of the star of a lobster on vertices
/// `0..n`. Extra legs at one spine vertex are placed as copies.
pub fn embed_lobster_star(l: &Lobster, mu: f64) -> Result<Embedding, EmbedError> {
    if l.legs.len() != l.spine.len() {
        return Err(EmbedError::Parameter("one leg list per spine vertex expected".into()));
    }
    let n = l.vertices().len();
    let parts = lobster_parts(l, n)?;
    if !(mu > 0.0 && mu < 1.0 / l.spine.len().max(1) as f64) {
        return Err(EmbedError::Parameter(format!(
            "mu = {mu} outside (0, 1/{})",
            l.spine.len()
        )));
    }
    let tree = Graph::from_edge_list(n, &l.edges()).map_err(|e| EmbedError::Parameter(e.to_string()))?;
    let target = udg_graph::BipartiteGraph::new(tree, parts.clone(), false)
        .map_err(|e| EmbedError::Parameter(e.to_string()))?
        .star_op()
        .into_graph();
    let mut lay = Layout::new(parts.clone());
    layout_lobster(&mut lay, l, mu)?;
    let classes = std::mem::take(&mut lay.classes);
    let used = place_copies(&target, &mut lay.pts, &classes, Spacing::Adaptive)?;
    let points = lay
        .pts
        .iter()
        .map(|p| p.expect("lobster covers all vertices").into())
        .collect();
    Ok(Embedding::new(target, points)
        .map_err(|e| EmbedError::Precondition(e.to_string()))?
        .with_params(EmbeddingParams {
            construction: Some("lobster-star".into()),
            mu: Some(mu),
            twin_spacing: used.into_iter().reduce(f64::min),
            ..Default::default()
        })
        .with_parts(parts))
}

/// Star representation of a basic decomposition at block parameter `eps`
/// or the largest certified half of it.
pub fn embed_basic_caterpillar_star(d: &Decomposition, eps: f64) -> Result<(Embedding, StarCertificate), EmbedError> {
    if !d.twin_classes.is_empty() {
        return Err(EmbedError::Parameter("decomposition has twin edges".into()));
    }
    let g = d.reassemble();
    embed_decomposition_star(&g, d, eps, Spacing::Adaptive)
}

/// Number of lobster and strip pieces, for reporting.
pub fn piece_counts(c: &ComponentDecomp) -> (usize, usize) {
    let strips = c.pieces.iter().filter(|p| matches!(p, Piece::Strip(_))).count();
    (strips, c.pieces.len() - strips)
}
