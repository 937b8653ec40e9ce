use serde::Serialize;
use udg_embed::{default_epsilon, embed_complement_k1_cycle, embed_complement_path, embed_decomposition_star, Spacing};
use udg_graph::{contains_induced, is_isomorphic, BipartiteGraph, Embedding, Graph};
use udg_structure::{recognize_class_x, Recognition};
use udg_verify::{verify_embedding, DEFAULT_SLACK};

use crate::search::{search_embedding, SearchConfig};

/// How a graph was shown to be a unit disk graph, if at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Construction,
    Search,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certified {
    pub method: Method,
    /// name of the closed-form construction used
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    /// smallest |d - 1| over pairs that are not exact unit edges
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip)]
    pub embedding: Option<Embedding>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexRow {
    pub vertex: usize,
    #[serde(flatten)]
    pub result: Certified,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalityReport {
    pub n: usize,
    pub rows: Vec<VertexRow>,
    /// every deletion certified by construction or search
    pub all_deletions_embed: bool,
    /// search on the whole graph; `inconclusive` is the expected outcome
    pub whole_graph: Method,
}

/// Pulls a pattern placement back through `map` (vertex `i` of `g` sits
/// at `emb.points[map[i]]`) and keeps it only if it verifies for `g`.
fn pull_back(g: &Graph, emb: &Embedding, map: &[usize], name: &str) -> Option<Certified> {
    let pts = map.iter().map(|&m| emb.points[m]).collect();
    let mut e = Embedding::new(g.clone(), pts).ok()?.with_params(emb.params.clone());
    e.params.construction = Some(name.into());
    certify(g, e, Method::Construction, Some(name))
}

fn certify(g: &Graph, e: Embedding, method: Method, name: Option<&str>) -> Option<Certified> {
    let r = verify_embedding(g, &e, DEFAULT_SLACK).ok()?;
    r.ok.then(|| Certified {
        method,
        construction: name.map(Into::into),
        margin: r.min_gap,
        embedding: Some(e),
    })
}

fn by_circle(g: &Graph) -> Option<Certified> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if let Some(m) = is_isomorphic(g, &Graph::path(n).complement()) {
        let e = embed_complement_path(n).ok()?;
        if let Some(c) = pull_back(g, &e, &m, "complement-path") {
            return Some(c);
        }
    }
    for k in 1..=8usize {
        if 2 * k + 2 < n {
            continue;
        }
        let e = embed_complement_k1_cycle(k).ok()?;
        if let Some(m) = contains_induced(&e.target, g) {
            if let Some(c) = pull_back(g, &e, &m, "complement-k1-cycle") {
                return Some(c);
            }
        }
    }
    None
}

/// Co-bipartite graphs whose star is a class member.
fn by_star(g: &Graph) -> Option<Certified> {
    let co = BipartiteGraph::from_co_bipartite(g.clone()).ok()?;
    let star = co.star_op();
    let Ok(Recognition::Member(mut d)) = recognize_class_x(star.graph()) else {
        return None;
    };
    d.parts = co.parts().to_vec();
    let (e, _) = embed_decomposition_star(star.graph(), &d, default_epsilon(g.n()), Spacing::Adaptive).ok()?;
    certify(g, e, Method::Construction, Some("class-x-star"))
}

/// Closed-form constructions first, then search.
pub fn certify_udg(g: &Graph, cfg: &SearchConfig) -> Certified {
    if let Some(c) = by_circle(g).or_else(|| by_star(g)) {
        return c;
    }
    if let Ok(r) = search_embedding(g, cfg) {
        if let Some(e) = r.embedding {
            if let Some(c) = certify(g, e, Method::Search, None) {
                return c;
            }
        }
    }
    Certified {
        method: Method::Inconclusive,
        construction: None,
        margin: None,
        embedding: None,
    }
}

/// Tries to certify every single-vertex deletion of a claimed minimal
/// non-unit-disk graph, and runs search on the graph itself.
pub fn minimality_check(g: &Graph, cfg: &SearchConfig) -> MinimalityReport {
    let rows: Vec<VertexRow> = (0..g.n())
        .map(|v| VertexRow {
            vertex: v,
            result: certify_udg(&g.remove_vertex(v), cfg),
        })
        .collect();
    let whole = match search_embedding(g, cfg) {
        Ok(r) if r.embedding.is_some() => Method::Search,
        _ => Method::Inconclusive,
    };
    MinimalityReport {
        n: g.n(),
        all_deletions_embed: rows.iter().all(|r| r.result.method != Method::Inconclusive),
        rows,
        whole_graph: whole,
    }
}
