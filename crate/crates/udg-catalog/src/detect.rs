use serde::Serialize;
use udg_graph::{contains_induced, BipartiteGraph, Graph};

use crate::eat::{find_in_graph, EatWitness};
use crate::entries::{builtin_catalog, EntryKind};
use crate::family::{generate_family, Family};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Match {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<(Family, usize)>,
    /// pattern vertex i sits at host vertex mapping[i]
    pub mapping: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EatSource {
    Complement,
    Star,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EatObstruction {
    pub source: EatSource,
    pub witness: EatWitness,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct DetectionReport {
    pub matches: Vec<Match>,
    pub eat_witness: Option<EatObstruction>,
    /// set when the input was treated as co-bipartite
    pub co_bipartite: bool,
}

impl DetectionReport {
    pub fn is_clean(&self) -> bool {
        self.matches.is_empty() && self.eat_witness.is_none()
    }
}

/// Scans `g` for catalog entries and family members up to `max_family_k`.
/// A co-bipartite input is also tested for edge-asteroid triples, using the
/// canonical two-clique cover when the complement is disconnected.
pub fn detect_forbidden(g: &Graph, max_family_k: usize) -> DetectionReport {
    match BipartiteGraph::from_co_bipartite(g.clone()) {
        Ok(cb) => detect_forbidden_with_parts(&cb, max_family_k),
        Err(_) => scan(g, max_family_k),
    }
}

/// Like [`detect_forbidden`] with the two cliques fixed by the caller.
pub fn detect_forbidden_with_parts(g: &BipartiteGraph, max_family_k: usize) -> DetectionReport {
    assert!(g.is_co(), "expected a co-bipartite record");
    let mut report = scan(g.graph(), max_family_k);
    report.co_bipartite = true;
    // complement and star both drop every intra-part edge; only the
    // retained cross edges differ
    let co = g.graph().complement();
    if let Some(w) = find_in_graph(&co) {
        report.eat_witness = Some(EatObstruction {
            source: EatSource::Complement,
            witness: w,
        });
    } else if let Some(w) = find_in_graph(g.star_op().graph()) {
        report.eat_witness = Some(EatObstruction {
            source: EatSource::Star,
            witness: w,
        });
    }
    report
}

fn scan(g: &Graph, max_family_k: usize) -> DetectionReport {
    let mut matches = Vec::new();
    for e in builtin_catalog() {
        if e.kind != EntryKind::MinimalNonUdg || e.graph.n() > g.n() {
            continue;
        }
        if let Some(m) = contains_induced(g, &e.graph) {
            matches.push(Match {
                name: e.name,
                family: None,
                mapping: m,
            });
        }
    }
    for f in Family::ALL {
        let mut k = f.min_k();
        while k <= max_family_k && f.order(k) <= g.n() {
            let pattern = generate_family(f, k).expect("k within range");
            if let Some(m) = contains_induced(g, &pattern) {
                matches.push(Match {
                    name: format!("{}(k={k})", f.id()),
                    family: Some((f, k)),
                    mapping: m,
                });
            }
            k += 1;
        }
    }
    DetectionReport {
        matches,
        eat_witness: None,
        co_bipartite: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k23_plus_isolated() {
        let g = Graph::complete_bipartite(2, 3).disjoint_union(&Graph::empty(1));
        let r = detect_forbidden(&g, 8);
        assert!(r.matches.iter().any(|m| m.name == "K2,3"));
    }

    #[test]
    fn co_p7_is_clean() {
        let g = Graph::path(7).complement();
        let r = detect_forbidden(&g, 8);
        assert!(r.co_bipartite);
        assert!(r.is_clean(), "{r:?}");
    }

    #[test]
    fn co_c8_matches_family() {
        let g = Graph::cycle(8).complement();
        let r = detect_forbidden(&g, 4);
        assert!(r.matches.iter().any(|m| m.family == Some((Family::CoEvenCycle, 4))));
    }

    #[test]
    fn co_c10_has_an_eat_obstruction() {
        let g = Graph::cycle(10).complement();
        let r = detect_forbidden(&g, 3);
        assert_eq!(r.eat_witness.unwrap().source, EatSource::Complement);
    }
}
