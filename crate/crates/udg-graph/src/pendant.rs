use serde::{Deserialize, Serialize};

use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;

/// How to undo [`pendant_twin_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PendantExpansion {
    /// Original id of each vertex of the reduced graph.
    pub kept: Vec<usize>,
    /// `(removed, representative)` pairs, both as original ids.
    pub collapsed: Vec<(usize, usize)>,
    /// Vertex count of the original graph.
    pub original_n: usize,
}

impl PendantExpansion {
    pub fn is_trivial(&self) -> bool {
        self.collapsed.is_empty()
    }

    /// Lifts per-vertex data of the reduced graph back to the original
    /// graph; removed vertices copy their representative.
    pub fn expand<T: Clone>(&self, reduced: &[T]) -> Vec<T> {
        assert_eq!(reduced.len(), self.kept.len());
        let mut slots: Vec<Option<T>> = vec![None; self.original_n];
        for (i, &v) in self.kept.iter().enumerate() {
            slots[v] = Some(reduced[i].clone());
        }
        for &(r, rep) in &self.collapsed {
            slots[r] = slots[rep].clone();
        }
        slots.into_iter().map(|s| s.expect("every vertex restored")).collect()
    }

    /// Rebuilds the original graph from the reduced one.
    pub fn expand_graph(&self, reduced: &Graph) -> Graph {
        let mut edges: Vec<(usize, usize)> = reduced.edges().map(|(a, b)| (self.kept[a], self.kept[b])).collect();
        let neighbour_of = |rep: usize| {
            let i = self.kept.iter().position(|&k| k == rep).expect("rep kept");
            let ns = reduced.neighbors(i);
            assert_eq!(ns.len(), 1, "representative must be a pendant");
            self.kept[ns[0]]
        };
        for &(r, rep) in &self.collapsed {
            edges.push((r, neighbour_of(rep)));
        }
        Graph::from_edge_list(self.original_n, &edges).expect("valid expansion")
    }
}

/// Collapses pendant vertices that hang off the same neighbour to a single
/// representative (the smallest id).
pub fn pendant_twin_reduce(g: &BipartiteGraph) -> (BipartiteGraph, PendantExpansion) {
    let graph = g.graph();
    let n = graph.n();
    let mut rep_of = vec![usize::MAX; n];
    let mut collapsed = Vec::new();
    for v in 0..n {
        let pendants: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| graph.degree(u) == 1)
            .collect();
        if let Some((&first, rest)) = pendants.split_first() {
            for &u in rest {
                rep_of[u] = first;
                collapsed.push((u, first));
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| rep_of[v] == usize::MAX).collect();
    let reduced = g.induced(&kept);
    collapsed.sort_unstable();
    (
        reduced,
        PendantExpansion {
            kept,
            collapsed,
            original_n: n,
        },
    )
}
