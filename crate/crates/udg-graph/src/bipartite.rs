use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Part {
    U,
    W,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::U => Part::W,
            Part::W => Part::U,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Part::U => 'U',
            Part::W => 'W',
        }
    }
}

/// A graph with a fixed two-part labelling.
///
/// With `co == false` both parts are independent sets; with `co == true`
/// both parts are cliques. Cross edges (U x W) are free in either mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    parts: Vec<Part>,
    co: bool,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, parts: Vec<Part>, co: bool) -> Result<Self, GraphError> {
        if parts.len() != graph.n() {
            return Err(GraphError::PartLength {
                expected: graph.n(),
                got: parts.len(),
            });
        }
        let n = graph.n();
        for u in 0..n {
            for v in u + 1..n {
                if parts[u] != parts[v] {
                    continue;
                }
                let e = graph.has_edge(u, v);
                if co && !e {
                    return Err(GraphError::MissingCliqueEdge(u, v));
                }
                if !co && e {
                    return Err(GraphError::IntraPartEdge(u, v));
                }
            }
        }
        Ok(BipartiteGraph { graph, parts, co })
    }

    /// Two-colours a bipartite graph; within each component the smallest
    /// vertex goes to `U`.
    pub fn from_bipartite(graph: Graph) -> Result<Self, GraphError> {
        let parts = two_colour(&graph)?;
        Ok(BipartiteGraph {
            graph,
            parts,
            co: false,
        })
    }

    /// Splits a co-bipartite graph into two cliques (two-colouring of the
    /// complement).
    pub fn from_co_bipartite(graph: Graph) -> Result<Self, GraphError> {
        let parts = two_colour(&graph.complement()).map_err(|_| GraphError::NotCoBipartite)?;
        Ok(BipartiteGraph { graph, parts, co: true })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn part(&self, v: usize) -> Part {
        self.parts[v]
    }

    pub fn is_co(&self) -> bool {
        self.co
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn vertices_in(&self, p: Part) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.parts[v] == p).collect()
    }

    /// Cross edges `(u, w)` with `u` in `U` and `w` in `W`.
    pub fn cross_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .graph
            .edges()
            .filter(|&(a, b)| self.parts[a] != self.parts[b])
            .map(|(a, b)| if self.parts[a] == Part::U { (a, b) } else { (b, a) })
            .collect();
        out.sort_unstable();
        out
    }

    /// Neighbours of `v` in the opposite part.
    pub fn cross_neighbors(&self, v: usize) -> Vec<usize> {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.parts[u] != self.parts[v])
            .collect()
    }

    /// Complements the cross pairs, keeps intra-part pairs.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let cross = self.parts[u] != self.parts[v];
                if self.graph.has_edge(u, v) != cross {
                    edges.push((u, v));
                }
            }
        }
        BipartiteGraph {
            graph: Graph::from_edge_list(n, &edges).expect("valid"),
            parts: self.parts.clone(),
            co: self.co,
        }
    }

    /// Complements each part internally and flips the mode.
    pub fn star_op(&self) -> BipartiteGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let same = self.parts[u] == self.parts[v];
                if self.graph.has_edge(u, v) != same {
                    edges.push((u, v));
                }
            }
        }
        BipartiteGraph {
            graph: Graph::from_edge_list(n, &edges).expect("valid"),
            parts: self.parts.clone(),
            co: !self.co,
        }
    }

    /// Swaps the roles of `U` and `W`.
    pub fn swap_parts(&self) -> BipartiteGraph {
        BipartiteGraph {
            graph: self.graph.clone(),
            parts: self.parts.iter().map(|p| p.other()).collect(),
            co: self.co,
        }
    }

    pub fn induced(&self, vertices: &[usize]) -> BipartiteGraph {
        BipartiteGraph {
            graph: self.graph.induced_subgraph(vertices),
            parts: vertices.iter().map(|&v| self.parts[v]).collect(),
            co: self.co,
        }
    }
}

/// Proper two-colouring, or an odd cycle as error.
fn two_colour(g: &Graph) -> Result<Vec<Part>, GraphError> {
    let n = g.n();
    let mut colour: Vec<Option<Part>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(Part::U);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = colour[v].unwrap();
            for &u in g.neighbors(v) {
                match colour[u] {
                    None => {
                        colour[u] = Some(cv.other());
                        parent[u] = v;
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => {
                        return Err(GraphError::NotBipartite(odd_cycle(&parent, u, v)));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(colour.into_iter().map(|c| c.unwrap()).collect())
}

fn odd_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let chain = |mut v: usize| {
        let mut out = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            out.push(v);
        }
        out
    };
    let pa = chain(a);
    let pb = chain(b);
    let mut i = pa.len();
    let mut j = pb.len();
    while i > 0 && j > 0 && pa[i - 1] == pb[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pa[..=i.min(pa.len() - 1)].to_vec();
    cycle.extend(pb[..j].iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_reported() {
        let err = BipartiteGraph::from_bipartite(Graph::cycle(5)).unwrap_err();
        match err {
            GraphError::NotBipartite(c) => {
                assert_eq!(c.len(), 5);
                let g = Graph::cycle(5);
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn k22_bipartite_complement_has_no_cross_edges() {
        let b = BipartiteGraph::from_bipartite(Graph::complete_bipartite(2, 2)).unwrap();
        let c = b.bipartite_complement();
        assert_eq!(c.graph().edge_count(), 0);
    }

    #[test]
    fn star_of_single_edge_is_unchanged() {
        let b = BipartiteGraph::from_bipartite(Graph::path(2)).unwrap();
        let s = b.star_op();
        assert_eq!(s.graph(), b.graph());
        assert!(s.is_co());
    }

    #[test]
    fn validation() {
        let g = Graph::path(3);
        assert!(BipartiteGraph::new(g.clone(), vec![Part::U, Part::W, Part::U], false).is_ok());
        assert_eq!(
            BipartiteGraph::new(g.clone(), vec![Part::U, Part::U, Part::W], false),
            Err(GraphError::IntraPartEdge(0, 1))
        );
        assert_eq!(
            BipartiteGraph::new(g, vec![Part::U, Part::W, Part::U], true),
            Err(GraphError::MissingCliqueEdge(0, 2))
        );
    }

    #[test]
    fn co_bipartite_split() {
        let g = Graph::cycle(8).complement();
        let b = BipartiteGraph::from_co_bipartite(g).unwrap();
        assert_eq!(b.vertices_in(Part::U).len(), 4);
        assert!(BipartiteGraph::from_co_bipartite(Graph::empty(3)).is_err());
    }
}
