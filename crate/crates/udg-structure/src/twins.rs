use std::collections::BTreeSet;

use udg_graph::BipartiteGraph;

fn cross_set(g: &BipartiteGraph, v: usize) -> BTreeSet<usize> {
    g.cross_neighbors(v).into_iter().collect()
}

fn sym_diff_is(a: &BTreeSet<usize>, b: &BTreeSet<usize>, x: usize, y: usize) -> bool {
    let d: Vec<usize> = a.symmetric_difference(b).copied().collect();
    d.len() == 2 && d.contains(&x) && d.contains(&y)
}

/// Whether the cross edges `(u, w)` and `(u2, w2)` (first endpoints in U)
/// are twins.
pub fn are_twins(g: &BipartiteGraph, (u, w): (usize, usize), (u2, w2): (usize, usize)) -> bool {
    u != u2
        && w != w2
        && sym_diff_is(&cross_set(g, u), &cross_set(g, u2), w, w2)
        && sym_diff_is(&cross_set(g, w), &cross_set(g, w2), u, u2)
}

/// Partition of the cross edges into twin classes, singletons included.
/// Classes and their members are sorted; each edge is `(u, w)` with `u` in U.
pub fn twin_edge_classes(g: &BipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    let edges = g.cross_edges();
    let m = edges.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..m {
        for j in i + 1..m {
            if are_twins(g, edges[i], edges[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        classes[r].push(e);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// True when no two cross edges are twins.
pub fn is_basic(g: &BipartiteGraph) -> bool {
    twin_edge_classes(g).iter().all(|c| c.len() == 1)
}

/// Removes every edge of each class but the first, together with its
/// endpoints. Returns the kept vertices in increasing order.
pub fn basic_core(g: &BipartiteGraph) -> Vec<usize> {
    let mut drop = vec![false; g.n()];
    for class in twin_edge_classes(g) {
        for &(u, w) in &class[1..] {
            drop[u] = true;
            drop[w] = true;
        }
    }
    debug_assert!(g.parts().len() == g.n());
    (0..g.n()).filter(|&v| !drop[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use udg_graph::Graph;

    #[test]
    fn hexagon_opposite_edges_pair_up() {
        let b = BipartiteGraph::from_bipartite(Graph::cycle(6)).unwrap();
        let classes = twin_edge_classes(&b);
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn short_path_is_basic() {
        let b = BipartiteGraph::from_bipartite(Graph::path(4)).unwrap();
        assert!(is_basic(&b));
    }

    #[test]
    fn p5_end_edges_are_twins() {
        // the two legs of the centre vertex
        let b = BipartiteGraph::from_bipartite(Graph::path(5)).unwrap();
        let classes = twin_edge_classes(&b);
        assert!(classes.contains(&vec![(0, 1), (4, 3)]));
    }
}
