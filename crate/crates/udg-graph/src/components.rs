use crate::graph::Graph;

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Biconnected components (blocks) as sorted vertex sets.
///
/// Bridges come out as two-vertex blocks; isolated vertices are omitted.
/// Blocks are sorted lexicographically.
pub fn two_connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frame: (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let u = g.neighbors(v)[idx];
                if u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

/// Cut vertices of `g`.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let mut count = vec![0usize; g.n()];
    for b in two_connected_components(g) {
        for v in b {
            count[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| count[v] > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_one_block() {
        assert_eq!(
            two_connected_components(&Graph::cycle(6)),
            vec![(0..6).collect::<Vec<_>>()]
        );
    }

    #[test]
    fn path_blocks_are_edges() {
        assert_eq!(
            two_connected_components(&Graph::path(4)),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(articulation_points(&Graph::path(4)), vec![1, 2]);
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::path(2)
            .disjoint_union(&Graph::empty(1))
            .disjoint_union(&Graph::cycle(3));
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2], vec![3, 4, 5]]);
    }
}
