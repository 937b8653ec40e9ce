//! Edge-asteroid triples.
//!
//! Three edges form an asteroid when every two of them are the terminal
//! edges of a path that stays outside the closed neighbourhoods of both
//! end-vertices of the third.

use std::collections::VecDeque;

use serde::Serialize;
use udg_graph::{BipartiteGraph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EatWitness {
    pub edges: [(usize, usize); 3],
    /// `paths[i]` joins the two edges other than `edges[i]`; its first
    /// and last edges are those two edges.
    pub paths: [Vec<usize>; 3],
}

pub fn has_edge_asteroid_triple(g: &BipartiteGraph) -> Option<EatWitness> {
    find_in_graph(g.graph())
}

/// Same search without a bipartition; the definition does not need one.
pub fn find_in_graph(g: &Graph) -> Option<EatWitness> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let n = g.n();
    // allowed[e][v]: v is outside N[u] and N[w] for e = uw
    let allowed: Vec<Vec<bool>> = edges
        .iter()
        .map(|&(u, w)| {
            let mut ok = vec![true; n];
            for x in [u, w] {
                ok[x] = false;
                for &y in g.neighbors(x) {
                    ok[y] = false;
                }
            }
            ok
        })
        .collect();
    // component labels inside each allowed region, a cheap necessary test
    let comp: Vec<Vec<usize>> = allowed.iter().map(|ok| region_components(g, ok)).collect();
    let inside = |i: usize, j: usize| {
        let (a, b) = edges[j];
        allowed[i][a] && allowed[i][b]
    };
    let linked =
        |i: usize, j: usize, k: usize| inside(i, j) && inside(i, k) && comp[i][edges[j].0] == comp[i][edges[k].0];
    for a in 0..m {
        for b in a + 1..m {
            if !inside(a, b) || !inside(b, a) {
                continue;
            }
            for c in b + 1..m {
                if !linked(a, b, c) || !linked(b, a, c) || !linked(c, a, b) {
                    continue;
                }
                let trio = [a, b, c];
                let mut paths: [Vec<usize>; 3] = Default::default();
                let mut ok = true;
                for i in 0..3 {
                    let (j, k) = (trio[(i + 1) % 3], trio[(i + 2) % 3]);
                    match terminal_path(g, &allowed[trio[i]], edges[j], edges[k]) {
                        Some(p) => paths[i] = p,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let w = EatWitness {
                        edges: [edges[a], edges[b], edges[c]],
                        paths,
                    };
                    if replay_witness(g, &w) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn region_components(g: &Graph, ok: &[bool]) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if !ok[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if ok[w] && label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// A simple path inside `ok` whose first edge is `e` and last edge is `f`.
fn terminal_path(g: &Graph, ok: &[bool], e: (usize, usize), f: (usize, usize)) -> Option<Vec<usize>> {
    for (x, y) in [(e.0, e.1), (e.1, e.0)] {
        for (z, w) in [(f.0, f.1), (f.1, f.0)] {
            // path x, y, ..., z, w
            if x == w {
                continue;
            }
            if y == z {
                return Some(vec![x, y, w]);
            }
            if x == z || y == w {
                continue;
            }
            if let Some(mid) = bfs(g, ok, y, z, [x, w]) {
                let mut p = vec![x];
                p.extend(mid);
                p.push(w);
                return Some(p);
            }
        }
    }
    None
}

fn bfs(g: &Graph, ok: &[bool], s: usize, t: usize, banned: [usize; 2]) -> Option<Vec<usize>> {
    let usable = |v: usize| ok[v] && !banned.contains(&v);
    if !usable(s) || !usable(t) {
        return None;
    }
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            let mut p = vec![t];
            let mut c = t;
            while c != s {
                c = prev[c];
                p.push(c);
            }
            p.reverse();
            return Some(p);
        }
        for &w in g.neighbors(v) {
            if usable(w) && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

fn same_edge(a: (usize, usize), b: (usize, usize)) -> bool {
    a == b || (a.1, a.0) == b
}

/// Re-checks a witness from scratch against `g`.
pub fn replay_witness(g: &Graph, w: &EatWitness) -> bool {
    let e = w.edges;
    if e.iter().any(|&(a, b)| a >= g.n() || b >= g.n() || !g.has_edge(a, b)) {
        return false;
    }
    if same_edge(e[0], e[1]) || same_edge(e[0], e[2]) || same_edge(e[1], e[2]) {
        return false;
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let p = &w.paths[i];
        if p.len() < 3 || p.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in p {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if p.windows(2).any(|s| !g.has_edge(s[0], s[1])) {
            return false;
        }
        let first = (p[0], p[1]);
        let last = (p[p.len() - 2], p[p.len() - 1]);
        let ends_ok =
            (same_edge(first, e[j]) && same_edge(last, e[k])) || (same_edge(first, e[k]) && same_edge(last, e[j]));
        if !ends_ok {
            return false;
        }
        let (u, x) = e[i];
        let near = |v: usize| v == u || v == x || g.has_edge(v, u) || g.has_edge(v, x);
        if p.iter().any(|&v| near(v)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(g: Graph) -> BipartiteGraph {
        BipartiteGraph::from_bipartite(g).unwrap()
    }

    #[test]
    fn c10_has_one() {
        let w = has_edge_asteroid_triple(&bip(Graph::cycle(10))).unwrap();
        assert!(replay_witness(&Graph::cycle(10), &w));
    }

    #[test]
    fn c8_and_c6_have_none() {
        assert!(has_edge_asteroid_triple(&bip(Graph::cycle(8))).is_none());
        assert!(has_edge_asteroid_triple(&bip(Graph::cycle(6))).is_none());
    }

    #[test]
    fn tampered_witness_rejected() {
        let g = Graph::cycle(10);
        let mut w = find_in_graph(&g).unwrap();
        w.paths[0].pop();
        assert!(!replay_witness(&g, &w));
    }
}
