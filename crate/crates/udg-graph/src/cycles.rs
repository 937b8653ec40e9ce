use std::ops::ControlFlow;

use crate::graph::Graph;

/// All chordless cycles of length `3..=maxlen`.
///
/// Each cycle is reported once, starting at its smallest vertex and walking
/// towards the smaller of that vertex's two cycle neighbours.
pub fn chordless_cycles_up_to(g: &Graph, maxlen: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_chordless_cycle(g, maxlen, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Visits chordless cycles in the canonical form of [`chordless_cycles_up_to`].
/// Returns `true` if the visitor stopped early.
pub fn for_each_chordless_cycle<F>(g: &Graph, maxlen: usize, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let maxlen = maxlen.min(2 * n).min(n);
    if maxlen < 3 {
        return false;
    }
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(maxlen);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        for &v1 in g.neighbors(s) {
            if v1 < s {
                continue;
            }
            path.push(v1);
            on_path[v1] = true;
            let stopped = extend(g, maxlen, &mut path, &mut on_path, &mut visit);
            on_path[v1] = false;
            path.pop();
            if stopped {
                on_path[s] = false;
                path.pop();
                return true;
            }
        }
        on_path[s] = false;
        path.pop();
    }
    false
}

fn extend<F>(g: &Graph, maxlen: usize, path: &mut Vec<usize>, on_path: &mut [bool], visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().unwrap();
    let k = path.len();
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        // w may touch only `last` among path[1..k-1]
        if path[1..k - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if g.has_edge(s, w) {
            if path[1] < w {
                path.push(w);
                let flow = visit(path);
                path.pop();
                if flow.is_break() {
                    return true;
                }
            }
            continue;
        }
        if k + 1 < maxlen {
            path.push(w);
            on_path[w] = true;
            let stopped = extend(g, maxlen, path, on_path, visit);
            on_path[w] = false;
            path.pop();
            if stopped {
                return true;
            }
        }
    }
    false
}

/// Whether `cycle` (in order) is a chordless cycle of `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hexagon() {
        let c = chordless_cycles_up_to(&Graph::cycle(6), 12);
        assert_eq!(c, vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn tree_has_none() {
        assert!(chordless_cycles_up_to(&Graph::path(7), 10).is_empty());
    }

    #[test]
    fn k4_has_four_triangles() {
        let c = chordless_cycles_up_to(&Graph::complete(4), 4);
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn early_stop() {
        let mut count = 0;
        let stopped = for_each_chordless_cycle(&Graph::complete(5), 5, |_| {
            count += 1;
            ControlFlow::Break(())
        });
        assert!(stopped);
        assert_eq!(count, 1);
    }
}
