use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::graph::Graph;

/// Finds an induced copy of `pattern` in `host`.
///
/// The result maps pattern vertex `i` to host vertex `m[i]`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced(host, pattern, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Enumerates induced embeddings of `pattern` into `host` (every injective
/// map, so automorphic copies repeat). Returns `true` on early stop.
pub fn for_each_induced<F>(host: &Graph, pattern: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let colours = (vec![0u64; host.n()], vec![0u64; pattern.n()]);
    Matcher::new(host, pattern, colours, false).run(visit)
}

/// Isomorphism test; returns a map `g -> h` when one exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (cg, ch) = refine_pair(g, h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let mut found = None;
    Matcher::new(h, g, (ch, cg), true).run(|m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Colour refinement run on both graphs with a shared palette.
fn refine_pair(g: &Graph, h: &Graph) -> (Vec<u64>, Vec<u64>) {
    let mut cg: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    let mut ch: Vec<u64> = (0..h.n()).map(|v| h.degree(v) as u64).collect();
    let mut classes = distinct(&cg, &ch);
    loop {
        let mut palette: HashMap<(u64, Vec<u64>), u64> = HashMap::new();
        let sig = |graph: &Graph, col: &[u64], v: usize| {
            let mut ns: Vec<u64> = graph.neighbors(v).iter().map(|&u| col[u]).collect();
            ns.sort_unstable();
            (col[v], ns)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let shs: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut next = |s: &(u64, Vec<u64>)| {
            let len = palette.len() as u64;
            *palette.entry(s.clone()).or_insert(len)
        };
        let ng: Vec<u64> = sg.iter().map(&mut next).collect();
        let nh: Vec<u64> = shs.iter().map(&mut next).collect();
        let c = distinct(&ng, &nh);
        cg = ng;
        ch = nh;
        if c == classes {
            return (cg, ch);
        }
        classes = c;
    }
}

fn distinct(a: &[u64], b: &[u64]) -> usize {
    let mut all: Vec<u64> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    host_colour: Vec<u64>,
    pattern_colour: Vec<u64>,
    exact_degree: bool,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, colours: (Vec<u64>, Vec<u64>), exact: bool) -> Self {
        Matcher {
            host,
            pattern,
            host_colour: colours.0,
            pattern_colour: colours.1,
            exact_degree: exact,
            order: search_order(pattern),
            map: vec![usize::MAX; pattern.n()],
            used: vec![false; host.n()],
        }
    }

    fn run<F: FnMut(&[usize]) -> ControlFlow<()>>(mut self, mut visit: F) -> bool {
        if self.pattern.n() > self.host.n() {
            return false;
        }
        self.step(0, &mut visit)
    }

    fn step<F: FnMut(&[usize]) -> ControlFlow<()>>(&mut self, depth: usize, visit: &mut F) -> bool {
        if depth == self.order.len() {
            return visit(&self.map).is_break();
        }
        let p = self.order[depth];
        // restrict to neighbours of an already-mapped pattern neighbour
        let anchor = self.pattern.neighbors(p).iter().find(|&&q| self.map[q] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(&q) => self.host.neighbors(self.map[q]).to_vec(),
            None => (0..self.host.n()).collect(),
        };
        for h in candidates {
            if self.used[h] || !self.feasible(p, h) {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            let stop = self.step(depth + 1, visit);
            self.used[h] = false;
            self.map[p] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    fn feasible(&self, p: usize, h: usize) -> bool {
        if self.host_colour[h] != self.pattern_colour[p] {
            return false;
        }
        let (dp, dh) = (self.pattern.degree(p), self.host.degree(h));
        if dh < dp || (self.exact_degree && dh != dp) {
            return false;
        }
        self.order.iter().all(|&q| {
            let mq = self.map[q];
            mq == usize::MAX || self.pattern.has_edge(p, q) == self.host.has_edge(h, mq)
        })
    }
}

/// Pattern vertices ordered so each one has as many earlier neighbours as
/// possible, ties broken by larger degree.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &u in pattern.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}
