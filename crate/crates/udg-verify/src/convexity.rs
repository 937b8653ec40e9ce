//! Crossing conditions every representation must satisfy: the diagonals
//! of an induced 4-cycle cross, and for an induced P6 of the complement
//! the images of its second and fourth edges cross.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::Serialize;
use udg_graph::{for_each_induced, Embedding, Graph};

use crate::geometry::{segments_cross, Crossing};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PatternKind {
    /// induced C4 of the target (equivalently a 2K2 of its complement)
    C4,
    /// induced P6 of the complement of the target
    CoP6,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingFailure {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
    /// the two segments that should cross
    pub segments: [(usize, usize); 2],
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub ok: bool,
    pub c4_checked: usize,
    pub p6_checked: usize,
    pub counterexample: Option<CrossingFailure>,
}

/// Runs the C4 check on `g`, and the co-P6 check when `g` is
/// co-bipartite. At most `DEFAULT_CAP` copies of each pattern are examined,
/// in the deterministic order of the induced-subgraph search.
pub fn check_convexity_constraints(g: &Graph, emb: &Embedding) -> ConvexityReport {
    check_with_cap(g, emb, DEFAULT_CAP)
}

pub fn check_with_cap(g: &Graph, emb: &Embedding, cap: usize) -> ConvexityReport {
    let pts = &emb.points;
    let test = |kind: PatternKind, verts: &[usize], s: [(usize, usize); 2]| -> Option<CrossingFailure> {
        match segments_cross(pts[s[0].0], pts[s[0].1], pts[s[1].0], pts[s[1].1]) {
            Crossing::Proper => None,
            c => Some(CrossingFailure {
                kind,
                vertices: verts.to_vec(),
                segments: s,
                degenerate: c == Crossing::Degenerate,
            }),
        }
    };
    let mut failure = None;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut c4_checked = 0;
    for_each_induced(g, &Graph::cycle(4), |m| {
        let mut key = m.to_vec();
        key.sort_unstable();
        if !seen.insert(key) {
            return ControlFlow::Continue(());
        }
        c4_checked += 1;
        // m is in cycle order, so the diagonals are the two non-edges
        failure = test(PatternKind::C4, m, [(m[0], m[2]), (m[1], m[3])]);
        if failure.is_some() || c4_checked >= cap {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let mut p6_checked = 0;
    if failure.is_none() && is_co_bipartite(g) {
        let mut seen6: HashSet<Vec<usize>> = HashSet::new();
        for_each_induced(&g.complement(), &Graph::path(6), |m| {
            let mut key = m.to_vec();
            if key[0] > key[5] {
                key.reverse();
            }
            if !seen6.insert(key) {
                return ControlFlow::Continue(());
            }
            p6_checked += 1;
            failure = test(PatternKind::CoP6, m, [(m[1], m[2]), (m[3], m[4])]);
            if failure.is_some() || p6_checked >= cap {
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
    }
    ConvexityReport {
        ok: failure.is_none(),
        c4_checked,
        p6_checked,
        counterexample: failure,
    }
}

fn is_co_bipartite(g: &Graph) -> bool {
    udg_graph::BipartiteGraph::from_co_bipartite(g.clone()).is_ok()
}
