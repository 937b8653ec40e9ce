use serde::{Deserialize, Serialize};
use thiserror::Error;
use udg_graph::cycles::is_chordless_cycle;
use udg_graph::{connected_components, Graph};

use crate::witness::{find_witness, Witness};

/// How two chordless hexagons of a class member may meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Intersection {
    Disjoint,
    OneVertex,
    SharedEdge,
    /// Exactly two opposite vertices in common.
    DiagonalPair,
    /// A common induced path on four vertices.
    P4Share,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectionError {
    #[error("{0:?} does not induce a chordless hexagon")]
    NotHexagon(Vec<usize>),
    #[error("hexagons meet in {common:?}, which no class member allows")]
    Invalid {
        common: Vec<usize>,
        witness: Option<Witness>,
    },
}

/// Classifies the intersection of two hexagons given as cyclic vertex lists.
pub fn hexagon_intersection_type(h1: &[usize], h2: &[usize], g: &Graph) -> Result<Intersection, IntersectionError> {
    for h in [h1, h2] {
        if h.len() != 6 || !is_chordless_cycle(g, h) {
            return Err(IntersectionError::NotHexagon(h.to_vec()));
        }
    }
    let mut common: Vec<usize> = h1.iter().copied().filter(|v| h2.contains(v)).collect();
    common.sort_unstable();
    let pos = |v: usize| h1.iter().position(|&x| x == v).unwrap();
    let gap = |a: usize, b: usize| {
        let d = pos(a).abs_diff(pos(b));
        d.min(6 - d)
    };
    let kind = match common.len() {
        0 => Some(Intersection::Disjoint),
        1 => Some(Intersection::OneVertex),
        2 => match gap(common[0], common[1]) {
            1 => Some(Intersection::SharedEdge),
            3 => Some(Intersection::DiagonalPair),
            _ => None,
        },
        4 => {
            let sub = g.induced_subgraph(&common);
            let path = sub.edge_count() == 3 && connected_components(&sub).len() == 1;
            path.then_some(Intersection::P4Share)
        }
        _ => None,
    };
    kind.ok_or_else(|| {
        let mut union: Vec<usize> = h1.iter().chain(h2).copied().collect();
        union.sort_unstable();
        union.dedup();
        let witness = find_witness(&g.induced_subgraph(&union)).map(|mut w| {
            for v in &mut w.vertices {
                *v = union[*v];
            }
            w
        });
        IntersectionError::Invalid { common, witness }
    })
}
