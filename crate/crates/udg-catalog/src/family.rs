//! Infinite forbidden families.

use serde::Serialize;
use thiserror::Error;
use udg_graph::{BipartiteGraph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// complement of C_{2k}, k >= 4
    CoEvenCycle,
    /// complement of K2 + C_{2k+1}, k >= 1
    CoK2OddCycle,
    /// star of C_{2k}, k >= 4
    StarEvenCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {family} needs k >= {min}, got {k}")]
    BelowMinimum { family: &'static str, min: usize, k: usize },
    #[error("family {family} with k = {k} exceeds the supported maximum k <= {max}")]
    AboveMaximum { family: &'static str, max: usize, k: usize },
}

/// Keeps instantiation within what the graph types can hold comfortably.
pub const MAX_K: usize = 1 << 14;

impl Family {
    pub const ALL: [Family; 3] = [Family::CoEvenCycle, Family::CoK2OddCycle, Family::StarEvenCycle];

    pub fn id(self) -> &'static str {
        match self {
            Family::CoEvenCycle => "co-even-cycle",
            Family::CoK2OddCycle => "co-K2-odd-cycle",
            Family::StarEvenCycle => "star-even-cycle",
        }
    }

    pub fn parse(s: &str) -> Result<Family, FamilyError> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }

    pub fn min_k(self) -> usize {
        match self {
            Family::CoK2OddCycle => 1,
            _ => 4,
        }
    }

    /// Vertex count of the k-th member.
    pub fn order(self, k: usize) -> usize {
        match self {
            Family::CoK2OddCycle => 2 * k + 3,
            _ => 2 * k,
        }
    }
}

pub fn generate_family(family: Family, k: usize) -> Result<Graph, FamilyError> {
    if k < family.min_k() {
        return Err(FamilyError::BelowMinimum {
            family: family.id(),
            min: family.min_k(),
            k,
        });
    }
    if k > MAX_K {
        return Err(FamilyError::AboveMaximum {
            family: family.id(),
            max: MAX_K,
            k,
        });
    }
    Ok(match family {
        Family::CoEvenCycle => Graph::cycle(2 * k).complement(),
        Family::CoK2OddCycle => Graph::path(2).disjoint_union(&Graph::cycle(2 * k + 1)).complement(),
        Family::StarEvenCycle => BipartiteGraph::from_bipartite(Graph::cycle(2 * k))
            .expect("even cycles are bipartite")
            .star_op()
            .into_graph(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use udg_graph::is_isomorphic;

    #[test]
    fn co_c8() {
        let g = generate_family(Family::CoEvenCycle, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 20));
    }

    #[test]
    fn star_c8_is_co_c8() {
        let a = generate_family(Family::StarEvenCycle, 4).unwrap();
        let b = generate_family(Family::CoEvenCycle, 4).unwrap();
        assert!(is_isomorphic(&a, &b).is_some());
    }

    #[test]
    fn co_k2_triangle() {
        let g = generate_family(Family::CoK2OddCycle, 1).unwrap();
        let h = Graph::path(2).disjoint_union(&Graph::complete(3)).complement();
        assert_eq!(g, h);
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn bounds_are_named() {
        let e = generate_family(Family::CoEvenCycle, 3).unwrap_err();
        assert_eq!(
            e,
            FamilyError::BelowMinimum {
                family: "co-even-cycle",
                min: 4,
                k: 3
            }
        );
        assert!(e.to_string().contains("k >= 4"));
        assert!(generate_family(Family::CoK2OddCycle, 0).is_err());
        assert!(matches!(
            generate_family(Family::StarEvenCycle, MAX_K + 1),
            Err(FamilyError::AboveMaximum { .. })
        ));
    }

    #[test]
    fn ids_roundtrip() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.id()).unwrap(), f);
        }
        assert!(Family::parse("co-odd-cycle").is_err());
    }
}
