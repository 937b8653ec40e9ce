use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use udg_catalog::entries::{f2, f3, f4, s333};
use udg_graph::cycles::is_chordless_cycle;
use udg_graph::{contains_induced, for_each_chordless_cycle, Graph};

/// Which forbidden induced subgraph a witness exhibits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// Chordless cycle of the given length (anything but 6).
    Cycle(usize),
    S333,
    /// Hexagon with pendants on three consecutive vertices.
    HexThreeConsecutive,
    /// Hexagon with pendants on three pairwise non-adjacent vertices.
    HexThreeSpread,
    /// Hexagon with two length-2 legs on adjacent vertices.
    HexTwoLongLegs,
}

/// Negative certificate: `vertices[i]` is the host vertex playing pattern
/// vertex `i` (for cycles, the cycle in order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn pattern(&self) -> Graph {
        match self.kind {
            WitnessKind::Cycle(k) => Graph::cycle(k),
            WitnessKind::S333 => s333(),
            WitnessKind::HexThreeConsecutive => f4(),
            WitnessKind::HexThreeSpread => f2(),
            WitnessKind::HexTwoLongLegs => f3(),
        }
    }

    /// Re-checks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.vertices.len() || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        match self.kind {
            WitnessKind::Cycle(k) => k != 6 && self.vertices.len() == k && is_chordless_cycle(g, &self.vertices),
            _ => g.induced_subgraph(&self.vertices) == self.pattern(),
        }
    }
}

/// First chordless cycle whose length is not 6, if any.
pub fn non_hexagonal_cycle(g: &Graph) -> Option<Witness> {
    let cap = 8.max(2 * g.n());
    let mut found = None;
    for_each_chordless_cycle(g, cap, |c| {
        if c.len() != 6 {
            found = Some(Witness {
                kind: WitnessKind::Cycle(c.len()),
                vertices: c.to_vec(),
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Searches for any forbidden induced subgraph of the class.
pub fn find_witness(g: &Graph) -> Option<Witness> {
    if let Some(w) = non_hexagonal_cycle(g) {
        return Some(w);
    }
    let patterns = [
        (WitnessKind::S333, s333()),
        (WitnessKind::HexThreeConsecutive, f4()),
        (WitnessKind::HexThreeSpread, f2()),
        (WitnessKind::HexTwoLongLegs, f3()),
    ];
    patterns
        .into_iter()
        .find_map(|(kind, p)| contains_induced(g, &p).map(|vertices| Witness { kind, vertices }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_and_c8_are_cycles() {
        for k in [3, 4, 5, 7, 8] {
            let w = find_witness(&Graph::cycle(k)).unwrap();
            assert_eq!(w.kind, WitnessKind::Cycle(k));
            assert!(w.verify(&Graph::cycle(k)));
        }
        assert!(find_witness(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn patterns_detect_themselves() {
        for (kind, p) in [
            (WitnessKind::S333, s333()),
            (WitnessKind::HexThreeConsecutive, f4()),
            (WitnessKind::HexThreeSpread, f2()),
            (WitnessKind::HexTwoLongLegs, f3()),
        ] {
            let w = find_witness(&p).unwrap();
            assert_eq!(w.kind, kind);
            assert!(w.verify(&p));
        }
    }

    #[test]
    fn bogus_witness_rejected() {
        let w = Witness {
            kind: WitnessKind::Cycle(4),
            vertices: vec![0, 1, 2, 3],
        };
        assert!(!w.verify(&Graph::path(4)));
    }
}
