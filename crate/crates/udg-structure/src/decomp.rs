use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use udg_graph::{connected_components, Graph, Part};

/// One `C_{6,k}` block: poles `a`, `b` and paths `a - a_j - b_j - b`.
///
/// `paths[0]` starts the left edge `{a, a_1}`, `paths[1]` ends the right
/// edge `{b_2, b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripBlock {
    pub a: usize,
    pub b: usize,
    pub paths: Vec<(usize, usize)>,
}

impl StripBlock {
    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn left_edge(&self) -> (usize, usize) {
        (self.a, self.paths[0].0)
    }

    pub fn right_edge(&self) -> (usize, usize) {
        (self.paths[1].1, self.b)
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.a, self.b];
        for &(x, y) in &self.paths {
            v.push(x);
            v.push(y);
        }
        v
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.paths
            .iter()
            .flat_map(|&(x, y)| [(self.a, x), (x, y), (y, self.b)])
            .collect()
    }
}

/// Hexagonal strip `H(k_1, d_1, ..., k_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexStrip {
    pub ks: Vec<usize>,
    pub ds: Vec<i8>,
    pub blocks: Vec<StripBlock>,
    /// Role tags per vertex; shared vertices carry two.
    pub roles: BTreeMap<usize, Vec<String>>,
}

impl HexStrip {
    pub fn from_blocks(blocks: Vec<StripBlock>) -> HexStrip {
        let ks = blocks.iter().map(StripBlock::k).collect();
        let ds = blocks
            .windows(2)
            .map(|w| if w[0].paths[1].1 == w[1].a { 1 } else { -1 })
            .collect();
        let mut roles: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (i, bl) in blocks.iter().enumerate() {
            let i = i + 1;
            roles.entry(bl.a).or_default().push(format!("a^{i}"));
            roles.entry(bl.b).or_default().push(format!("b^{i}"));
            for (j, &(x, y)) in bl.paths.iter().enumerate() {
                let j = j + 1;
                roles.entry(x).or_default().push(format!("a^{i}_{j}"));
                roles.entry(y).or_default().push(format!("b^{i}_{j}"));
            }
        }
        HexStrip { ks, ds, blocks, roles }
    }

    /// Edges shared by consecutive blocks.
    pub fn shared_edges(&self) -> Vec<(usize, usize)> {
        self.blocks[..self.blocks.len().saturating_sub(1)]
            .iter()
            .map(StripBlock::right_edge)
            .collect()
    }

    pub fn first_edge(&self) -> (usize, usize) {
        self.blocks[0].left_edge()
    }

    pub fn last_edge(&self) -> (usize, usize) {
        self.blocks.last().expect("non-empty strip").right_edge()
    }

    /// Checks that consecutive blocks really are glued along one edge.
    pub fn is_consistent(&self) -> bool {
        self.blocks.windows(2).all(|w| {
            let (p, q) = (w[0].right_edge(), w[1].left_edge());
            (p.0 == q.0 && p.1 == q.1) || (p.0 == q.1 && p.1 == q.0)
        }) && self.blocks.iter().all(|b| b.k() >= 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub leg: usize,
    pub foot: Option<usize>,
}

/// Spine path plus legs (leg vertex, optional foot) per spine vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lobster {
    pub spine: Vec<usize>,
    pub legs: Vec<Vec<Leg>>,
}

impl Lobster {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.spine.windows(2).map(|w| (w[0], w[1])).collect();
        for (i, legs) in self.legs.iter().enumerate() {
            for l in legs {
                e.push((self.spine[i], l.leg));
                if let Some(f) = l.foot {
                    e.push((l.leg, f));
                }
            }
        }
        e
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.spine.clone();
        for l in self.legs.iter().flatten() {
            v.push(l.leg);
            v.extend(l.foot);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Piece {
    Strip(HexStrip),
    Lobster(Lobster),
}

/// One connected component as a chain of pieces. `gluing[i]` is the vertex
/// shared by `pieces[i]` and `pieces[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDecomp {
    pub pieces: Vec<Piece>,
    pub gluing: Vec<usize>,
    /// `(leaf, host)` for leaves hanging off strip vertices.
    pub pendants: Vec<(usize, usize)>,
}

impl ComponentDecomp {
    pub fn strips(&self) -> impl Iterator<Item = &HexStrip> {
        self.pieces.iter().filter_map(|p| match p {
            Piece::Strip(s) => Some(s),
            Piece::Lobster(_) => None,
        })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .pieces
            .iter()
            .flat_map(|p| match p {
                Piece::Strip(s) => s.blocks.iter().flat_map(StripBlock::edges).collect::<Vec<_>>(),
                Piece::Lobster(l) => l.edges(),
            })
            .collect();
        e.extend(self.pendants.iter().copied());
        e
    }
}

/// Generalized hexagonal caterpillar decomposition, ids of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: usize,
    pub parts: Vec<Part>,
    pub components: Vec<ComponentDecomp>,
    /// Whether repeated pendants were collapsed before decomposing.
    pub reduced: bool,
    /// `(removed, representative)` leaves collapsed away.
    pub collapsed: Vec<(usize, usize)>,
    /// Twin classes with at least two edges, each edge as `(u, w)`, `u` in U.
    pub twin_classes: Vec<Vec<(usize, usize)>>,
}

impl Decomposition {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("decomposition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn strips(&self) -> impl Iterator<Item = &HexStrip> {
        self.components.iter().flat_map(ComponentDecomp::strips)
    }

    /// Rebuilds the graph the decomposition describes.
    pub fn reassemble(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.components.iter().flat_map(ComponentDecomp::edges).collect();
        let reduced = Graph::from_edge_list(self.n, &edges).expect("ids in range");
        for &(r, rep) in &self.collapsed {
            if let Some(&host) = reduced.neighbors(rep).first() {
                edges.push((r, host));
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("ids in range")
    }

    /// Shared edges whose removal fails to disconnect `g` further.
    pub fn non_cutset_shared_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let base = connected_components(g).len();
        self.strips()
            .flat_map(HexStrip::shared_edges)
            .filter(|&(x, y)| {
                let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != y).collect();
                connected_components(&g.induced_subgraph(&keep)).len() <= base
            })
            .collect()
    }
}
