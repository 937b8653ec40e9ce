//! The fixed catalog: small graphs drawn in the literature.

use serde::Serialize;
use udg_graph::{graph6, Graph};

use crate::family::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    /// Not a unit disk graph, every proper induced subgraph is.
    MinimalNonUdg,
    /// Bipartite graph with an edge-asteroid triple; its complement and
    /// its star are forbidden co-bipartite graphs.
    BipartiteSeed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub family: Option<(Family, usize)>,
    pub kind: EntryKind,
    pub source: &'static str,
}

/// 1-based edge list to a graph on `n` vertices.
fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edge_list(n, &e).expect("catalog edge lists are well formed")
}

fn fixed(name: &str, graph: Graph, kind: EntryKind, source: &'static str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        graph,
        family: None,
        kind,
        source,
    }
}

// G1..G5 share the vertex numbering of the figure they were read from.
const G_BASE: [(usize, usize); 8] = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 6), (5, 7)];

pub fn g1() -> Graph {
    one_based(7, &[G_BASE.as_slice(), &[(4, 5)]].concat())
}

pub fn g2() -> Graph {
    one_based(7, &[G_BASE.as_slice(), &[(5, 6)]].concat())
}

pub fn g3() -> Graph {
    one_based(6, &[(1, 4), (1, 5), (2, 4), (2, 5), (3, 6), (3, 5), (4, 6)])
}

pub fn g4() -> Graph {
    one_based(7, &[(1, 4), (1, 5), (2, 4), (2, 5), (3, 6), (3, 7), (4, 6), (5, 7)])
}

pub fn g5() -> Graph {
    one_based(
        7,
        &[(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6), (4, 7), (6, 7)],
    )
}

/// Spider with three legs of length three; vertex 0 is the centre.
pub fn s333() -> Graph {
    one_based(
        10,
        &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8), (6, 9), (7, 10)],
    )
}

pub fn f1() -> Graph {
    one_based(
        9,
        &[
            (2, 3),
            (3, 4),
            (5, 6),
            (6, 3),
            (3, 7),
            (7, 1),
            (7, 8),
            (8, 6),
            (1, 2),
            (4, 5),
            (8, 9),
        ],
    )
}

/// Hexagon with pendants on three pairwise non-adjacent cycle vertices.
pub fn f2() -> Graph {
    one_based(
        9,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 7), (4, 8), (6, 9)],
    )
}

/// Hexagon with two length-2 legs on adjacent cycle vertices.
pub fn f3() -> Graph {
    one_based(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (6, 1),
            (2, 7),
            (3, 9),
            (7, 8),
            (9, 10),
            (5, 6),
        ],
    )
}

/// Hexagon with pendants on three consecutive cycle vertices.
pub fn f4() -> Graph {
    one_based(
        9,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 1), (2, 7), (3, 9), (5, 6), (4, 8)],
    )
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    use EntryKind::*;
    vec![
        fixed(
            "K1,6",
            Graph::complete_bipartite(1, 6),
            MinimalNonUdg,
            "known minimal non-UDG (star)",
        ),
        fixed(
            "K2,3",
            Graph::complete_bipartite(2, 3),
            MinimalNonUdg,
            "known minimal non-UDG",
        ),
        fixed("G1", g1(), MinimalNonUdg, "figure transcription, curved edge 4-5"),
        fixed("G2", g2(), MinimalNonUdg, "figure transcription, curved edge 5-6"),
        fixed("G3", g3(), MinimalNonUdg, "figure transcription"),
        fixed("G4", g4(), MinimalNonUdg, "figure transcription"),
        fixed("G5", g5(), MinimalNonUdg, "figure transcription"),
        fixed(
            "S3,3,3",
            s333(),
            BipartiteSeed,
            "spider seed with an edge-asteroid triple",
        ),
        fixed("F1", f1(), BipartiteSeed, "bipartite complement of F4"),
        fixed("F2", f2(), BipartiteSeed, "hexagon plus three non-consecutive pendants"),
        fixed(
            "F3",
            f3(),
            BipartiteSeed,
            "hexagon plus two length-2 legs on adjacent vertices",
        ),
        fixed("F4", f4(), BipartiteSeed, "hexagon plus three consecutive pendants"),
    ]
}

#[derive(Serialize)]
struct ManifestRow<'a> {
    name: &'a str,
    graph6: String,
    n: usize,
    m: usize,
    kind: EntryKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    source: &'a str,
}

/// One graph6 line per entry, plus a JSON manifest naming each line.
pub fn catalog_dump(entries: &[CatalogEntry]) -> (String, String) {
    let mut lines = String::new();
    let mut rows = Vec::new();
    for e in entries {
        let code = graph6::encode(&e.graph);
        lines.push_str(&code);
        lines.push('\n');
        rows.push(ManifestRow {
            name: &e.name,
            graph6: code,
            n: e.graph.n(),
            m: e.graph.edge_count(),
            kind: e.kind,
            family: e.family.map(|(f, _)| f.id()),
            k: e.family.map(|(_, k)| k),
            source: e.source,
        });
    }
    let manifest = serde_json::to_string_pretty(&rows).expect("manifest serializes");
    (lines, manifest)
}
