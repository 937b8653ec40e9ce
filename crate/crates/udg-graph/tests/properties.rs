use proptest::prelude::*;
use udg_graph::{edgelist, graph6, pendant_twin_reduce, BipartiteGraph, Graph, Part};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Random bipartite graph with a random part labelling.
fn bipartite_strategy(max_n: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n * n),
        )
            .prop_map(move |(side, bits)| {
                let parts: Vec<Part> = side.iter().map(|&s| if s { Part::U } else { Part::W }).collect();
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if parts[u] != parts[v] && bits[u * n + v] {
                            edges.push((u, v));
                        }
                    }
                }
                BipartiteGraph::new(Graph::from_edge_list(n, &edges).unwrap(), parts, false).unwrap()
            })
    })
}

/// Forest with extra leaves hung on random vertices, so pendant groups occur.
fn pendant_heavy_strategy() -> impl Strategy<Value = BipartiteGraph> {
    (2usize..10, proptest::collection::vec(any::<u16>(), 0..30)).prop_map(|(core, picks)| {
        let mut edges: Vec<(usize, usize)> = (1..core).map(|i| (i - 1, i)).collect();
        let mut n = core;
        for p in picks {
            edges.push((p as usize % n, n));
            n += 1;
        }
        BipartiteGraph::from_bipartite(Graph::from_edge_list(n, &edges).unwrap()).unwrap()
    })
}

proptest! {
    #[test]
    fn complement_involution(g in graph_strategy(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn bipartite_complement_involution(b in bipartite_strategy(12)) {
        prop_assert_eq!(b.bipartite_complement().bipartite_complement(), b.clone());
    }

    #[test]
    fn star_involution_keeps_cross_edges(b in bipartite_strategy(12)) {
        let s = b.star_op();
        prop_assert!(s.is_co());
        prop_assert_eq!(s.cross_edges(), b.cross_edges());
        prop_assert_eq!(s.star_op(), b.clone());
        // the co-bipartite record must validate as such
        prop_assert!(BipartiteGraph::new(s.graph().clone(), s.parts().to_vec(), true).is_ok());
    }

    #[test]
    fn graph6_roundtrip(g in graph_strategy(70)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g.clone());
        prop_assert_eq!(graph6::encode(&graph6::decode(&s).unwrap()), s);
    }

    #[test]
    fn graph6_never_panics(s in "\\PC{0,40}") {
        let _ = graph6::decode(&s);
    }

    #[test]
    fn edgelist_roundtrip(g in graph_strategy(20)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }

    #[test]
    fn edgelist_never_panics(s in "[0-9 \\n#x-]{0,60}") {
        let _ = edgelist::parse(&s);
    }

    #[test]
    fn pendant_reduce_then_expand(b in pendant_heavy_strategy()) {
        let (r, rec) = pendant_twin_reduce(&b);
        // no vertex keeps two pendant neighbours
        let g = r.graph();
        for v in 0..g.n() {
            let p = g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count();
            prop_assert!(p <= 1);
        }
        prop_assert_eq!(rec.expand_graph(g), b.graph().clone());
        prop_assert_eq!(rec.expand(r.parts()), b.parts().to_vec());
    }
}

#[test]
fn f1_bipartite_complement_is_f4() {
    // Fig-5 style seeds, 0-based: F1 and F4 = C6 with pendants at 2, 3, 4 (1-based)
    let f1 = Graph::from_edge_list(
        9,
        &[
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 2),
            (2, 6),
            (6, 0),
            (6, 7),
            (7, 5),
            (0, 1),
            (3, 4),
            (7, 8),
        ],
    )
    .unwrap();
    let f4 = Graph::from_edge_list(
        9,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (2, 8), (3, 7)],
    )
    .unwrap();
    let b = BipartiteGraph::from_bipartite(f1).unwrap();
    let bc = b.bipartite_complement();
    assert!(udg_graph::is_isomorphic(bc.graph(), &f4).is_some());
}
