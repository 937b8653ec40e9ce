use std::collections::BTreeSet;

use proptest::prelude::*;
use udg_graph::components::articulation_points;
use udg_graph::cycles::is_chordless_cycle;
use udg_graph::{
    chordless_cycles_up_to, connected_components, contains_induced, is_isomorphic, two_connected_components, Graph,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
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

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Exhaustive: every subset, every ordering.
fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    subsets(host.n(), k).iter().any(|s| {
        permutations(s)
            .iter()
            .any(|m| (0..k).all(|i| (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(m[i], m[j]))))
    })
}

/// Vertex sets inducing a connected 2-regular graph.
fn brute_chordless(g: &Graph, maxlen: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for k in 3..=maxlen.min(g.n()) {
        for s in subsets(g.n(), k) {
            let sub = g.induced_subgraph(&s);
            if (0..k).all(|v| sub.degree(v) == 2) && connected_components(&sub).len() == 1 {
                out.insert(s);
            }
        }
    }
    out
}

/// Maximal vertex sets inducing a connected graph without cut vertices.
fn brute_blocks(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    let mut good: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..1 << n {
        if mask.count_ones() < 2 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub = g.induced_subgraph(&s);
        if connected_components(&sub).len() != 1 {
            continue;
        }
        let no_cut = (0..s.len()).all(|v| connected_components(&sub.remove_vertex(v)).len() == 1);
        if no_cut {
            good.push(s);
        }
    }
    good.iter()
        .filter(|s| {
            !good
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
        })
        .cloned()
        .collect()
}

fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = connected_components(g).len();
    (0..g.n())
        .filter(|&v| {
            let isolated = g.degree(v) == 0;
            connected_components(&g.remove_vertex(v)).len() + usize::from(isolated) > base
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_matches_exhaustive(host in graph_strategy(10), pattern in graph_strategy(6)) {
        let fast = contains_induced(&host, &pattern);
        prop_assert_eq!(fast.is_some(), brute_contains(&host, &pattern));
        if let Some(m) = fast {
            prop_assert_eq!(host.induced_subgraph(&m), pattern);
        }
    }

    #[test]
    fn chordless_matches_subsets(g in graph_strategy(8)) {
        let fast = chordless_cycles_up_to(&g, 8);
        for c in &fast {
            prop_assert!(is_chordless_cycle(&g, c));
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
            prop_assert!(c[1] < c[c.len() - 1]);
        }
        let sets: BTreeSet<Vec<usize>> = fast.iter().map(|c| { let mut s = c.clone(); s.sort(); s }).collect();
        prop_assert_eq!(sets.len(), fast.len());
        prop_assert_eq!(sets, brute_chordless(&g, 8));
    }

    #[test]
    fn blocks_match_definition(g in graph_strategy(8)) {
        let fast: BTreeSet<Vec<usize>> = two_connected_components(&g).into_iter().collect();
        prop_assert_eq!(fast, brute_blocks(&g));
        prop_assert_eq!(articulation_points(&g), brute_cut_vertices(&g));
    }

    #[test]
    fn isomorphism_under_relabelling(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm);
        let m = is_isomorphic(&g, &h).expect("relabelled copy is isomorphic");
        prop_assert_eq!(g.permute(&m), h);
    }
}

#[test]
fn c6_does_not_contain_c4_exhaustively() {
    assert!(!brute_contains(&Graph::cycle(6), &Graph::cycle(4)));
    assert!(contains_induced(&Graph::cycle(6), &Graph::cycle(4)).is_none());
}

#[test]
fn complement_c5_is_c5() {
    let c5 = Graph::cycle(5);
    assert!(is_isomorphic(&c5.complement(), &c5).is_some());
}

#[test]
fn two_hexagons_sharing_an_edge() {
    // hexagons 0-1-2-3-4-5 and 0-1-6-7-8-9 share edge 0-1
    let g = Graph::from_edge_list(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (1, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 0),
        ],
    )
    .unwrap();
    let cycles = chordless_cycles_up_to(&g, 10);
    assert_eq!(cycles.len(), 2);
    assert!(cycles.iter().all(|c| c.len() == 6));
    assert_eq!(brute_chordless(&g, 10).len(), 2);
}

#[test]
fn hexagon_with_pendant_blocks() {
    let g = Graph::cycle(6)
        .disjoint_union(&Graph::empty(1))
        .with_edges(&[(2, 6)])
        .unwrap();
    let blocks = two_connected_components(&g);
    assert_eq!(blocks, vec![vec![0, 1, 2, 3, 4, 5], vec![2, 6]]);
    assert_eq!(brute_blocks(&g), blocks.into_iter().collect());
}

#[test]
fn star_k16_is_from_edge_list() {
    let g = Graph::from_edge_list(7, &(1..7).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
    assert!(is_isomorphic(&g, &Graph::complete_bipartite(1, 6)).is_some());
}
