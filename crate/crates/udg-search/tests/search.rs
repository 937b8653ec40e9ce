use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use udg_graph::{BipartiteGraph, Graph};
use udg_search::{minimality_check, potential, potential_grad, search_embedding, Method, SearchConfig};
use udg_verify::{verify_embedding, DEFAULT_SLACK};

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &e).unwrap()
}

#[test]
fn gradient_matches_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = 1e-6;
    let mut checked = 0;
    for _ in 0..50 {
        let n = rng.gen_range(3..9);
        let g = random_graph(n, 0.5, &mut rng);
        let x: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(0.0..2.0)).collect();
        let mut grad = vec![0.0; 2 * n];
        potential_grad(&g, &x, 1e-2, &mut grad);
        for i in 0..2 * n {
            let (mut xp, mut xm) = (x.clone(), x.clone());
            xp[i] += h;
            xm[i] -= h;
            let fd = (potential(&g, &xp, 1e-2) - potential(&g, &xm, 1e-2)) / (2.0 * h);
            let scale = fd.abs().max(grad[i].abs()).max(1e-6);
            assert!((fd - grad[i]).abs() / scale < 1e-4, "coord {i}: {fd} vs {}", grad[i]);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn zero_potential_on_hand_built_configurations() {
    let g = Graph::cycle(4);
    let x = [0.0, 0.0, 0.9, 0.0, 0.9, 0.9, 0.0, 0.9];
    assert_eq!(potential(&g, &x, 1e-3), 0.0);
    let bad = [0.0, 0.0, 0.9, 0.0, 0.9, 0.9, 0.0, 1.05];
    assert!(potential(&g, &bad, 1e-3) > 0.0);
}

#[test]
fn finds_small_positives() {
    let cfg = SearchConfig::default();
    for g in [
        Graph::complete(3),
        Graph::path(7).complement(),
        Graph::complete_bipartite(1, 5),
    ] {
        let r = search_embedding(&g, &cfg).unwrap();
        let e = r.embedding.expect("found");
        assert!(verify_embedding(&g, &e, DEFAULT_SLACK).unwrap().ok);
    }
}

#[test]
fn k23_is_inconclusive() {
    let cfg = SearchConfig {
        restarts: 16,
        ..Default::default()
    };
    assert!(search_embedding(&Graph::complete_bipartite(2, 3), &cfg)
        .unwrap()
        .embedding
        .is_none());
}

#[test]
fn search_is_deterministic() {
    let cfg = SearchConfig {
        seed: 5,
        ..Default::default()
    };
    let g = Graph::cycle(5);
    assert_eq!(search_embedding(&g, &cfg).unwrap(), search_embedding(&g, &cfg).unwrap());
}

#[test]
fn cap_and_config_validated() {
    assert!(search_embedding(&Graph::empty(17), &SearchConfig::default()).is_err());
    let cfg = SearchConfig {
        restarts: 0,
        ..Default::default()
    };
    assert!(search_embedding(&Graph::empty(2), &cfg).is_err());
}

#[test]
fn minimality_of_known_graphs() {
    let cfg = SearchConfig::default();
    let c10 = BipartiteGraph::from_bipartite(Graph::cycle(10))
        .unwrap()
        .star_op()
        .into_graph();
    let k2c5 = Graph::path(2).disjoint_union(&Graph::cycle(5)).complement();
    for g in [Graph::cycle(8).complement(), k2c5, c10] {
        let r = minimality_check(&g, &cfg);
        assert!(r.all_deletions_embed);
        assert!(r.rows.iter().all(|row| row.result.method == Method::Construction));
        assert_eq!(r.whole_graph, Method::Inconclusive);
    }
    let k16 = minimality_check(&Graph::complete_bipartite(1, 6), &cfg);
    assert!(k16.all_deletions_embed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn potential_is_nonnegative_and_symmetric(seed in 0u64..1000, n in 2usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, 0.4, &mut rng);
        let x: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let p = potential(&g, &x, 1e-2);
        prop_assert!(p >= 0.0);
        let shifted: Vec<f64> = x.iter().enumerate().map(|(i, v)| v + if i % 2 == 0 { 3.0 } else { -2.0 }).collect();
        prop_assert!((potential(&g, &shifted, 1e-2) - p).abs() < 1e-9);
    }
}
