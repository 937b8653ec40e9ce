use proptest::prelude::*;
use udg_embed::tau::tau_point;
use udg_embed::{
    duplicate_twins, embed_class_x_complement, embed_class_x_star, embed_complement_k1_cycle, embed_complement_path,
    embed_lobster_star, special_value_f, BlockGeometry, CopyClass, Spacing,
};
use udg_graph::{is_isomorphic, Embedding, Graph, Part, Point};
use udg_structure::{generate_random_member, Leg, Lobster};
use udg_verify::{check_convexity_constraints, verify_embedding, DEFAULT_SLACK, EXACT_UNIT_TOL};

fn dist(a: Point, b: Point) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

#[test]
fn circle_complements_verify() {
    for k in 1..=10 {
        let e = embed_complement_k1_cycle(k).unwrap();
        let m = 2 * k + 1;
        let want = Graph::cycle(m).disjoint_union(&Graph::empty(1)).complement();
        assert!(is_isomorphic(&e.target, &want).is_some());
        assert!(verify_embedding(&want, &e, DEFAULT_SLACK).unwrap().ok, "k = {k}");
        for i in 0..m {
            assert!(dist(e.points[i], e.points[m]) <= 1.0);
        }
    }
}

#[test]
fn triangle_rim_is_independent() {
    let e = embed_complement_k1_cycle(1).unwrap();
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(dist(e.points[i], e.points[j]) > 1.0);
        }
    }
}

#[test]
fn path_complements_verify() {
    for m in 1..=15 {
        let e = embed_complement_path(m).unwrap();
        assert!(
            verify_embedding(&Graph::path(m).complement(), &e, DEFAULT_SLACK)
                .unwrap()
                .ok,
            "m = {m}"
        );
    }
    let two = embed_complement_path(2).unwrap();
    assert!(dist(two.points[0], two.points[1]) > 1.0);
}

fn basic_lobster(spine: usize, legs: &[(bool, bool)]) -> Lobster {
    let mut next = spine;
    let mut out = Vec::new();
    for &(leg, foot) in legs.iter().take(spine) {
        let mut l = Vec::new();
        if leg {
            let f = foot.then(|| next + 1);
            l.push(Leg { leg: next, foot: f });
            next += 1 + foot as usize;
        }
        out.push(l);
    }
    Lobster {
        spine: (0..spine).collect(),
        legs: out,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn lobster_margins(spine in 1usize..12, legs in proptest::collection::vec((any::<bool>(), any::<bool>()), 12)) {
        let l = basic_lobster(spine, &legs);
        let mu = 1.0 / (2.0 * spine as f64);
        let e = embed_lobster_star(&l, mu).unwrap();
        let r = verify_embedding(&e.target, &e, DEFAULT_SLACK).unwrap();
        prop_assert!(r.ok);
        let parts = e.parts.as_ref().unwrap();
        for u in 0..e.points.len() {
            for v in u + 1..e.points.len() {
                let d = dist(e.points[u], e.points[v]);
                if parts[u] == parts[v] {
                    prop_assert!(d <= 1.0);
                } else if e.target.has_edge(u, v) {
                    prop_assert!((d - 1.0).abs() <= EXACT_UNIT_TOL || 1.0 - d >= mu * mu / 16.0 - 1e-9);
                } else {
                    prop_assert!(d - 1.0 >= mu * mu / 16.0 - 1e-9);
                }
            }
        }
        for w in l.spine.windows(2) {
            prop_assert!((dist(e.points[w[0]], e.points[w[1]]) - 1.0).abs() <= EXACT_UNIT_TOL);
        }
        for leg in l.legs.iter().flatten() {
            if let Some(f) = leg.foot {
                prop_assert!((dist(e.points[leg.leg], e.points[f]) - 1.0).abs() <= EXACT_UNIT_TOL);
            }
        }
    }
}

#[test]
fn lobster_mu_range() {
    let l = basic_lobster(4, &[(true, true); 4]);
    assert!(embed_lobster_star(&l, 0.25).is_err());
    assert!(embed_lobster_star(&l, 0.0).is_err());
    assert!(embed_lobster_star(&l, 0.2).is_ok());
}

#[test]
fn single_hexagon_distances() {
    let eps = 1.0 / 256.0;
    let p = BlockGeometry::new(eps).base;
    let floor = (1.0 + eps * eps / 4.0).sqrt() - 1e-12;
    assert!((p.r1.dist(p.r2) - 1.0).abs() < 1e-12);
    assert!(p.r1.dist(p.g2) >= floor);
    assert!(p.r2.dist(p.b2) >= floor);
    assert!(p.b2.dist(p.g2) >= floor);
    let d = p.g1.dist(p.b1);
    assert!((1.0 - 10.0 * eps * eps..=1.0 - 9.0 * eps * eps).contains(&d));
}

#[test]
fn vertex_join_clears_diagonal() {
    for eps in [1.0 / 130.0, 1.0 / 256.0, 1.0 / 1024.0] {
        let geo = BlockGeometry::new(eps);
        let a = geo.attach(0.0, true, true);
        let p = geo.at(0.0);
        assert!(a.a3.dist(p.r2) >= 1.0 + eps * eps / 64.0, "eps = {eps}");
    }
}

#[test]
fn tau_keeps_vertical_unit_pairs() {
    for &(x, y) in &[(0.0, 0.0), (0.1, 0.03), (0.3, -0.05)] {
        let a = tau_point(Point::new(x, 1.0 + y), Part::W);
        let b = tau_point(Point::new(x, y), Part::U);
        assert!((dist(a, b) - 1.0).abs() < 1e-14);
    }
}

#[test]
fn special_value_expansion_at_small_beta() {
    let (a, b) = (0.01, 0.001);
    let f = special_value_f(b, a);
    assert!((f - (a + b * b / 2.0)).abs() < 1e-8);
}

#[test]
fn duplicate_fixed_offsets_are_exact() {
    // edge 0-1 with twins 2-3 and 4-5, on the two bands
    let g = Graph::from_edge_list(
        6,
        &[(0, 1), (2, 3), (4, 5), (0, 3), (0, 5), (2, 1), (2, 5), (4, 1), (4, 3)],
    )
    .unwrap();
    let parts = vec![Part::U, Part::W, Part::U, Part::W, Part::U, Part::W];
    let star = udg_graph::BipartiteGraph::new(g, parts.clone(), false)
        .unwrap()
        .star_op()
        .into_graph();
    let h = Embedding::new(
        star.induced_subgraph(&[0, 1]),
        vec![Point::new(0.0, 0.0), Point::new(0.0, 0.99)],
    )
    .unwrap()
    .with_parts(vec![Part::U, Part::W]);
    let class = CopyClass {
        axis: udg_embed::vec2::v2(1.0, 0.0),
        copies: vec![vec![(0, 2), (1, 3)], vec![(0, 4), (1, 5)]],
        scale: 0.01,
    };
    let e = duplicate_twins(&h, &[0, 1], &star, &[class], Spacing::Fixed(0.5)).unwrap();
    assert_eq!(e.points[2].x, 0.005);
    assert_eq!(e.points[4].x, 0.01);
    assert!(verify_embedding(&star, &e, DEFAULT_SLACK).unwrap().ok);
    let same = duplicate_twins(&h, &[0, 1], &h.target, &[], Spacing::Adaptive).unwrap();
    assert_eq!(same.points, h.points);
}

#[test]
fn outputs_satisfy_convexity() {
    for seed in 0..10 {
        let g = generate_random_member(seed, 24);
        let (star, _) = embed_class_x_star(&g).unwrap();
        assert!(check_convexity_constraints(&star.target, &star).ok, "star seed {seed}");
        let (co, _) = embed_class_x_complement(&g).unwrap();
        assert!(
            check_convexity_constraints(&co.target, &co).ok,
            "complement seed {seed}"
        );
    }
}

#[test]
fn non_members_are_rejected() {
    let err = embed_class_x_star(&Graph::cycle(4)).unwrap_err();
    assert!(matches!(err, udg_embed::EmbedError::NotMember(_)));
}
