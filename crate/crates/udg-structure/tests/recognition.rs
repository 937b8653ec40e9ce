use udg_graph::{is_isomorphic, Graph};
use udg_structure::{generate_random_member, recognize_class_x, Piece, Recognition, WitnessKind};

fn member(g: &Graph) -> udg_structure::Decomposition {
    match recognize_class_x(g).expect("no internal failure") {
        Recognition::Member(d) => d,
        Recognition::Forbidden(w) => panic!("rejected with {w:?}"),
    }
}

#[test]
fn generated_members_reassemble() {
    for seed in 0..300 {
        let g = generate_random_member(seed, 40);
        assert!(g.n() <= 40);
        let d = member(&g);
        let back = d.reassemble();
        assert_eq!(back, g, "seed {seed}");
        assert!(is_isomorphic(&back, &g).is_some());
        assert!(d.non_cutset_shared_edges(&g).is_empty(), "seed {seed}");
    }
}

#[test]
fn hexagon_is_single_strip() {
    let d = member(&Graph::cycle(6));
    assert_eq!(d.components.len(), 1);
    match &d.components[0].pieces[..] {
        [Piece::Strip(s)] => assert_eq!(s.ks, vec![2]),
        p => panic!("unexpected pieces {p:?}"),
    }
}

#[test]
fn c4_rejected_with_c4() {
    match recognize_class_x(&Graph::cycle(4)).unwrap() {
        Recognition::Forbidden(w) => {
            assert_eq!(w.kind, WitnessKind::Cycle(4));
            assert!(w.verify(&Graph::cycle(4)));
        }
        r => panic!("accepted {r:?}"),
    }
}

#[test]
fn spider_rejected() {
    let g = udg_catalog::entries::s333();
    match recognize_class_x(&g).unwrap() {
        Recognition::Forbidden(w) => assert_eq!(w.kind, WitnessKind::S333),
        r => panic!("accepted {r:?}"),
    }
}

#[test]
fn trivial_inputs() {
    for n in [0, 1] {
        let d = member(&Graph::empty(n));
        assert_eq!(d.reassemble(), Graph::empty(n));
    }
}

/// Adds an edge between the ends of some induced P4, closing a C4.
fn close_c4(g: &Graph) -> Option<Graph> {
    let p4 = Graph::path(4);
    let m = udg_graph::contains_induced(g, &p4)?;
    g.with_edges(&[(m[0], m[3])]).ok()
}

#[test]
fn closing_a_four_cycle_is_rejected() {
    let mut tried = 0;
    for seed in 0..100 {
        let g = generate_random_member(seed, 40);
        let Some(h) = close_c4(&g) else { continue };
        tried += 1;
        match recognize_class_x(&h).unwrap() {
            Recognition::Forbidden(w) => assert!(w.verify(&h), "seed {seed}"),
            Recognition::Member(_) => panic!("seed {seed}: mutated graph accepted"),
        }
    }
    assert!(tried > 50);
}

#[test]
fn json_round_trip() {
    for seed in 0..20 {
        let d = member(&generate_random_member(seed, 30));
        let back = udg_structure::Decomposition::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }
}

#[test]
fn generator_is_deterministic() {
    assert_eq!(generate_random_member(7, 40), generate_random_member(7, 40));
}

#[test]
fn strip_roles_match_blocks() {
    for seed in 0..100 {
        let d = member(&generate_random_member(seed, 40));
        for s in d.strips() {
            assert!(s.is_consistent());
            assert_eq!(s.ds.len() + 1, s.ks.len());
            for (i, bl) in s.blocks.iter().enumerate() {
                assert!(s.roles[&bl.a].contains(&format!("a^{}", i + 1)));
                assert!(s.roles[&bl.b].contains(&format!("b^{}", i + 1)));
            }
        }
    }
}
