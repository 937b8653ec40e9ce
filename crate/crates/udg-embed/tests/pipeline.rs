use udg_embed::{embed_class_x_complement, embed_class_x_star};
use udg_graph::Graph;
use udg_structure::generate_random_member;
use udg_verify::{check_strip_conditions, verify_embedding, DEFAULT_SLACK};

#[test]
fn generated_members_star() {
    let mut fails = Vec::new();
    for seed in 0..100u64 {
        let g = generate_random_member(seed, 40);
        match embed_class_x_star(&g) {
            Ok((emb, c)) => {
                let r = verify_embedding(&emb.target, &emb, DEFAULT_SLACK).unwrap();
                let s = check_strip_conditions(&emb, c.delta, c.sigma, c.q_dprime).unwrap();
                if !(r.ok && s.ok) {
                    fails.push(format!("{seed}: recheck failed"));
                }
            }
            Err(e) => fails.push(format!("{seed}: {e}")),
        }
    }
    assert!(fails.is_empty(), "{} failures:\n{}", fails.len(), fails.join("\n"));
}

#[test]
fn generated_members_complement() {
    let mut fails = Vec::new();
    for seed in 0..100u64 {
        let g = generate_random_member(seed, 40);
        match embed_class_x_complement(&g) {
            Ok((emb, c)) => {
                let r = verify_embedding(&g.complement(), &emb, DEFAULT_SLACK).unwrap();
                let bound = c.star.q_dprime * c.star.sigma / 4.0 - 1e-12;
                if !r.ok || c.scaled_min_gap < bound {
                    fails.push(format!("{seed}: ok={} gap={} bound={}", r.ok, c.scaled_min_gap, bound));
                }
            }
            Err(e) => fails.push(format!("{seed}: {e}")),
        }
    }
    assert!(fails.is_empty(), "{} failures:\n{}", fails.len(), fails.join("\n"));
}

#[test]
fn small_cases() {
    for g in [
        Graph::cycle(6),
        Graph::path(5),
        Graph::path(2),
        Graph::path(1),
        Graph::empty(3),
    ] {
        let (emb, _) = embed_class_x_star(&g).unwrap();
        assert!(verify_embedding(&emb.target, &emb, DEFAULT_SLACK).unwrap().ok);
        let (emb, _) = embed_class_x_complement(&g).unwrap();
        assert!(verify_embedding(&g.complement(), &emb, DEFAULT_SLACK).unwrap().ok);
    }
}
