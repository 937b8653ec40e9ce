//! Replays the checked-in fuzz seeds through the same round trips the fuzz
//! targets assert, so the seeds stay valid on stable.

use std::fs;
use std::path::PathBuf;

use udg_graph::{edgelist, graph6, Embedding};
use udg_structure::Decomposition;

fn seeds(dir: &str) -> Vec<(String, String)> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(dir);
    let mut out: Vec<_> = fs::read_dir(&root)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.display().to_string(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", root.display());
    out
}

#[test]
fn graph6_seeds_round_trip() {
    for (name, s) in seeds("graph6") {
        let g = graph6::decode(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn edgelist_seeds_round_trip() {
    for (name, s) in seeds("edgelist") {
        let g = edgelist::parse(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn embedding_seeds_round_trip() {
    for (name, s) in seeds("embedding_json") {
        let e = Embedding::from_json(&s).unwrap_or_else(|err| panic!("{name}: {err}"));
        e.validate().unwrap();
        assert_eq!(Embedding::from_json(&e.to_json()).unwrap(), e, "{name}");
    }
}

#[test]
fn decomposition_seeds_round_trip() {
    for (name, s) in seeds("decomposition_json") {
        let d = Decomposition::from_json(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(d.strips().all(|s| s.is_consistent()), "{name}");
        assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d, "{name}");
    }
}
