#![no_main]
use libfuzzer_sys::fuzz_target;
use udg_graph::Embedding;

fuzz_target!(|data: &str| {
    // accepted input must be internally consistent and survive a round trip
    if let Ok(e) = Embedding::from_json(data) {
        e.validate().unwrap();
        let back = Embedding::from_json(&e.to_json()).unwrap();
        assert_eq!(back.target, e.target);
        assert_eq!(back.points.len(), e.points.len());
    }
});
