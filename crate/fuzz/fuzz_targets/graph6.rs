#![no_main]
use libfuzzer_sys::fuzz_target;
use udg_graph::graph6;

fuzz_target!(|data: &str| {
    if let Ok(g) = graph6::decode(data) {
        let s = graph6::encode(&g);
        assert_eq!(graph6::decode(&s).unwrap(), g);
    }
});
