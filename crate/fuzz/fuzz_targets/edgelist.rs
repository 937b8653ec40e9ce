#![no_main]
use libfuzzer_sys::fuzz_target;
use udg_graph::edgelist;

fuzz_target!(|data: &str| {
    if let Ok(g) = edgelist::parse(data) {
        assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }
});
