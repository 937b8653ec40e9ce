#![no_main]
use libfuzzer_sys::fuzz_target;
use udg_structure::Decomposition;

fuzz_target!(|data: &str| {
    if let Ok(d) = Decomposition::from_json(data) {
        for s in d.strips() {
            let _ = s.is_consistent();
        }
        assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
    }
});
