#![no_main]

use libfuzzer_sys::fuzz_target;
use sgforge_core::record::{parse_generators, SemigroupRecord};
use sgforge_core::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(gens) = parse_generators(text) else { return };
    if let Ok(s) = NumericalSemigroup::from_generators_within(&gens, 1 << 12) {
        for &g in &gens {
            assert!(s.contains(u64::from(g)));
        }
        let json = SemigroupRecord::new(&s).to_json();
        let back = SemigroupRecord::parse(&json).unwrap().verify().unwrap();
        assert_eq!(back, s);
    }
});
