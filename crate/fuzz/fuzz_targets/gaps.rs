#![no_main]

use libfuzzer_sys::fuzz_target;
use sgforge_core::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let gaps: Vec<u32> = data.chunks_exact(2).map(|c| u32::from(u16::from_le_bytes([c[0], c[1]]))).collect();
    if let Ok(s) = NumericalSemigroup::from_gaps(&gaps) {
        let mut want = gaps.clone();
        want.sort_unstable();
        want.dedup();
        assert_eq!(s.gaps(), want);
        assert_eq!(NumericalSemigroup::from_generators(s.min_generators()).unwrap(), s);
    }
});
