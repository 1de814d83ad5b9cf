#![no_main]

use libfuzzer_sys::fuzz_target;
use sgforge_core::record::SemigroupRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(record) = SemigroupRecord::parse(text) else { return };
    if let Ok(s) = record.verify_within(1 << 12) {
        assert_eq!(SemigroupRecord::new(&s), record);
    }
});
