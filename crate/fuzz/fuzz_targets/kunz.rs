#![no_main]

use libfuzzer_sys::fuzz_target;
use sgforge_core::kunz::{kunz_vector, satisfies_kunz, semigroup_from_kunz};

// First byte picks the multiplicity, the rest are coordinates.
fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else { return };
    let m = u32::from(m);
    let k: Vec<u32> = rest.iter().map(|&b| u32::from(b)).collect();
    let Ok(valid) = satisfies_kunz(m, &k) else { return };
    match semigroup_from_kunz(m, &k) {
        Ok(s) => {
            assert!(valid);
            assert_eq!(s.multiplicity(), m);
            assert_eq!(kunz_vector(&s).unwrap().coords(), &k[..]);
        }
        Err(_) => assert!(!valid),
    }
});
