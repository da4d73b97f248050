#![no_main]

use libfuzzer_sys::fuzz_target;
use matchex::io::{read_matching, write_matching};

// first byte picks the ground set size
fuzz_target!(|data: &[u8]| {
    let Some((&ground, rest)) = data.split_first() else { return };
    let ground = ground as usize % 129;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(m) = read_matching(text, ground) {
        let again = read_matching(&write_matching(&m), ground).expect("written matching reparses");
        assert_eq!(again.pairs(), m.pairs());
        assert_eq!(again.critical(), m.critical());
    }
});
