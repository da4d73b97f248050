#![no_main]

use libfuzzer_sys::fuzz_target;
use matchex::io::{read_complex, write_complex};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(k) = read_complex(text) {
        let written = write_complex(&k);
        assert_eq!(read_complex(&written).expect("written complex reparses"), k);
    }
});
