#![no_main]

use libfuzzer_sys::fuzz_target;
use matchex::io::{read_schedule, write_schedule};
use matchex::Graph;

// first byte picks K_n or K_{n,n}
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let n = 1 + (sel & 0x07) as usize;
    let graph = if sel & 0x80 == 0 {
        Graph::complete(n)
    } else {
        Graph::complete_bipartite(n, n)
    };
    let Ok(graph) = graph else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(s) = read_schedule(text, &graph) {
        let again = read_schedule(&write_schedule(&s, &graph), &graph).expect("written schedule reparses");
        assert_eq!(again, s);
    }
});
