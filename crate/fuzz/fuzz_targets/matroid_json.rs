#![no_main]

use chowlab::io::{from_json_str_capped, to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = from_json_str_capped(text, 10) {
        let again = from_json_str_capped(&to_json(&m), 10).expect("canonical form re-reads");
        assert_eq!(again, m);
    }
});
