#![no_main]

use chowlab::io::MatroidSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<MatroidSpec>() {
        // files are out of scope here; only named families are built
        if !matches!(spec, MatroidSpec::File(_)) {
            let _ = spec.load(10);
        }
    }
});
