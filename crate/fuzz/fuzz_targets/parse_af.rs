#![no_main]

use deflog::bridges::{af_to_theory, is_dung_theory, parse_af};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(af) = parse_af(text) {
        assert!(is_dung_theory(&af_to_theory(&af)));
    }
});
