#![no_main]

use deflog::bridges::parse_default_theory;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(theory) = parse_default_theory(text) {
        let _ = theory.to_theory();
    }
});
