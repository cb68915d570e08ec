#![no_main]

use deflog::{parse_sentence, render};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = parse_sentence(text) {
        let again = parse_sentence(&render(&s)).expect("rendered sentence parses");
        assert_eq!(s, again);
    }
});
