#![no_main]

use deflog::{parse_theory, render};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_theory(text) {
        Ok(theory) => {
            let lines: Vec<String> = theory.iter().map(render).collect();
            let again = parse_theory(&lines.join("\n")).expect("rendered theory parses");
            assert_eq!(theory, again);
        }
        Err(errors) => assert!(!errors.0.is_empty()),
    }
});
