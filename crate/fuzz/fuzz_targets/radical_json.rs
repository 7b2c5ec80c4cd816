#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // parsing must never panic; a successful parse must re-serialize and
    // re-parse to the same canonical value
    if let Ok(value) = rba_forge::json::parse_radical_json(data) {
        let rendered = serde_json::to_string(&value).unwrap();
        let reparsed = rba_forge::json::parse_radical_json(rendered.as_bytes()).unwrap();
        assert_eq!(reparsed, value);
    }
});
