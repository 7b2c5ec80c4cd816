#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(pres) = rba_forge::json::parse_presentation_json(data) {
        let rendered = rba_forge::json::presentation_to_json(&pres);
        let reparsed = rba_forge::json::parse_presentation_json(rendered.as_bytes()).unwrap();
        assert_eq!(reparsed, pres);
    }
});
