#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(basis) = rba_forge::json::parse_basis_json(data) {
        let rendered = rba_forge::json::basis_to_json(&basis);
        let reparsed = rba_forge::json::parse_basis_json(rendered.as_bytes()).unwrap();
        assert_eq!(reparsed, basis);
    }
});
