#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = rba_forge::exact::parse_rational(text);
    let _ = text.parse::<rba_forge::scan::GridRange>();
    let _ = text.parse::<rba_forge::scan::Filter>();
});
