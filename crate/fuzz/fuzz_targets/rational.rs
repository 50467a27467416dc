//! Fuzzes the `p/q` rational parser: must never panic, and accepted values
//! must round-trip through their canonical display form.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = bridgemax::parse::parse_rational(s) {
            let display = r.to_string();
            let back = bridgemax::parse::parse_rational(&display)
                .expect("canonical form must reparse");
            assert_eq!(r, back);
        }
    }
});
