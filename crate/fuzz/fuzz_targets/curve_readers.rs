//! Fuzzes the CDF-curve CSV and JSON readers: must never panic, and any
//! accepted curve must survive a write/read round trip unchanged.

#![no_main]

use bridgemax::format::{curve_from_csv, curve_from_json, curve_to_csv, curve_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(curve) = curve_from_csv(s) {
            let text = curve_to_csv(&curve).expect("accepted curve must serialize");
            assert_eq!(curve_from_csv(&text).expect("round trip"), curve);
        }
        if let Ok(curve) = curve_from_json(s) {
            let text = curve_to_json(&curve).expect("accepted curve must serialize");
            assert_eq!(curve_from_json(&text).expect("round trip"), curve);
        }
    }
});
