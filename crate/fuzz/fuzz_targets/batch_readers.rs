//! Fuzzes the sample-batch CSV and JSON readers: must never panic, and any
//! accepted batch must survive a write/read round trip unchanged.

#![no_main]

use bridgemax::format::{batch_from_csv, batch_from_json, batch_to_csv, batch_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(batch) = batch_from_csv(s) {
            let text = batch_to_csv(&batch).expect("accepted batch must serialize");
            assert_eq!(batch_from_csv(&text).expect("round trip"), batch);
        }
        if let Ok(batch) = batch_from_json(s) {
            let text = batch_to_json(&batch).expect("accepted batch must serialize");
            assert_eq!(batch_from_json(&text).expect("round trip"), batch);
        }
    }
});
