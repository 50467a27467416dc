//! Fuzzes the `min:max:points` grid-specification parser: must never panic,
//! and accepted grids must satisfy their invariants.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(grid) = bridgemax::parse::parse_grid(s) {
            assert!(grid.min < grid.max);
            assert!(grid.points >= 2);
            let v = grid.values();
            assert_eq!(v.len(), grid.points);
            assert_eq!(v[0], grid.min);
            assert_eq!(*v.last().unwrap(), grid.max);
        }
    }
});
