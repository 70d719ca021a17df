#![no_main]

use libfuzzer_sys::fuzz_target;
use pd3c_core::format::{parse_ideal_file, write_ideal_file};

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse_ideal_file(src) else { return };
    // whatever parses must print back to the same polynomials
    let again = parse_ideal_file(&write_ideal_file(&file.ring, &file.polys)).expect("reparse");
    assert_eq!(again.polys.len(), file.polys.len());
    for (a, b) in again.polys.iter().zip(&file.polys) {
        assert_eq!(a.to_string(), b.to_string());
    }
});
