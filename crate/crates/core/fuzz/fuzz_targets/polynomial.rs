#![no_main]

use libfuzzer_sys::fuzz_target;
use pd3c_core::format::parse_polynomial;
use pd3c_core::PolyRing;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let ring = PolyRing::with_vars(7, "x", 4).expect("ring");
    if let Ok(f) = parse_polynomial(&ring, src) {
        assert_eq!(parse_polynomial(&ring, &f.to_string()).expect("reparse"), f);
    }
});
