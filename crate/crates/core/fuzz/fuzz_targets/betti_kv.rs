#![no_main]

use libfuzzer_sys::fuzz_target;
use pd3c_core::resolution::BettiTable;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(t) = BettiTable::parse_kv(src) {
        assert_eq!(BettiTable::parse_kv(&t.to_kv()).expect("reparse"), t);
        let _ = t.to_string();
    }
});
