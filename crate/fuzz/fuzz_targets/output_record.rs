#![no_main]

use libfuzzer_sys::fuzz_target;
use qeuler::record::OutputRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 1 << 14 {
        return;
    }
    if let Ok(r) = OutputRecord::from_json(s) {
        let text = r.to_json();
        let back = OutputRecord::from_json(&text).expect("encoder output decodes");
        assert_eq!(back, r);
    }
});
