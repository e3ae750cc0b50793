#![no_main]

use libfuzzer_sys::fuzz_target;
use qeuler::record::QValue;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(q) = s.parse::<QValue>() {
        let z = q.to_complex();
        if let QValue::Complex(_) = q {
            assert!(z.re.is_finite() && z.im.is_finite());
        }
        let shown = q.to_string();
        assert_eq!(shown.parse::<QValue>().unwrap(), q, "{s:?} -> {shown:?}");
    }
});
