#![no_main]

use libfuzzer_sys::fuzz_target;
use qeuler::exact::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        // Display is canonical and parses back to the same value.
        let shown = r.to_string();
        assert_eq!(shown.parse::<Rational>().unwrap(), r, "{s:?} -> {shown:?}");
    }
});
