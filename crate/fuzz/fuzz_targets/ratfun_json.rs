#![no_main]

use libfuzzer_sys::fuzz_target;
use qeuler::ratfunc::{RatFunJson, RatFunQ};

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<RatFunJson>(data) else { return };
    // Keep decoding cheap; degree and order bounds are not what is under test.
    if json.num.len() + json.den.len() > 64 || json.order > 512 {
        return;
    }
    let Ok(f) = RatFunQ::try_from(&json) else { return };
    let encoded = RatFunJson::from(&f);
    let back = RatFunQ::try_from(&encoded).expect("encoder output decodes");
    assert_eq!(back, f);
    assert_eq!(RatFunJson::from(&back), encoded);
});
