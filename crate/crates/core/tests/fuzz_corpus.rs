//! Replays the checked-in fuzz seeds through the same invariants the fuzz
//! targets assert, so the corpus stays meaningful without cargo-fuzz.

use std::fs;
use std::path::PathBuf;

use qeuler::exact::Rational;
use qeuler::ratfunc::{RatFunJson, RatFunQ};
use qeuler::record::{OutputRecord, QValue};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut paths: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds for {target}");
    paths.iter().map(|p| fs::read(p).unwrap()).collect()
}

#[test]
fn rational_parse_seeds() {
    let mut parsed = 0;
    for data in seeds("rational_parse") {
        let Ok(s) = std::str::from_utf8(&data) else { continue };
        if let Ok(r) = s.parse::<Rational>() {
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn q_value_parse_seeds() {
    let mut parsed = 0;
    for data in seeds("q_value_parse") {
        let Ok(s) = std::str::from_utf8(&data) else { continue };
        if let Ok(q) = s.parse::<QValue>() {
            assert_eq!(q.to_string().parse::<QValue>().unwrap(), q);
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn ratfun_json_seeds() {
    let mut decoded = 0;
    for data in seeds("ratfun_json") {
        let Ok(json) = serde_json::from_slice::<RatFunJson>(&data) else { continue };
        let Ok(f) = RatFunQ::try_from(&json) else { continue };
        let encoded = RatFunJson::from(&f);
        let back = RatFunQ::try_from(&encoded).unwrap();
        assert_eq!(back, f);
        assert_eq!(RatFunJson::from(&back), encoded);
        decoded += 1;
    }
    assert!(decoded > 0);
}

#[test]
fn output_record_seeds() {
    let mut decoded = 0;
    for data in seeds("output_record") {
        let Ok(s) = std::str::from_utf8(&data) else { continue };
        if let Ok(r) = OutputRecord::from_json(s) {
            assert_eq!(OutputRecord::from_json(&r.to_json()).unwrap(), r);
            decoded += 1;
        }
    }
    assert!(decoded > 0);
}
