//! Machine-readable records: the `--q` value syntax and the JSON shape of
//! every record the command-line front end emits.
//!
//! A record is `{ "kind": ..., "params": {...}, "payload": {...} }`. Exact
//! values travel as [`RatFunQ`] JSON (decimal coordinate strings), numeric
//! evaluations in separate `re`/`im` fields.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::dirichlet::DirichletChar;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lfunc::LQuery;
use crate::qeuler::PolyInX;
use crate::ratfunc::RatFunQ;
use crate::verify::SeriesEstimate;

/// A value for `q`: exact when written as an integer, `a/b` or a decimal,
/// numeric when written with an imaginary part (`re+imi`, `re-imi`, `imi`).
#[derive(Clone, Debug, PartialEq)]
pub enum QValue {
    Exact(Rational),
    Complex(Complex64),
}

impl QValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            QValue::Exact(r) => Complex64::new(r.to_f64(), 0.0),
            QValue::Complex(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            QValue::Exact(r) => Some(r),
            QValue::Complex(_) => None,
        }
    }
}

fn parse_finite(s: &str, whole: &str) -> Result<f64> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse(format!("invalid complex literal {whole:?}"))),
    }
}

/// Parses `re+imi`, `re-imi`, `imi`, `i` and `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim();
    let body = t.strip_suffix('i').ok_or_else(|| Error::Parse(format!("invalid complex literal {s:?}")))?;
    let bytes = body.as_bytes();
    // The real/imaginary split is the last sign that is neither leading nor
    // part of an exponent.
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_finite(&body[..k], s)?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_finite(other, s)?,
    };
    Ok(Complex64::new(re, im))
}

/// `re+imi` with the shortest round-tripping decimal for each part.
pub fn format_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

impl FromStr for QValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_end().ends_with('i') {
            parse_complex(s).map(QValue::Complex)
        } else {
            s.parse::<Rational>().map(QValue::Exact)
        }
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Exact(r) => write!(f, "{r}"),
            QValue::Complex(z) => f.write_str(&format_complex(*z)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Numeric {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Numeric {
    fn from(z: Complex64) -> Self {
        Numeric { re: z.re, im: z.im }
    }
}

impl From<Numeric> for Complex64 {
    fn from(v: Numeric) -> Self {
        Complex64::new(v.re, v.im)
    }
}

/// One q-Euler number. `exact` is the display form of `value`; `at_q` is the
/// exact value at a rational `q`, `numeric` the value at any `q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberPayload {
    pub n: usize,
    pub exact: String,
    pub value: RatFunQ,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Numeric>,
}

/// One q-Euler polynomial; `coeffs[j]` multiplies `x^j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyPayload {
    pub n: usize,
    pub exact: String,
    pub coeffs: Vec<RatFunQ>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Vec<Numeric>>,
}

impl PolyPayload {
    pub fn poly(&self) -> PolyInX {
        PolyInX::new(self.coeffs.clone())
    }
}

/// Outcome of one check. `expect_fail` marks checks whose failure is the
/// documented outcome; they never affect the exit status.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub expect_fail: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
}

impl VerifyReport {
    pub fn new(check: &str, params: Map<String, Value>, pass: bool) -> Self {
        VerifyReport { check: check.to_string(), params, pass, expect_fail: false, witness: None, tail_bound: None }
    }

    /// True unless the check failed without being marked `expect_fail`.
    pub fn acceptable(&self) -> bool {
        self.pass || self.expect_fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LValuePayload {
    pub s: String,
    pub value_re: f64,
    pub value_im: f64,
    pub tail_bound: f64,
    pub terms_used: u64,
}

impl LValuePayload {
    pub fn new(query: &LQuery, est: &SeriesEstimate) -> Self {
        LValuePayload {
            s: format_complex(query.s),
            value_re: est.value.re,
            value_im: est.value.im,
            tail_bound: est.tail_bound,
            terms_used: est.terms_used,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Number(NumberPayload),
    Poly(PolyPayload),
    Verify(VerifyReport),
    LValue(LValuePayload),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Number(_) => "number",
            Payload::Poly(_) => "poly",
            Payload::Verify(_) => "verify",
            Payload::LValue(_) => "lvalue",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub params: Map<String, Value>,
    pub payload: Payload,
}

impl OutputRecord {
    pub fn new(params: Map<String, Value>, payload: Payload) -> Self {
        OutputRecord { params, payload }
    }

    pub fn kind(&self) -> &'static str {
        self.payload.kind()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        OutputRecord::try_from(raw)
    }
}

/// The untyped envelope; `kind` selects how `payload` is decoded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawRecord {
    pub kind: String,
    pub params: Map<String, Value>,
    pub payload: Value,
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

impl TryFrom<RawRecord> for OutputRecord {
    type Error = Error;

    fn try_from(raw: RawRecord) -> Result<Self> {
        let payload = match raw.kind.as_str() {
            "number" => Payload::Number(decode(raw.payload)?),
            "poly" => Payload::Poly(decode(raw.payload)?),
            "verify" => Payload::Verify(decode(raw.payload)?),
            "lvalue" => Payload::LValue(decode(raw.payload)?),
            other => return Err(Error::Parse(format!("unknown record kind {other:?}"))),
        };
        Ok(OutputRecord { params: raw.params, payload })
    }
}

impl From<&OutputRecord> for RawRecord {
    fn from(r: &OutputRecord) -> Self {
        let payload = match &r.payload {
            Payload::Number(p) => serde_json::to_value(p),
            Payload::Poly(p) => serde_json::to_value(p),
            Payload::Verify(p) => serde_json::to_value(p),
            Payload::LValue(p) => serde_json::to_value(p),
        }
        .expect("payloads serialize");
        RawRecord { kind: r.kind().to_string(), params: r.params.clone(), payload }
    }
}

impl Serialize for OutputRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for OutputRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRecord::deserialize(d)?;
        OutputRecord::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Value table of a character: exact power-basis coordinates at the value
/// order alongside the complex approximation.
pub fn character_json(chi: &DirichletChar) -> Value {
    let order = chi.value_order();
    let values: Vec<Value> = chi
        .values()
        .iter()
        .map(|v| {
            let z = v.to_complex();
            let coords: Vec<String> = v.lift(order).coeffs().iter().map(Rational::to_string).collect();
            serde_json::json!({ "coords": coords, "re": z.re, "im": z.im })
        })
        .collect();
    serde_json::json!({
        "modulus": chi.modulus(),
        "index": chi.index(),
        "order": chi.order(),
        "value_order": order,
        "values": values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_chars;
    use crate::lfunc::l_eval;
    use crate::qeuler::{gen_q_euler_number, q_euler_number, q_euler_poly};
    use proptest::prelude::*;
    use serde_json::json;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn roundtrip(r: &OutputRecord) {
        let text = r.to_json();
        assert_eq!(&OutputRecord::from_json(&text).unwrap(), r, "{text}");
    }

    #[test]
    fn q_value_syntax() {
        assert_eq!("1/3".parse::<QValue>().unwrap(), QValue::Exact(Rational::new(1, 3).unwrap()));
        assert_eq!("-0.25".parse::<QValue>().unwrap(), QValue::Exact(Rational::new(-1, 4).unwrap()));
        assert_eq!("0.2+0.2i".parse::<QValue>().unwrap(), QValue::Complex(c(0.2, 0.2)));
        assert_eq!("0.5-0.1i".parse::<QValue>().unwrap(), QValue::Complex(c(0.5, -0.1)));
        assert_eq!("-0.3i".parse::<QValue>().unwrap(), QValue::Complex(c(0.0, -0.3)));
        assert_eq!("i".parse::<QValue>().unwrap(), QValue::Complex(c(0.0, 1.0)));
        assert_eq!("-i".parse::<QValue>().unwrap(), QValue::Complex(c(0.0, -1.0)));
        assert_eq!("1e-3+2E-2i".parse::<QValue>().unwrap(), QValue::Complex(c(1e-3, 2e-2)));
        assert_eq!("-1e+2-3i".parse::<QValue>().unwrap(), QValue::Complex(c(-100.0, -3.0)));
        for bad in ["", "x", "1/0", "1+", "nani", "infi", "1+infi", "1++2i", "0.3j", "ii"] {
            assert!(bad.parse::<QValue>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn number_record_roundtrips() {
        let e = gen_q_euler_number(&enumerate_chars(3).unwrap()[1], 0);
        let mut params = Map::new();
        params.insert("n".into(), json!(0));
        let payload = NumberPayload {
            n: 0,
            exact: e.to_string(),
            value: e.clone(),
            at_q: None,
            numeric: Some(e.eval_numeric(c(0.3, 0.0)).unwrap().into()),
        };
        let r = OutputRecord::new(params, Payload::Number(payload));
        roundtrip(&r);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["kind"], "number");
        assert_eq!(v["payload"]["exact"], "(-q-q^2)/(1-q+q^2)");
    }

    #[test]
    fn twisted_values_keep_their_coordinates() {
        let chi = &enumerate_chars(5).unwrap()[1];
        let e = gen_q_euler_number(chi, 2);
        assert!(e.order() > 1);
        let payload = NumberPayload { n: 2, exact: e.to_string(), value: e, at_q: None, numeric: None };
        roundtrip(&OutputRecord::new(Map::new(), Payload::Number(payload)));
    }

    #[test]
    fn poly_verify_and_lvalue_records_roundtrip() {
        let p = q_euler_poly(3);
        let poly = PolyPayload { n: 3, exact: p.to_string(), coeffs: p.coeffs().to_vec(), numeric: None };
        assert_eq!(poly.poly(), p);
        roundtrip(&OutputRecord::new(Map::new(), Payload::Poly(poly)));

        let mut report = VerifyReport::new("distribution", Map::new(), false);
        report.expect_fail = true;
        report.witness = Some(q_euler_number(1).to_string());
        report.tail_bound = Some(3.5e-12);
        assert!(report.acceptable());
        roundtrip(&OutputRecord::new(Map::new(), Payload::Verify(report)));

        let query = LQuery::new(c(-1.0, 0.5), DirichletChar::trivial(), Rational::one(), c(0.3, 0.0), 1e-10).unwrap();
        let est = l_eval(&query).unwrap();
        let lv = LValuePayload::new(&query, &est);
        assert_eq!(lv.s, "-1+0.5i");
        roundtrip(&OutputRecord::new(Map::new(), Payload::LValue(lv)));
    }

    #[test]
    fn rejects_unknown_kinds_and_bad_payloads() {
        assert!(OutputRecord::from_json(r#"{"kind":"table","params":{},"payload":{}}"#).is_err());
        assert!(OutputRecord::from_json(r#"{"kind":"number","params":{},"payload":{"n":0}}"#).is_err());
        assert!(OutputRecord::from_json(r#"{"kind":"verify","params":[],"payload":{}}"#).is_err());
        assert!(OutputRecord::from_json("not json").is_err());
    }

    #[test]
    fn character_table_lists_every_residue() {
        let chi = &enumerate_chars(5).unwrap()[1];
        let v = character_json(chi);
        assert_eq!(v["values"].as_array().unwrap().len(), 5);
        assert_eq!(v["values"][0]["coords"].as_array().unwrap().iter().all(|c| c == "0"), true);
        assert_eq!(v["values"][1]["re"], 1.0);
    }

    proptest! {
        #[test]
        fn complex_format_roundtrips(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = c(re, im);
            prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }

        #[test]
        fn rational_q_roundtrips(n in -10_000i64..10_000, d in 1i64..10_000) {
            let q = QValue::Exact(Rational::new(n, d).unwrap());
            prop_assert_eq!(q.to_string().parse::<QValue>().unwrap(), q);
        }
    }
}
