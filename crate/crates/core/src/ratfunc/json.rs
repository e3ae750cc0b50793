//! Lossless JSON form of [`RatFunQ`]:
//! `{ "num": [[coords]...], "den": [[coords]...], "order": m }` where entry
//! `i` of `num`/`den` holds the `phi(m)` power-basis coordinates of the
//! coefficient of `q^i`, each an exact decimal fraction string.

use serde::{Deserialize, Serialize};

use super::{PolyQ, RatFunQ};
use crate::error::{Error, Result};
use crate::exact::ntheory::totient;
use crate::exact::{Cyclotomic, Rational};

/// Largest cyclotomic order accepted when decoding.
pub const MAX_DECODE_ORDER: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: Vec<Vec<String>>,
    pub den: Vec<Vec<String>>,
    pub order: u64,
}

fn encode_poly(p: &PolyQ, order: u64) -> Vec<Vec<String>> {
    p.coeffs()
        .iter()
        .map(|c| c.lift(order).coeffs().iter().map(Rational::to_string).collect())
        .collect()
}

fn decode_poly(rows: &[Vec<String>], order: u64) -> Result<PolyQ> {
    let phi = totient(order) as usize;
    let coeffs = rows
        .iter()
        .map(|row| {
            if row.len() != phi {
                return Err(Error::Parse(format!(
                    "order {order} coefficient needs {phi} coordinates, got {}",
                    row.len()
                )));
            }
            let coords = row.iter().map(|s| s.parse::<Rational>()).collect::<Result<Vec<_>>>()?;
            Cyclotomic::new(order, coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyQ::new(coeffs))
}

impl From<&RatFunQ> for RatFunJson {
    fn from(f: &RatFunQ) -> Self {
        let order = f.order();
        RatFunJson { num: encode_poly(f.num(), order), den: encode_poly(f.den(), order), order }
    }
}

impl TryFrom<&RatFunJson> for RatFunQ {
    type Error = Error;

    /// Validates shape and re-reduces, so non-canonical input is accepted and
    /// canonicalized.
    fn try_from(j: &RatFunJson) -> Result<Self> {
        if j.order == 0 || j.order > MAX_DECODE_ORDER {
            return Err(Error::Parse(format!("unsupported cyclotomic order {}", j.order)));
        }
        let num = decode_poly(&j.num, j.order)?;
        let den = decode_poly(&j.den, j.order)?;
        RatFunQ::new(num, den)
    }
}

impl Serialize for RatFunQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunQ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RatFunJson::deserialize(d)?;
        RatFunQ::try_from(&j).map_err(serde::de::Error::custom)
    }
}
