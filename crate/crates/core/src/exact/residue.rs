use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cyclotomic::Cyclotomic;
use super::ntheory::inv_mod;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A cyclotomic integer reduced coordinate-wise modulo an odd integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElem {
    modulus: u64,
    order: u64,
    coeffs: Vec<u64>,
}

impl ResidueElem {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {}, order {})", self.coeffs, self.modulus, self.order)
    }
}

fn check_modulus(m: u64) -> Result<()> {
    if m == 0 || m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    Ok(())
}

fn reduce_bigint(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
}

/// `numerator * denominator^-1 mod m` for an odd modulus `m`.
pub fn rat_mod(r: &Rational, m: u64) -> Result<u64> {
    check_modulus(m)?;
    let den = reduce_bigint(r.denom(), m);
    let inv = inv_mod(den, m).ok_or(Error::NotIntegral { modulus: m })?;
    let num = reduce_bigint(r.numer(), m);
    Ok(super::ntheory::mul_mod(num, inv, m))
}

/// Coordinate-wise [`rat_mod`]; the cyclotomic order is preserved.
pub fn cyc_to_residue(a: &Cyclotomic, m: u64) -> Result<ResidueElem> {
    check_modulus(m)?;
    let coeffs = a
        .coeffs()
        .iter()
        .map(|c| rat_mod(c, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidueElem { modulus: m, order: a.order(), coeffs })
}
