use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use super::ntheory::{cyclotomic_poly, lcm, totient};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element of the m-th cyclotomic field, stored in the power basis
/// `1, z, ..., z^(phi(m)-1)` modulo the m-th cyclotomic polynomial.
///
/// Elements of different orders compare and combine by lifting both sides
/// into the field of order `lcm(m1, m2)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds an element from exactly `phi(order)` power-basis coordinates.
    pub fn new(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("cyclotomic order must be positive".into()));
        }
        let phi = totient(order) as usize;
        if coeffs.len() != phi {
            return Err(Error::InvalidArgument(format!(
                "order {order} needs {phi} coordinates, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    /// Reduces an arbitrary polynomial in `z_order` into the power basis.
    pub fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        assert!(order >= 1);
        let coeffs = reduce_mod_phi(poly, &phi_poly(order));
        Cyclotomic { order, coeffs }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// `z_m^k` for any integer `k`.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        assert!(order >= 1);
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(order, poly)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Embeds into the field of order `target` (a multiple of the current
    /// order) via `z_m = z_target^(target/m)`.
    pub fn lift(&self, target: u64) -> Self {
        assert!(target % self.order == 0, "cannot lift order {} into {target}", self.order);
        if target == self.order {
            return self.clone();
        }
        if let Some(r) = self.as_rational() {
            let mut coeffs = vec![Rational::zero(); totient(target) as usize];
            coeffs[0] = r.clone();
            return Cyclotomic { order: target, coeffs };
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::from_poly(target, poly)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.order, other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
            coeffs[0] = r.recip()?;
            return Ok(Cyclotomic { order: self.order, coeffs });
        }
        let modulus: Vec<Rational> = phi_poly(self.order).iter().map(|&c| Rational::from(c)).collect();
        let inv = ext_gcd_inverse(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_poly(self.order, inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one().lift(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the embedding `z_m -> exp(2 pi i / m)`.
    pub fn to_complex(&self) -> Complex64 {
        let angle = std::f64::consts::TAU / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Complex64::from_polar(c.to_f64(), angle * i as f64))
            .sum()
    }
}

/// Memoized cyclotomic polynomials; reductions ask for the same few orders
/// over and over.
fn phi_poly(order: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cache lock").get(&order) {
        return Arc::clone(p);
    }
    let p = Arc::new(cyclotomic_poly(order));
    cache.write().expect("cache lock").entry(order).or_insert(p).clone()
}

/// Remainder of `poly` modulo the monic integer polynomial `phi`, padded to
/// exactly `deg(phi)` coordinates.
fn reduce_mod_phi(mut poly: Vec<Rational>, phi: &[i64]) -> Vec<Rational> {
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for top in (deg..poly.len()).rev() {
            if poly[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[top]);
            for (j, &p) in phi[..deg].iter().enumerate() {
                let idx = top - deg + j;
                match p {
                    0 => {}
                    1 => poly[idx] -= &c,
                    -1 => poly[idx] += &c,
                    _ => poly[idx] -= &(&c * &Rational::from(p)),
                }
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

/// Inverse of `a` modulo `m` in Q[z] by the extended Euclidean algorithm.
fn ext_gcd_inverse(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rational> = vec![];
    let mut s1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0.clone();
        sub_assign(&mut s2, &qs);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant for an inverse to exist
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip().ok()?;
    Some(s0.iter().map(|x| x * &c).collect())
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = b.last().unwrap().recip().unwrap();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    for top in (b.len() - 1..rem.len()).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let c = &rem[top] * &lead_inv;
        let shift = top + 1 - b.len();
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &(&c * bj);
        }
        quot[shift] = c;
    }
    rem.truncate(b.len() - 1);
    trim(&mut rem);
    (quot, rem)
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn sub_assign(a: &mut Vec<Rational>, b: &[Rational]) {
    if a.len() < b.len() {
        a.resize(b.len(), Rational::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a);
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        if rhs.order == 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return out;
        }
        if self.order == 1 {
            return rhs + self;
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            };
        }
        self + &(-rhs)
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if self.order != rhs.order {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        if self.coeffs.len() == 1 {
            return Cyclotomic {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        Cyclotomic::from_poly(self.order, mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! owned_ops {
    ($($Trait:ident $method:ident),*) => {$(
        impl $Trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if !first || neg {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = match i {
                0 => None,
                1 => Some(format!("z{}", self.order)),
                _ => Some(format!("z{}^{i}", self.order)),
            };
            match unit {
                None => write!(f, "{mag}")?,
                Some(u) if mag.is_one() => f.write_str(&u)?,
                Some(u) => write!(f, "{mag}*{u}")?,
            }
        }
        Ok(())
    }
}

/// Field operation selector for [`cyc_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}
