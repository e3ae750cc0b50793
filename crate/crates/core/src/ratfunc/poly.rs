use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::ntheory::lcm;
use crate::exact::{Cyclotomic, Rational};

/// Dense univariate polynomial in `q` with cyclotomic coefficients; index `i`
/// holds the coefficient of `q^i`. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<Cyclotomic>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().is_some_and(Cyclotomic::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Cyclotomic::from_int(c)).collect())
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs.into_iter().map(Cyclotomic::from_rational).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: Cyclotomic, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Cyclotomic::zero(); k + 1];
        coeffs[k] = c;
        PolyQ { coeffs }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Cyclotomic::one(), 1)
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Cyclotomic> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Cyclotomic {
        self.coeffs.get(i).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Cyclotomic::is_one)
    }

    pub fn lead(&self) -> Option<&Cyclotomic> {
        self.coeffs.last()
    }

    /// Least common multiple of the coefficient orders (1 for zero).
    pub fn order(&self) -> u64 {
        self.coeffs.iter().fold(1, |acc, c| lcm(acc, c.order()))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQ { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        PolyQ { coeffs: self.coeffs.iter().map(|x| x.scale(r)).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Cyclotomic::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Divides by the leading coefficient; returns the monic polynomial and
    /// the factor that was removed.
    pub fn monic(&self) -> Result<(Self, Cyclotomic)> {
        let lead = self.lead().ok_or(Error::DivisionByZero)?.clone();
        if lead.is_one() {
            return Ok((self.clone(), lead));
        }
        let inv = lead.inv()?;
        Ok((self.scale(&inv), lead))
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = if divisor.is_monic() { None } else { Some(divisor.coeffs[dlen - 1].inv()?) };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Cyclotomic::zero(); rem.len() - dlen + 1];
        for top in (dlen - 1..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = match &lead_inv {
                Some(inv) => &rem[top] * inv,
                None => rem[top].clone(),
            };
            let shift = top + 1 - dlen;
            for (j, d) in divisor.coeffs[..dlen - 1].iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + j] = &rem[shift + j] - &(&c * d);
                }
            }
            rem[top] = Cyclotomic::zero();
            quot[shift] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn eval(&self, at: &Cyclotomic) -> Cyclotomic {
        self.coeffs
            .iter()
            .rev()
            .fold(Cyclotomic::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn eval_rational(&self, at: &Rational) -> Cyclotomic {
        self.coeffs
            .iter()
            .rev()
            .fold(Cyclotomic::zero(), |acc, c| &acc.scale(at) + c)
    }

    pub fn eval_complex(&self, at: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * at + c.to_complex())
    }

    /// Substitutes `q -> q^d`.
    pub fn subst_power(&self, d: usize) -> Self {
        assert!(d >= 1, "substitution exponent must be positive");
        if d == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![Cyclotomic::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        PolyQ { coeffs }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        super::gcd::poly_gcd(self, other).0
    }

    /// Lifts every coefficient to a common cyclotomic order.
    pub fn lift(&self, order: u64) -> Self {
        PolyQ { coeffs: self.coeffs.iter().map(|c| c.lift(order)).collect() }
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            if !s.is_zero() {
                *c = &*c + s;
            }
        }
        PolyQ::new(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Cyclotomic::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        PolyQ::new(out)
    }
}

macro_rules! owned_ops {
    ($($Trait:ident $method:ident),*) => {$(
        impl $Trait<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                (&self).$method(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for PolyQ {
    /// Ascending powers, e.g. `1-q+q^2` or `(1+z4)*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = match c.as_rational() {
                Some(r) => (r.is_negative(), r.abs().to_string()),
                None => (false, format!("({c})")),
            };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let var = match k {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{k}")),
            };
            match var {
                None => f.write_str(&body)?,
                Some(v) if body == "1" => f.write_str(&v)?,
                Some(v) => write!(f, "{body}*{v}")?,
            }
        }
        Ok(())
    }
}
