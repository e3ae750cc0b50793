use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::gcd::poly_gcd;
use super::poly::PolyQ;
use crate::error::{Error, Result};
use crate::exact::{ArithOp, Cyclotomic, Rational};

/// Default threshold below which `|den(q0)|` counts as a pole in floating
/// evaluation.
pub const DEFAULT_POLE_FLOOR: f64 = 1e-300;

/// Reduced quotient `num / den` of polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, zero is `0 / 1`. Two
/// values are equal exactly when their canonical pairs agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunQ {
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (_, num, den) = poly_gcd(&num, &den);
        Ok(Self::from_coprime(num, den))
    }

    /// Canonical form of `num / base^k`. Common factors are stripped by at
    /// most `k` gcds against `base` itself, which is much cheaper than one
    /// gcd against `base^k` when `base` has small degree.
    pub fn over_power(mut num: PolyQ, base: &PolyQ, k: u32) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // den = base^(k - t) * prod (base / g_i) after t nontrivial rounds
        let mut cofactors = Vec::new();
        for _ in 0..k {
            // gcd(num, base) = gcd(base, num mod base), which has small degree
            let (_, r) = num.div_rem(base)?;
            let g = if r.is_zero() { base.monic()?.0 } else { poly_gcd(base, &r).0 };
            if g.is_constant() {
                break;
            }
            num = num.exact_div(&g).expect("g divides num");
            cofactors.push(base.exact_div(&g).expect("g divides base"));
        }
        let den = cofactors
            .iter()
            .fold(base.pow(k - cofactors.len() as u32), |acc, c| &acc * c);
        Ok(Self::from_coprime(num, den))
    }

    /// Assumes `gcd(num, den) = 1`; only normalizes the leading coefficient.
    fn from_coprime(num: PolyQ, den: PolyQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (den, lead) = den.monic().expect("nonzero denominator");
        let num = if lead.is_one() { num } else { num.scale(&lead.inv().expect("nonzero")) };
        RatFunQ { num, den }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunQ { num: p, den: PolyQ::one() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_poly(PolyQ::constant(c))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(Cyclotomic::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Cyclotomic::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyQ::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(PolyQ::q())
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Least common multiple of all coefficient orders.
    pub fn order(&self) -> u64 {
        crate::exact::ntheory::lcm(self.num.order(), self.den.order())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunQ { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RatFunQ { num: self.num.scale_rational(r), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &PolyQ) -> Self {
        self * &Self::from_poly(p.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        RatFunQ { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    /// Exact value at `q0`.
    pub fn eval(&self, q0: &Cyclotomic) -> Result<Cyclotomic> {
        let den = self.den.eval(q0);
        if den.is_zero() {
            return Err(Error::Pole { at: q0.to_string() });
        }
        self.num.eval(q0).checked_div(&den)
    }

    pub fn eval_numeric(&self, q0: Complex64) -> Result<Complex64> {
        self.eval_numeric_with_floor(q0, DEFAULT_POLE_FLOOR)
    }

    pub fn eval_numeric_with_floor(&self, q0: Complex64, floor: f64) -> Result<Complex64> {
        let den = self.den.eval_complex(q0);
        if !(den.norm() > floor) {
            return Err(Error::Pole { at: q0.to_string() });
        }
        Ok(self.num.eval_complex(q0) / den)
    }

    /// Substitutes `q -> q^d`. Coprimality survives the substitution, so the
    /// result is already canonical.
    pub fn subst_power(&self, d: usize) -> Self {
        RatFunQ { num: self.num.subst_power(d), den: self.den.subst_power(d) }
    }
}

pub fn rf_arith(a: &RatFunQ, b: &RatFunQ, op: ArithOp) -> Result<RatFunQ> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn rf_eval(f: &RatFunQ, q0: &Cyclotomic) -> Result<Cyclotomic> {
    f.eval(q0)
}

pub fn rf_subst_power(f: &RatFunQ, d: usize) -> Result<RatFunQ> {
    if d == 0 {
        return Err(Error::InvalidArgument("substitution exponent must be at least 1".into()));
    }
    Ok(f.subst_power(d))
}

pub fn rf_eval_numeric(f: &RatFunQ, q0: Complex64) -> Result<Complex64> {
    f.eval_numeric(q0)
}

impl Add<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn add(self, rhs: &RatFunQ) -> RatFunQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunQ::new(num, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the common factor of the denominators can cancel
        let (g, a_rest, b_rest) = poly_gcd(&self.den, &rhs.den);
        let num = &(&self.num * &b_rest) + &(&rhs.num * &a_rest);
        let den = &self.den * &b_rest;
        if g.is_one() {
            return RatFunQ::from_coprime(num, den);
        }
        let (h, _, _) = poly_gcd(&num, &g);
        if h.is_one() || num.is_zero() {
            return RatFunQ::from_coprime(num, den);
        }
        let num = num.exact_div(&h).expect("h divides num");
        let den = den.exact_div(&h).expect("h divides den");
        RatFunQ::from_coprime(num, den)
    }
}

impl Neg for &RatFunQ {
    type Output = RatFunQ;
    fn neg(self) -> RatFunQ {
        RatFunQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunQ {
    type Output = RatFunQ;
    fn neg(self) -> RatFunQ {
        -&self
    }
}

impl Sub<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn sub(self, rhs: &RatFunQ) -> RatFunQ {
        self + &(-rhs)
    }
}

impl Mul<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn mul(self, rhs: &RatFunQ) -> RatFunQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFunQ::zero();
        }
        let (_, an, bd) = poly_gcd(&self.num, &rhs.den);
        let (_, bn, ad) = poly_gcd(&rhs.num, &self.den);
        RatFunQ::from_coprime(&an * &bn, &ad * &bd)
    }
}

macro_rules! owned_ops {
    ($($Trait:ident $method:ident),*) => {$(
        impl $Trait<RatFunQ> for RatFunQ {
            type Output = RatFunQ;
            fn $method(self, rhs: RatFunQ) -> RatFunQ {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&RatFunQ> for RatFunQ {
            type Output = RatFunQ;
            fn $method(self, rhs: &RatFunQ) -> RatFunQ {
                (&self).$method(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl From<PolyQ> for RatFunQ {
    fn from(p: PolyQ) -> Self {
        Self::from_poly(p)
    }
}

fn is_single_term(p: &PolyQ) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
}

impl fmt::Display for RatFunQ {
    /// Human-readable form such as `-q/(1+q)`; powers ascend.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        if is_single_term(&self.num) && !num.contains('/') {
            f.write_str(&num)?;
        } else {
            write!(f, "({num})")?;
        }
        if is_single_term(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}
