//! q-Euler numbers and polynomials, plain and character-twisted, as exact
//! rational functions of q.
//!
//! For a character `chi` of odd modulus `d` the numbers satisfy
//!
//! ```text
//! (q^d + 1) E_n = R_n - q^d * sum_{j<n} C(n,j) d^(n-j) E_j,
//! R_n = [2]_q * sum_{k<d} chi(k) (-q)^k k^n        (0^0 = 1)
//! ```
//!
//! and the plain numbers are the case `d = 1`. The recurrence is run on
//! numerators over the fixed denominator `(1+q^d)^(n+1)`, so each value
//! costs one gcd.

use std::fmt;

use num_bigint::BigInt;

use crate::dirichlet::DirichletChar;
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational};
use crate::ratfunc::{PolyQ, RatFunQ};

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_bracket(n: usize) -> PolyQ {
    PolyQ::from_ints(&vec![1; n])
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::from(1));
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    binomial_row(n).swap_remove(k)
}

/// `R_n = [2]_q * sum_{k<d} chi(k) (-q)^k k^n` with `0^0 = 1`.
pub fn twisted_power_sum(chi: &DirichletChar, n: usize) -> PolyQ {
    let d = chi.modulus() as usize;
    let coeffs = (0..d)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let power = Rational::from_integer(num_traits::pow(BigInt::from(k), n) * sign);
            chi.values()[k].scale(&power)
        })
        .collect();
    &q_bracket(2) * &PolyQ::new(coeffs)
}

/// Values `E_0, E_1, ...` for one character, with their numerators over
/// powers of `1 + q^d`.
#[derive(Clone, Debug)]
struct Tower {
    modulus: usize,
    base: PolyQ,
    base_powers: Vec<PolyQ>,
    numerators: Vec<PolyQ>,
    values: Vec<RatFunQ>,
}

impl Tower {
    fn new(modulus: usize) -> Self {
        let base = &PolyQ::one() + &PolyQ::monomial(Cyclotomic::one(), modulus);
        Tower { modulus, base, base_powers: vec![PolyQ::one()], numerators: Vec::new(), values: Vec::new() }
    }

    fn base_power(&mut self, k: usize) -> &PolyQ {
        while self.base_powers.len() <= k {
            let next = self.base_powers.last().unwrap() * &self.base;
            self.base_powers.push(next);
        }
        &self.base_powers[k]
    }

    fn extend_to(&mut self, chi: &DirichletChar, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            let d = BigInt::from(self.modulus);
            let binom = binomial_row(m);
            // sum_{j<m} C(m,j) d^(m-j) N_j D^(m-1-j), Horner in D
            let mut acc = PolyQ::zero();
            for j in 0..m {
                let c = Rational::from_integer(&binom[j] * num_traits::pow(d.clone(), m - j));
                acc = &(&acc * &self.base) + &self.numerators[j].scale_rational(&c);
            }
            let rhs = &twisted_power_sum(chi, m) * self.base_power(m);
            let numerator = &rhs - &acc.shift(self.modulus);
            let value = RatFunQ::over_power(numerator.clone(), &self.base, m as u32 + 1).expect("1 + q^d is nonzero");
            self.numerators.push(numerator);
            self.values.push(value);
        }
    }
}

/// Polynomial in a formal variable `x` with rational-function coefficients;
/// `coeffs[j]` multiplies `x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInX {
    coeffs: Vec<RatFunQ>,
}

impl PolyInX {
    pub fn new(coeffs: Vec<RatFunQ>) -> Self {
        PolyInX { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunQ] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &RatFunQ {
        &self.coeffs[j]
    }

    /// Formal degree (`len - 1`), counting a zero leading coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x0: &Rational) -> RatFunQ {
        poly_eval(self, x0)
    }

    pub fn subst_power(&self, d: usize) -> Self {
        PolyInX { coeffs: self.coeffs.iter().map(|c| c.subst_power(d)).collect() }
    }
}

impl fmt::Display for PolyInX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (j, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (_, true) if j == 1 => f.write_str("x")?,
                (_, true) => write!(f, "x^{j}")?,
                (1, false) => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Horner evaluation at a rational point.
pub fn poly_eval(p: &PolyInX, x0: &Rational) -> RatFunQ {
    if x0.is_zero() {
        return p.coeffs.first().cloned().unwrap_or_else(RatFunQ::zero);
    }
    p.coeffs
        .iter()
        .rev()
        .fold(RatFunQ::zero(), |acc, c| &acc.scale_rational(x0) + c)
}

/// Builds `sum_l C(n,l) E_l x^(n-l)` from `E_0..E_n`.
pub fn binomial_poly(values: &[RatFunQ]) -> PolyInX {
    assert!(!values.is_empty());
    let n = values.len() - 1;
    let row = binomial_row(n);
    let coeffs = (0..=n)
        .map(|j| values[n - j].scale_rational(&Rational::from(row[n - j].clone())))
        .collect();
    PolyInX { coeffs }
}

/// Memoized computation of `E_{n,chi,q}` for one character and of the plain
/// `E_{n,q}`. Entries are append-only.
#[derive(Clone, Debug)]
pub struct QEulerSession {
    chi: DirichletChar,
    trivial: DirichletChar,
    memo_numbers: Tower,
    memo_plain: Tower,
}

impl QEulerSession {
    pub fn new(chi: DirichletChar) -> Self {
        let d = chi.modulus() as usize;
        QEulerSession { chi, trivial: DirichletChar::trivial(), memo_numbers: Tower::new(d), memo_plain: Tower::new(1) }
    }

    /// Session for the character mod 1, where both tables coincide.
    pub fn plain() -> Self {
        Self::new(DirichletChar::trivial())
    }

    pub fn character(&self) -> &DirichletChar {
        &self.chi
    }

    /// Number of memoized twisted values.
    pub fn cached(&self) -> usize {
        self.memo_numbers.values.len()
    }

    pub fn q_euler_number(&mut self, n: usize) -> RatFunQ {
        self.q_euler_numbers(n)[n].clone()
    }

    /// `E_{0,q}, ..., E_{n,q}`.
    pub fn q_euler_numbers(&mut self, n: usize) -> &[RatFunQ] {
        self.memo_plain.extend_to(&self.trivial, n);
        &self.memo_plain.values[..=n]
    }

    /// Unreduced numerators `N_l` with `E_{l,q} = N_l / (1+q)^(l+1)`.
    pub fn q_euler_numerators(&mut self, n: usize) -> &[PolyQ] {
        self.memo_plain.extend_to(&self.trivial, n);
        &self.memo_plain.numerators[..=n]
    }

    pub fn q_euler_poly(&mut self, n: usize) -> PolyInX {
        binomial_poly(self.q_euler_numbers(n))
    }

    pub fn gen_q_euler_number(&mut self, n: usize) -> RatFunQ {
        self.gen_q_euler_numbers(n)[n].clone()
    }

    /// `E_{0,chi,q}, ..., E_{n,chi,q}`.
    pub fn gen_q_euler_numbers(&mut self, n: usize) -> &[RatFunQ] {
        self.memo_numbers.extend_to(&self.chi, n);
        &self.memo_numbers.values[..=n]
    }

    pub fn gen_q_euler_poly(&mut self, n: usize) -> PolyInX {
        binomial_poly(self.gen_q_euler_numbers(n))
    }
}

pub fn q_euler_number(n: usize) -> RatFunQ {
    QEulerSession::plain().q_euler_number(n)
}

pub fn q_euler_poly(n: usize) -> PolyInX {
    QEulerSession::plain().q_euler_poly(n)
}

pub fn gen_q_euler_number(chi: &DirichletChar, n: usize) -> RatFunQ {
    QEulerSession::new(chi.clone()).gen_q_euler_number(n)
}

pub fn gen_q_euler_poly(chi: &DirichletChar, n: usize) -> PolyInX {
    QEulerSession::new(chi.clone()).gen_q_euler_poly(n)
}

/// `u = -1/q`, where the Frobenius-Euler numbers become the q-Euler numbers.
pub fn frobenius_parameter() -> RatFunQ {
    RatFunQ::new(PolyQ::from_ints(&[-1]), PolyQ::q()).expect("q is nonzero")
}

/// `H_0(u), ..., H_n(u)` from `H_0 = 1`, `(1-u) H_n = -sum_{l<n} C(n,l) H_l`.
pub fn frobenius_euler_numbers(n: usize, u: &RatFunQ) -> Result<Vec<RatFunQ>> {
    let one_minus_u = &RatFunQ::one() - u;
    if one_minus_u.is_zero() {
        return Err(Error::GeneratingFunctionPole);
    }
    let factor = -one_minus_u.inv()?;
    let mut h = vec![RatFunQ::one()];
    for m in 1..=n {
        let row = binomial_row(m);
        let sum = h
            .iter()
            .zip(&row)
            .fold(RatFunQ::zero(), |acc, (hl, c)| &acc + &hl.scale_rational(&Rational::from(c.clone())));
        h.push(&sum * &factor);
    }
    Ok(h)
}

pub fn frobenius_euler_number(n: usize, u: &RatFunQ) -> Result<RatFunQ> {
    Ok(frobenius_euler_numbers(n, u)?.swap_remove(n))
}

/// Value at `q = 1`.
pub fn classical_limit(f: &RatFunQ) -> Result<Cyclotomic> {
    f.eval(&Cyclotomic::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_chars;
    use crate::verify::{classical_euler_numbers, series_division_oracle};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(q_bracket(0), PolyQ::zero());
        assert_eq!(q_bracket(1), PolyQ::one());
        assert_eq!(q_bracket(2).to_string(), "1+q");
        assert_eq!(q_bracket(4).to_string(), "1+q+q^2+q^3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_row(4), [1, 4, 6, 4, 1].map(BigInt::from));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn first_plain_numbers() {
        assert_eq!(q_euler_number(0), RatFunQ::one());
        assert_eq!(q_euler_number(1).to_string(), "-q/(1+q)");
        let e2 = RatFunQ::new(PolyQ::from_ints(&[0, -1, 1]), PolyQ::from_ints(&[1, 2, 1])).unwrap();
        assert_eq!(q_euler_number(2), e2);
    }

    #[test]
    fn plain_numbers_match_series_division() {
        let mut s = QEulerSession::plain();
        let chi = DirichletChar::trivial();
        for q in [rat(1, 3), rat(-2, 7), rat(5, 2), rat(3, 1)] {
            let oracle = series_division_oracle(&chi, &q, 10);
            for (n, expected) in oracle.iter().enumerate() {
                let got = s.q_euler_number(n).eval(&Cyclotomic::from_rational(q.clone())).unwrap();
                assert_eq!(&got, expected, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn twisted_numbers_match_series_division() {
        for d in [3, 5, 7, 9] {
            for chi in enumerate_chars(d).unwrap() {
                let mut s = QEulerSession::new(chi.clone());
                for q in [rat(1, 2), rat(-3, 5)] {
                    let oracle = series_division_oracle(&chi, &q, 5);
                    for (n, expected) in oracle.iter().enumerate() {
                        let got = s.gen_q_euler_number(n).eval(&Cyclotomic::from_rational(q.clone())).unwrap();
                        assert_eq!(&got, expected, "d={d} chi={} n={n} q={q}", chi.index());
                    }
                }
            }
        }
    }

    #[test]
    fn nontrivial_mod_three_at_zero() {
        let chi = &enumerate_chars(3).unwrap()[1];
        let e0 = gen_q_euler_number(chi, 0);
        let expected = RatFunQ::new(PolyQ::from_ints(&[0, -1, -1]), PolyQ::from_ints(&[1, -1, 1])).unwrap();
        assert_eq!(e0, expected);
        assert_eq!(classical_limit(&e0).unwrap(), Cyclotomic::from_int(-2));
        assert_eq!(e0.to_string(), "(-q-q^2)/(1-q+q^2)");
    }

    #[test]
    fn principal_mod_one_matches_plain() {
        let mut s = QEulerSession::plain();
        for n in 0..8 {
            assert_eq!(s.gen_q_euler_number(n), s.q_euler_number(n));
            assert_eq!(s.gen_q_euler_poly(n), s.q_euler_poly(n));
        }
    }

    #[test]
    fn denominators_divide_powers_of_the_base() {
        let mut plain = QEulerSession::plain();
        for n in 0..=12 {
            let den = plain.q_euler_number(n).den().clone();
            assert!(q_bracket(2).pow(n as u32).exact_div(&den).is_some(), "n={n}");
        }
        for d in [1u64, 3, 5, 7, 9] {
            let base = &PolyQ::one() + &PolyQ::monomial(Cyclotomic::one(), d as usize);
            for chi in enumerate_chars(d).unwrap() {
                let mut s = QEulerSession::new(chi);
                for n in 0..=12 {
                    let den = s.gen_q_euler_number(n).den().clone();
                    assert!(base.pow(n as u32 + 1).exact_div(&den).is_some(), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn memo_is_transparent() {
        for chi in enumerate_chars(5).unwrap() {
            let mut warm = QEulerSession::new(chi.clone());
            warm.gen_q_euler_numbers(7);
            assert_eq!(warm.cached(), 8);
            for n in (0..=7).rev() {
                assert_eq!(warm.gen_q_euler_number(n), gen_q_euler_number(&chi, n));
            }
        }
    }

    #[test]
    fn polynomials() {
        let p0 = q_euler_poly(0);
        assert_eq!(p0.coeffs(), &[RatFunQ::one()]);
        let p1 = q_euler_poly(1);
        assert_eq!(p1.coeffs(), &[q_euler_number(1), RatFunQ::one()]);
        assert_eq!(p1.to_string(), "x + -q/(1+q)");
        assert_eq!(poly_eval(&p1, &Rational::zero()), q_euler_number(1));
        let at_one = RatFunQ::new(PolyQ::one(), q_bracket(2)).unwrap();
        assert_eq!(poly_eval(&p1, &Rational::one()), at_one);
        assert_eq!(poly_eval(&p0, &rat(7, 3)), RatFunQ::one());
        let limit: Vec<Cyclotomic> = p1.coeffs().iter().map(|c| classical_limit(c).unwrap()).collect();
        assert_eq!(limit, vec![Cyclotomic::from_rational(rat(-1, 2)), Cyclotomic::one()]);

        let chi = &enumerate_chars(3).unwrap()[1];
        let g1 = gen_q_euler_poly(chi, 1);
        assert_eq!(g1.coeffs(), &[gen_q_euler_number(chi, 1), gen_q_euler_number(chi, 0)]);
    }

    #[test]
    fn frobenius_euler() {
        let u = frobenius_parameter();
        assert_eq!(frobenius_euler_number(0, &u).unwrap(), RatFunQ::one());
        let h = frobenius_euler_numbers(8, &u).unwrap();
        let mut s = QEulerSession::plain();
        assert_eq!(h.as_slice(), s.q_euler_numbers(8));
        let at_minus_one = frobenius_euler_number(1, &RatFunQ::from_int(-1)).unwrap();
        assert_eq!(at_minus_one, RatFunQ::from_rational(rat(-1, 2)));
        assert_eq!(frobenius_euler_number(3, &RatFunQ::one()), Err(Error::GeneratingFunctionPole));
        assert!(Error::GeneratingFunctionPole.to_string().contains("pole of generating function"));
    }

    #[test]
    fn classical_limits() {
        let oracle = classical_euler_numbers(12);
        let head: Vec<String> = oracle.iter().take(8).map(|r| r.to_string()).collect();
        assert_eq!(head, ["1", "-1/2", "0", "1/4", "0", "-1/2", "0", "17/8"]);
        let mut s = QEulerSession::plain();
        for (n, e) in oracle.iter().enumerate() {
            assert_eq!(classical_limit(&s.q_euler_number(n)).unwrap(), Cyclotomic::from_rational(e.clone()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn binomial_structure(d in prop::sample::select(vec![1u64, 3, 5, 7]), idx in 0usize..8, n in 0usize..7) {
            let chars = enumerate_chars(d).unwrap();
            let chi = chars[idx % chars.len()].clone();
            let mut s = QEulerSession::new(chi);
            let p = s.gen_q_euler_poly(n);
            let row = binomial_row(n);
            prop_assert_eq!(p.degree(), n);
            for l in 0..=n {
                let expected = s.gen_q_euler_number(l).scale_rational(&Rational::from(row[l].clone()));
                prop_assert_eq!(p.coeff(n - l), &expected);
            }
            prop_assert_eq!(poly_eval(&p, &Rational::zero()), s.gen_q_euler_number(n));
        }

        #[test]
        fn shift_identity(n in 0usize..7, a in -5i64..6, b in 1i64..5) {
            // q E_n(x+1) + E_n(x) = [2]_q x^n
            let x = rat(a, b);
            let p = q_euler_poly(n);
            let shifted = poly_eval(&p, &(&x + &Rational::one())).mul_poly(&PolyQ::q());
            let lhs = &shifted + &poly_eval(&p, &x);
            let rhs = RatFunQ::from_poly(q_bracket(2).scale_rational(&x.pow(n as u32)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
