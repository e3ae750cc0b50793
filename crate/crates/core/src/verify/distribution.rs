//! The twisted values rebuilt from plain values at `q^d` and shifted
//! arguments:
//!
//! ```text
//! E_{n,chi,q}(x) = F * d^n * sum_{a<d} (-q)^a chi(a) E_{n,q^d}((a + x)/d)
//! ```
//!
//! with `F = [2]_q / [2]_{q^d}`. The `Printed` mode drops `F`, which breaks
//! agreement with the defining series for `d > 1`; it is kept to exhibit
//! the gap.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::series::{series_sum, SeriesEstimate};
use crate::dirichlet::DirichletChar;
use crate::error::Result;
use crate::exact::{Cyclotomic, Rational};
use crate::qeuler::{binomial_row, q_bracket, QEulerSession};
use crate::ratfunc::{PolyQ, RatFunQ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistributionMode {
    Printed,
    Corrected,
}

impl DistributionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DistributionMode::Printed => "printed",
            DistributionMode::Corrected => "corrected",
        }
    }
}

/// `sum_{a<d} (-q)^a chi(a) ((a + x0)/d)^j` as a polynomial in `q`.
fn shifted_power_sum(chi: &DirichletChar, x0: &Rational, j: usize) -> PolyQ {
    let d = chi.modulus();
    let dr = Rational::from(d);
    let coeffs = (0..d)
        .map(|a| {
            let point = (Rational::from(a) + x0) / dr.clone();
            let w = if a % 2 == 0 { point.pow(j as u32) } else { -point.pow(j as u32) };
            chi.values()[a as usize].scale(&w)
        })
        .collect();
    PolyQ::new(coeffs)
}

/// Distribution-side value of `E_{n,chi,q}(x0)`.
///
/// `E_{n,q^d}(y) = sum_l C(n,l) E_{l,q^d} y^(n-l)`, so the sum over `a`
/// collapses to `sum_l C(n,l) E_{l,q^d} P_{n-l}(q)` with
/// `P_j = sum_a (-q)^a chi(a) ((a+x0)/d)^j`. Plain values enter as
/// numerators over `(1+q^d)^(l+1)`, so one reduction happens at the end.
pub fn distribution_value(
    plain: &mut QEulerSession,
    chi: &DirichletChar,
    n: usize,
    x0: &Rational,
    mode: DistributionMode,
) -> RatFunQ {
    let d = chi.modulus() as usize;
    let numerators: Vec<PolyQ> = plain.q_euler_numerators(n).iter().map(|p| p.subst_power(d)).collect();
    let base = &PolyQ::one() + &PolyQ::monomial(Cyclotomic::one(), d);
    let row = binomial_row(n);
    // sum_l C(n,l) N_l(q^d) P_{n-l} D^(n-l) over D^(n+1), Horner in D
    let mut acc = PolyQ::zero();
    for l in 0..=n {
        let term = (&numerators[l] * &shifted_power_sum(chi, x0, n - l)).scale_rational(&Rational::from(row[l].clone()));
        acc = &(&acc * &base) + &term;
    }
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(d), n));
    let mut num = acc.scale_rational(&scale);
    let mut k = n as u32 + 1;
    if mode == DistributionMode::Corrected {
        num = &num * &q_bracket(2);
        k += 1;
    }
    RatFunQ::over_power(num, &base, k).expect("1 + q^d is nonzero")
}

/// [`distribution_value`] at `x0 = 0`.
pub fn distribution_number(plain: &mut QEulerSession, chi: &DirichletChar, n: usize, mode: DistributionMode) -> RatFunQ {
    distribution_value(plain, chi, n, &Rational::zero(), mode)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistributionReport {
    pub n: usize,
    pub q0: Complex64,
    pub x0: Rational,
    pub series: SeriesEstimate,
    pub printed_value: Complex64,
    pub corrected_value: Complex64,
    pub printed_matches: bool,
    pub corrected_matches: bool,
}

impl DistributionReport {
    pub fn gap(&self, mode: DistributionMode) -> f64 {
        let v = match mode {
            DistributionMode::Printed => self.printed_value,
            DistributionMode::Corrected => self.corrected_value,
        };
        (v - self.series.value).norm()
    }

    pub fn matches(&self, mode: DistributionMode) -> bool {
        match mode {
            DistributionMode::Printed => self.printed_matches,
            DistributionMode::Corrected => self.corrected_matches,
        }
    }
}

/// Compares both modes against the series at `q0`; a mode matches when the
/// gap is at most `tol + tail_bound`.
pub fn verify_distribution_at(
    plain: &mut QEulerSession,
    chi: &DirichletChar,
    n: usize,
    x0: &Rational,
    q0: Complex64,
    tol: f64,
) -> Result<DistributionReport> {
    let series = series_sum(n as u32, chi, q0, x0, tol)?;
    let printed_value = distribution_value(plain, chi, n, x0, DistributionMode::Printed).eval_numeric(q0)?;
    let corrected_value = distribution_value(plain, chi, n, x0, DistributionMode::Corrected).eval_numeric(q0)?;
    let slack = tol + series.tail_bound;
    Ok(DistributionReport {
        n,
        q0,
        x0: x0.clone(),
        series,
        printed_value,
        corrected_value,
        printed_matches: (printed_value - series.value).norm() <= slack,
        corrected_matches: (corrected_value - series.value).norm() <= slack,
    })
}

pub fn verify_distribution(chi: &DirichletChar, n: usize, q0: Complex64, tol: f64) -> Result<DistributionReport> {
    verify_distribution_at(&mut QEulerSession::plain(), chi, n, &Rational::zero(), q0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_chars;
    use crate::qeuler::poly_eval;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn modulus_one_is_the_plain_value() {
        let mut plain = QEulerSession::plain();
        let one = DirichletChar::trivial();
        for n in 0..8 {
            for mode in [DistributionMode::Printed, DistributionMode::Corrected] {
                assert_eq!(distribution_number(&mut plain, &one, n, mode), plain.q_euler_number(n));
            }
            let x = Rational::new(3, 2).unwrap();
            let direct = poly_eval(&plain.q_euler_poly(n), &x);
            assert_eq!(distribution_value(&mut plain, &one, n, &x, DistributionMode::Corrected), direct);
        }
    }

    #[test]
    fn nontrivial_mod_three_at_zero() {
        let mut plain = QEulerSession::plain();
        let chi = &enumerate_chars(3).unwrap()[1];
        let corrected = distribution_number(&mut plain, chi, 0, DistributionMode::Corrected);
        let printed = distribution_number(&mut plain, chi, 0, DistributionMode::Printed);
        assert_eq!(corrected, RatFunQ::new(PolyQ::from_ints(&[0, -1, -1]), PolyQ::from_ints(&[1, -1, 1])).unwrap());
        assert_eq!(printed, RatFunQ::from_poly(PolyQ::from_ints(&[0, -1, -1])));
        assert_eq!(corrected, QEulerSession::new(chi.clone()).gen_q_euler_number(0));
    }

    #[test]
    fn corrected_mode_agrees_with_the_recurrence() {
        let mut plain = QEulerSession::plain();
        for d in [3, 5, 7] {
            for chi in enumerate_chars(d).unwrap() {
                let mut s = QEulerSession::new(chi.clone());
                for n in 0..6 {
                    let dist = distribution_number(&mut plain, &chi, n, DistributionMode::Corrected);
                    assert_eq!(dist, s.gen_q_euler_number(n), "d={d} chi={} n={n}", chi.index());
                }
                let x = Rational::new(1, 2).unwrap();
                let direct = poly_eval(&s.gen_q_euler_poly(4), &x);
                assert_eq!(distribution_value(&mut plain, &chi, 4, &x, DistributionMode::Corrected), direct);
            }
        }
    }

    #[test]
    fn printed_mode_misses_the_series() {
        let chi = &enumerate_chars(3).unwrap()[1];
        let report = verify_distribution(chi, 0, c(0.3, 0.0), 1e-10).unwrap();
        assert!(report.corrected_matches);
        assert!(!report.printed_matches);
        assert!(report.gap(DistributionMode::Printed) > 0.05);

        let one = DirichletChar::trivial();
        for n in 0..=6 {
            let r = verify_distribution(&one, n, c(0.3, 0.0), 1e-10).unwrap();
            assert!(r.printed_matches && r.corrected_matches, "n={n}");
        }
        for chi in enumerate_chars(5).unwrap() {
            for n in 0..=4 {
                let r = verify_distribution(&chi, n, c(0.25, 0.0), 1e-10).unwrap();
                assert!(r.corrected_matches, "chi={} n={n}", chi.index());
            }
        }
    }
}
