//! Independent checks of the identities satisfied by the q-Euler values:
//! exact symbolic identities, congruences in residue rings, and numeric
//! comparison against truncated series with rigorous tail bounds.

mod congruence;
mod distribution;
mod oracle;
mod series;

pub use congruence::{
    congruence_modulus, twisted_integer_sum, verify_theorem2, verify_theorem2_in, CongruenceReport, HypothesisMode,
};
pub use distribution::{
    distribution_number, distribution_value, verify_distribution, verify_distribution_at, DistributionMode,
    DistributionReport,
};
pub use oracle::{classical_euler_numbers, classical_euler_oracle, series_division_oracle};
pub use series::{
    series_partial, series_sum, series_sum_with_ceiling, SeriesEstimate, DEFAULT_CEILING, MAX_TERMS,
};
pub(crate) use series::dominated_sum;

use crate::dirichlet::DirichletChar;
use crate::error::Result;
use crate::exact::{Cyclotomic, Rational};
use crate::qeuler::{
    binomial_poly, classical_limit, frobenius_euler_numbers, frobenius_parameter, poly_eval, twisted_power_sum,
    QEulerSession,
};
use crate::ratfunc::{PolyQ, RatFunQ};

/// Both sides of `q^d E_{n,chi,q}(d) + E_{n,chi,q} = [2]_q sum_{k<d} chi(k) (-q)^k k^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub n: usize,
    pub lhs: RatFunQ,
    pub rhs: RatFunQ,
    pub pass: bool,
    /// `lhs - rhs` when the sides differ.
    pub witness: Option<RatFunQ>,
}

/// Checks the identity for `n = 0..=max_n` with every `E_{j,chi,q}` taken
/// from the corrected distribution relation, so the recurrence in `qeuler`
/// is not involved. `plain` supplies the untwisted values.
pub fn verify_theorem1_sweep(plain: &mut QEulerSession, chi: &DirichletChar, max_n: usize) -> Vec<Theorem1Report> {
    let d = chi.modulus() as usize;
    let values: Vec<RatFunQ> = (0..=max_n)
        .map(|j| distribution_number(plain, chi, j, DistributionMode::Corrected))
        .collect();
    let q_d = PolyQ::monomial(Cyclotomic::one(), d);
    let at = Rational::from(d as u64);
    (0..=max_n)
        .map(|n| {
            let at_d = poly_eval(&binomial_poly(&values[..=n]), &at);
            let lhs = &at_d.mul_poly(&q_d) + &values[n];
            let rhs = RatFunQ::from_poly(twisted_power_sum(chi, n));
            let pass = lhs == rhs;
            let witness = (!pass).then(|| &lhs - &rhs);
            Theorem1Report { n, lhs, rhs, pass, witness }
        })
        .collect()
}

pub fn verify_theorem1_in(plain: &mut QEulerSession, chi: &DirichletChar, n: usize) -> Theorem1Report {
    verify_theorem1_sweep(plain, chi, n).swap_remove(n)
}

pub fn verify_theorem1(n: usize, chi: &DirichletChar) -> Theorem1Report {
    verify_theorem1_in(&mut QEulerSession::plain(), chi, n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub n: usize,
    pub exact: Cyclotomic,
    pub oracle: Cyclotomic,
    pub pass: bool,
}

/// `E_{n,chi,q}` at `q = 1` against the generating function at `q = 1`
/// (the classical Euler numbers for the character mod 1).
pub fn verify_limit_in(session: &mut QEulerSession, n: usize) -> Result<LimitReport> {
    let exact = classical_limit(&session.gen_q_euler_number(n))?;
    let oracle = if session.character().modulus() == 1 {
        Cyclotomic::from_rational(classical_euler_oracle(n))
    } else {
        series_division_oracle(session.character(), &Rational::one(), n).swap_remove(n)
    };
    Ok(LimitReport { n, pass: exact == oracle, exact, oracle })
}

/// `H_n(-1/q) == E_{n,q}` for every `n <= max_n`; returns the first failing `n`.
pub fn verify_frobenius(max_n: usize) -> std::result::Result<(), usize> {
    let h = frobenius_euler_numbers(max_n, &frobenius_parameter()).expect("-1/q is not 1");
    let mut plain = QEulerSession::plain();
    let e = plain.q_euler_numbers(max_n);
    match h.iter().zip(e).position(|(a, b)| a != b) {
        Some(n) => Err(n),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_chars;
    use crate::qeuler::q_bracket;

    #[test]
    fn theorem1_small_cases() {
        let one = DirichletChar::trivial();
        let r0 = verify_theorem1(0, &one);
        assert!(r0.pass);
        assert_eq!(r0.lhs, RatFunQ::from_poly(q_bracket(2)));
        let r1 = verify_theorem1(1, &one);
        assert!(r1.pass);
        assert!(r1.rhs.is_zero());
        let mut plain = QEulerSession::plain();
        for chi in enumerate_chars(3).unwrap() {
            for n in 0..=10 {
                let r = verify_theorem1_in(&mut plain, &chi, n);
                assert!(r.pass, "chi={} n={n}: witness {:?}", chi.index(), r.witness);
            }
        }
    }

    #[test]
    fn theorem1_matches_the_series_numerically() {
        let chi = &enumerate_chars(3).unwrap()[1];
        let q0 = num_complex::Complex64::new(0.3, 0.0);
        for n in 0..=6 {
            let r = verify_theorem1(n, chi);
            let lhs = r.lhs.eval_numeric(q0).unwrap();
            let rhs = r.rhs.eval_numeric(q0).unwrap();
            assert!((lhs - rhs).norm() < 1e-9);
        }
    }

    #[test]
    fn theorem1_rejects_the_printed_values() {
        // feeding printed-mode values into the identity breaks it
        let chi = &enumerate_chars(3).unwrap()[1];
        let mut plain = QEulerSession::plain();
        let e0 = distribution_number(&mut plain, chi, 0, DistributionMode::Printed);
        let lhs = &e0.mul_poly(&PolyQ::monomial(Cyclotomic::one(), 3)) + &e0;
        assert_ne!(lhs, RatFunQ::from_poly(twisted_power_sum(chi, 0)));
    }

    #[test]
    fn limits() {
        for d in [1, 3, 5] {
            for chi in enumerate_chars(d).unwrap() {
                let mut s = QEulerSession::new(chi);
                for n in 0..=8 {
                    assert!(verify_limit_in(&mut s, n).unwrap().pass);
                }
            }
        }
    }

    #[test]
    fn frobenius() {
        assert_eq!(verify_frobenius(10), Ok(()));
    }
}
