//! Reference values computed without the recurrences of `qeuler`.

use crate::dirichlet::DirichletChar;
use crate::exact::{Cyclotomic, Rational};
use crate::qeuler::binomial_row;

/// Classical Euler numbers `E_n(0)` from `sum_l C(n,l) E_l + E_n = 2 [n = 0]`.
pub fn classical_euler_numbers(n: usize) -> Vec<Rational> {
    let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let row = binomial_row(m);
        let s: Rational = (0..m).map(|l| Rational::from(row[l].clone()) * e[l].clone()).sum();
        let rhs = if m == 0 { Rational::from(2) } else { Rational::zero() };
        e.push((rhs - s) / Rational::from(2));
    }
    e
}

pub fn classical_euler_oracle(n: usize) -> Rational {
    classical_euler_numbers(n).swap_remove(n)
}

/// `n! [t^n]` of `[2]_q sum_{a<d} chi(a) (-q)^a e^(at) / (1 + q^d e^(dt))`
/// for `n <= n_max` at a fixed rational `q`, by power-series division.
/// For `d = 1` this is `[2]_q / (q e^t + 1)`.
pub fn series_division_oracle(chi: &DirichletChar, q: &Rational, n_max: usize) -> Vec<Cyclotomic> {
    let d = chi.modulus() as usize;
    let mut fact = vec![Rational::one()];
    for k in 1..=n_max {
        let next = &fact[k - 1] * &Rational::from(k as u64);
        fact.push(next);
    }
    let two_q = Rational::one() + q;
    let qd = q.pow(d as u32);
    let numer: Vec<Cyclotomic> = (0..=n_max)
        .map(|k| {
            (0..d).fold(Cyclotomic::zero(), |acc, a| {
                let s = if a % 2 == 0 { q.pow(a as u32) } else { -q.pow(a as u32) };
                let w = &two_q * &s * Rational::from(a as u64).pow(k as u32) / fact[k].clone();
                &acc + &chi.values()[a].scale(&w)
            })
        })
        .collect();
    let denom: Vec<Rational> = (0..=n_max)
        .map(|k| {
            let c = &qd * &Rational::from(d as u64).pow(k as u32) / fact[k].clone();
            if k == 0 {
                c + Rational::one()
            } else {
                c
            }
        })
        .collect();
    let inv0 = denom[0].recip().expect("1 + q^d is nonzero at the sample point");
    let mut b: Vec<Cyclotomic> = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let mut acc = numer[k].clone();
        for j in 1..=k {
            acc = &acc - &b[k - j].scale(&denom[j]);
        }
        b.push(acc.scale(&inv0));
    }
    b.iter().enumerate().map(|(k, c)| c.scale(&fact[k])).collect()
}
