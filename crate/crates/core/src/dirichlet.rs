//! Dirichlet characters of odd modulus with exact cyclotomic values.
//!
//! Characters mod `d` are enumerated through the CRT decomposition
//! `(Z/d)^x = prod (Z/p^e)^x`, each factor cyclic with the smallest
//! primitive root as generator. A character is an exponent tuple
//! `(j_1, ..., j_t)` with `chi(g_i) = z^(j_i)` for `z` a primitive
//! `phi(p_i^e_i)`-th root of unity. Index order is lexicographic on the
//! tuple with the smallest prime most significant, so index 0 is principal.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ntheory::{factorize, gcd, inv_mod, lcm, primitive_root_prime_power, totient};
use crate::exact::Cyclotomic;

/// One cyclic factor `(Z/p^e)^x` of the unit group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicFactor {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: u64,
    pub generator: u64,
    pub group_order: u64,
}

/// Character with its value table materialized eagerly.
///
/// `values[k]` is `chi(k)`; nonzero values live in the field of order
/// `value_order`, which is the character order (or 1 for real characters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletChar {
    modulus: u64,
    index: usize,
    exponents: Vec<u64>,
    values: Vec<Cyclotomic>,
    order: u64,
    value_order: u64,
}

impl DirichletChar {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Exponent tuple on the generators of the cyclic factors.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Smallest `r` with `chi^r` principal.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Cyclotomic order in which the nonzero values are stored.
    pub fn value_order(&self) -> u64 {
        self.value_order
    }

    pub fn eval(&self, k: i64) -> &Cyclotomic {
        &self.values[k.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// True when every value is rational (so 0 or +-1).
    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// The principal character mod 1, identically 1.
    pub fn trivial() -> Self {
        enumerate_chars(1).expect("modulus 1 is odd").remove(0)
    }
}

impl fmt::Display for DirichletChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi[{} mod {}] = (", self.index, self.modulus)?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Cyclic factors of `(Z/d)^x` for odd `d`, smallest prime first.
pub fn unit_group_factors(d: u64) -> Result<Vec<CyclicFactor>> {
    check_modulus(d)?;
    Ok(factorize(d)
        .into_iter()
        .map(|(p, e)| {
            let modulus = p.pow(e);
            CyclicFactor {
                prime: p,
                exponent: e,
                modulus,
                generator: primitive_root_prime_power(p, e),
                group_order: totient(modulus),
            }
        })
        .collect())
}

fn check_modulus(d: u64) -> Result<()> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::EvenModulus(d));
    }
    Ok(())
}

/// All `phi(d)` characters mod `d` in enumeration order.
pub fn enumerate_chars(d: u64) -> Result<Vec<DirichletChar>> {
    let factors = unit_group_factors(d)?;
    if d == 1 {
        return Ok(vec![DirichletChar {
            modulus: 1,
            index: 0,
            exponents: Vec::new(),
            values: vec![Cyclotomic::one()],
            order: 1,
            value_order: 1,
        }]);
    }
    let exponent = factors.iter().fold(1, |acc, f| lcm(acc, f.group_order));
    // logs[k][i] = discrete log of k mod p_i^e_i, None for non-units
    let logs: Vec<Option<Vec<u64>>> = (0..d)
        .map(|k| {
            if gcd(k, d) != 1 {
                return None;
            }
            Some(factors.iter().map(|f| discrete_log(k % f.modulus, f)).collect())
        })
        .collect();

    let count = totient(d) as usize;
    let mut chars = Vec::with_capacity(count);
    let mut tuple = vec![0u64; factors.len()];
    for index in 0..count {
        let order = factors
            .iter()
            .zip(&tuple)
            .fold(1, |acc, (f, &j)| lcm(acc, f.group_order / gcd(j, f.group_order)));
        let value_order = if order <= 2 { 1 } else { order };
        let values = logs
            .iter()
            .map(|log| match log {
                None => Cyclotomic::zero(),
                Some(log) => {
                    let mut e = 0u64;
                    for ((f, &j), &l) in factors.iter().zip(&tuple).zip(log) {
                        e = (e + (exponent / f.group_order) * (j * l % f.group_order)) % exponent;
                    }
                    // z_exponent^e = z_order^(e * order / exponent); exact since chi^order = 1
                    let k = e * order / exponent;
                    if value_order == 1 {
                        Cyclotomic::from_int(if k == 0 { 1 } else { -1 })
                    } else {
                        Cyclotomic::root_of_unity(order, k as i64)
                    }
                }
            })
            .collect();
        chars.push(DirichletChar {
            modulus: d,
            index,
            exponents: tuple.clone(),
            values,
            order,
            value_order,
        });
        // odometer, last factor least significant
        for i in (0..tuple.len()).rev() {
            tuple[i] += 1;
            if tuple[i] < factors[i].group_order {
                break;
            }
            tuple[i] = 0;
        }
    }
    Ok(chars)
}

/// Character `index` mod `d`.
pub fn dirichlet_char(d: u64, index: usize) -> Result<DirichletChar> {
    let mut chars = enumerate_chars(d)?;
    if index >= chars.len() {
        return Err(Error::InvalidArgument(format!(
            "character index {index} out of range: modulus {d} has {} characters",
            chars.len()
        )));
    }
    Ok(chars.swap_remove(index))
}

pub fn char_eval(chi: &DirichletChar, k: i64) -> Cyclotomic {
    chi.eval(k).clone()
}

pub fn is_principal(chi: &DirichletChar) -> bool {
    chi.is_principal()
}

fn discrete_log(a: u64, f: &CyclicFactor) -> u64 {
    let mut x = 1 % f.modulus;
    for l in 0..f.group_order {
        if x == a {
            return l;
        }
        x = x * f.generator % f.modulus;
    }
    unreachable!("{a} is not a unit mod {}", f.modulus)
}

/// The unit mod `d` that is the factor's generator mod `p^e` and 1 mod `d/p^e`.
pub fn crt_generator(f: &CyclicFactor, d: u64) -> u64 {
    let rest = d / f.modulus;
    if rest == 1 {
        return f.generator;
    }
    let inv = inv_mod(rest % f.modulus, f.modulus).expect("coprime factors");
    // x = 1 + rest * t with rest * t = g - 1 mod p^e
    let t = ((f.generator + f.modulus - 1) % f.modulus) * inv % f.modulus;
    (1 + rest * t) % d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ntheory::{multiplicative_order, pow_mod};

    const MODULI: [u64; 6] = [1, 3, 5, 7, 9, 15];

    fn units(d: u64) -> Vec<u64> {
        (0..d).filter(|&k| gcd(k, d) == 1).collect()
    }

    /// Counts maps on a cyclic unit group into the complex unit circle that
    /// respect multiplication, by trying every image of the generator among
    /// the `phi`-th roots of unity.
    fn brute_force_hom_count(d: u64, g: u64) -> usize {
        let n = totient(d);
        assert_eq!(multiplicative_order(g, d), n, "{g} does not generate mod {d}");
        let mut count = 0;
        for j in 0..n {
            let image = |k: u64| -> u64 {
                let mut x = 1 % d;
                let mut l = 0;
                while x != k % d {
                    x = x * g % d;
                    l += 1;
                }
                l * j % n
            };
            let us = units(d);
            let ok = us.iter().all(|&a| us.iter().all(|&b| (image(a) + image(b)) % n == image(a * b % d)));
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_homomorphism_oracle() {
        assert_eq!(enumerate_chars(1).unwrap().len(), 1);
        assert_eq!(enumerate_chars(3).unwrap().len(), brute_force_hom_count(3, 2));
        assert_eq!(enumerate_chars(3).unwrap().len(), 2);
        assert_eq!(enumerate_chars(9).unwrap().len(), brute_force_hom_count(9, 2));
        assert_eq!(enumerate_chars(9).unwrap().len(), 6);
        for d in [5, 7, 15, 21, 25, 27, 45, 105] {
            assert_eq!(enumerate_chars(d).unwrap().len() as u64, totient(d));
        }
    }

    #[test]
    fn even_modulus_rejected() {
        for d in [0, 2, 4, 6, 12] {
            assert_eq!(enumerate_chars(d).unwrap_err(), Error::EvenModulus(d));
        }
        assert!(Error::EvenModulus(4).to_string().contains("modulus must be odd"));
    }

    #[test]
    fn small_examples() {
        let one = DirichletChar::trivial();
        assert!(one.is_principal());
        assert!(char_eval(&one, 0).is_one());
        assert!(char_eval(&one, -7).is_one());

        let chars = enumerate_chars(3).unwrap();
        let chi = &chars[1];
        assert!(!is_principal(chi));
        assert_eq!(char_eval(chi, 2), Cyclotomic::from_int(-1));
        assert_eq!(char_eval(chi, 4), Cyclotomic::one());
        assert!(char_eval(chi, 0).is_zero());
        assert_eq!(char_eval(chi, -1), Cyclotomic::from_int(-1));

        for d in MODULI {
            assert!(enumerate_chars(d).unwrap()[0].is_principal());
        }
        assert!(dirichlet_char(9, 6).is_err());
    }

    #[test]
    fn values_vanish_exactly_off_units() {
        for d in [3, 5, 7, 9, 15, 45] {
            for chi in enumerate_chars(d).unwrap() {
                for k in 0..d {
                    assert_eq!(chi.values()[k as usize].is_zero(), gcd(k, d) > 1, "d={d} k={k}");
                }
                assert!(chi.eval(1).is_one());
            }
        }
    }

    #[test]
    fn orthogonality() {
        for d in MODULI {
            for chi in enumerate_chars(d).unwrap() {
                let s = chi.values().iter().fold(Cyclotomic::zero(), |acc, v| &acc + v);
                if chi.is_principal() {
                    assert_eq!(s, Cyclotomic::from_int(totient(d) as i64), "d={d}");
                } else {
                    assert!(s.is_zero(), "d={d} index={}", chi.index());
                }
            }
        }
    }

    #[test]
    fn multiplicative_on_units() {
        for d in MODULI {
            let us = units(d);
            for chi in enumerate_chars(d).unwrap() {
                for &k in &us {
                    for &l in &us {
                        let lhs = chi.eval((k * l % d) as i64);
                        assert_eq!(lhs, &(chi.eval(k as i64) * chi.eval(l as i64)), "d={d} k={k} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn values_are_roots_of_unity_of_the_right_order() {
        for d in [5, 7, 9, 15, 21, 63] {
            for chi in enumerate_chars(d).unwrap() {
                for &k in &units(d) {
                    assert!(chi.eval(k as i64).pow(chi.order()).is_one());
                }
                // order is attained: chi^(order/p) is not principal for any prime p | order
                for (p, _) in factorize(chi.order()) {
                    let r = chi.order() / p;
                    assert!(units(d).iter().any(|&k| !chi.eval(k as i64).pow(r).is_one()));
                }
            }
        }
    }

    #[test]
    fn closed_under_products_and_distinct() {
        for d in MODULI {
            let chars = enumerate_chars(d).unwrap();
            let tables: Vec<Vec<Cyclotomic>> = chars.iter().map(|c| c.values().to_vec()).collect();
            for i in 0..tables.len() {
                for j in 0..i {
                    assert_ne!(tables[i], tables[j], "d={d}: characters {i} and {j} coincide");
                }
            }
            for a in &tables {
                for b in &tables {
                    let prod: Vec<Cyclotomic> = a.iter().zip(b).map(|(x, y)| x * y).collect();
                    assert!(tables.contains(&prod), "d={d}: product escapes the enumeration");
                }
            }
        }
    }

    #[test]
    fn crt_generators_generate_their_factor() {
        for d in [15, 45, 105] {
            for f in unit_group_factors(d).unwrap() {
                let g = crt_generator(&f, d);
                assert_eq!(g % f.modulus, f.generator);
                assert_eq!(g % (d / f.modulus), 1 % (d / f.modulus));
                assert_eq!(multiplicative_order(g, d), f.group_order);
                assert_eq!(pow_mod(f.generator, f.group_order, f.modulus), 1);
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let chars = enumerate_chars(15).unwrap();
        let tuples: Vec<Vec<u64>> = chars.iter().map(|c| c.exponents().to_vec()).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
        assert_eq!(tuples[1], vec![0, 1]);
        assert_eq!(tuples[4], vec![1, 0]);
    }
}
