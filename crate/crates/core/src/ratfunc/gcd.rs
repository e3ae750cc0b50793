//! Polynomial gcd over cyclotomic fields.
//!
//! Coordinates are cleared to integers, then the monic gcd is computed modulo
//! word-sized primes `p = 1 (mod r)`. For each such prime the r-th cyclotomic
//! polynomial splits, so every root `w` of it gives a map `Z[z_r] -> F_p`.
//! The images of the gcd under all `phi(r)` roots are interpolated back to
//! power-basis coordinates, combined by CRT across primes and lifted by
//! rational reconstruction. A lifted candidate is accepted only after exact
//! trial division of both inputs, so unlucky primes can cost time but never
//! correctness. A modular gcd of degree zero at a prime where both leading
//! coefficients survive proves the inputs coprime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::PolyQ;
use crate::exact::ntheory::{factorize, gcd as gcd_u64, inv_mod, is_prime, mul_mod, pow_mod, totient};
use crate::exact::{Cyclotomic, Rational};

const PRIME_CEILING: u64 = 1 << 62;
const MAX_PRIMES: usize = 256;

/// Returns `(g, a / g, b / g)` with `g` monic. Both inputs zero yields zeros.
pub(crate) fn poly_gcd(a: &PolyQ, b: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return (PolyQ::zero(), PolyQ::zero(), PolyQ::zero()),
        (true, false) => {
            let (g, lead) = b.monic().expect("nonzero");
            return (g, PolyQ::zero(), PolyQ::constant(lead));
        }
        (false, true) => {
            let (g, lead) = a.monic().expect("nonzero");
            return (g, PolyQ::constant(lead), PolyQ::zero());
        }
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return (PolyQ::one(), a.clone(), b.clone());
    }
    if a == b {
        let (g, lead) = a.monic().expect("nonzero");
        return (g, PolyQ::constant(lead.clone()), PolyQ::constant(lead));
    }
    modular_gcd(a, b).unwrap_or_else(|| euclid_gcd(a, b))
}

fn euclid_gcd(a: &PolyQ, b: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).expect("nonzero divisor").1;
        x = std::mem::replace(&mut y, r);
    }
    let g = x.monic().expect("nonzero").0;
    let ca = a.exact_div(&g).expect("gcd divides a");
    let cb = b.exact_div(&g).expect("gcd divides b");
    (g, ca, cb)
}

/// Power-basis coordinates at order `r`, scaled to integers.
fn integral_coords(p: &PolyQ, r: u64) -> Vec<Vec<BigInt>> {
    let lifted: Vec<Cyclotomic> = p.coeffs().iter().map(|c| c.lift(r)).collect();
    let mut den = BigInt::one();
    for c in &lifted {
        for x in c.coeffs() {
            if !x.is_zero() {
                den = den.lcm(x.denom());
            }
        }
    }
    lifted
        .iter()
        .map(|c| c.coeffs().iter().map(|x| x.numer() * (&den / x.denom())).collect())
        .collect()
}

struct PrimeField {
    p: u64,
    /// Roots of the r-th cyclotomic polynomial modulo p.
    roots: Vec<u64>,
    /// Inverse of the Vandermonde matrix `[root_k^i]`.
    vandermonde_inv: Vec<Vec<u64>>,
}

impl PrimeField {
    fn new(p: u64, r: u64) -> Option<Self> {
        let w = if r == 1 { 1 } else { element_of_order(p, r)? };
        let roots: Vec<u64> = (1..=r).filter(|&k| gcd_u64(k, r) == 1).map(|k| pow_mod(w, k, p)).collect();
        let vandermonde: Vec<Vec<u64>> = roots
            .iter()
            .map(|&x| (0..roots.len() as u64).map(|i| pow_mod(x, i, p)).collect())
            .collect();
        let vandermonde_inv = invert_matrix(vandermonde, p)?;
        Some(PrimeField { p, roots, vandermonde_inv })
    }

    fn image(&self, coords: &[Vec<u64>], root: u64) -> Vec<u64> {
        let p = self.p;
        let mut out: Vec<u64> = coords
            .iter()
            .map(|c| {
                let mut acc = 0u64;
                let mut pw = 1u64;
                for &x in c {
                    acc = (acc + mul_mod(x, pw, p)) % p;
                    pw = mul_mod(pw, root, p);
                }
                acc
            })
            .collect();
        trim_mod(&mut out);
        out
    }
}

fn element_of_order(p: u64, r: u64) -> Option<u64> {
    let primes: Vec<u64> = factorize(r).into_iter().map(|(l, _)| l).collect();
    (2..p.min(10_000)).map(|g| pow_mod(g, (p - 1) / r, p)).find(|&w| {
        pow_mod(w, r, p) == 1 && primes.iter().all(|&l| pow_mod(w, r / l, p) != 1)
    })
}

fn invert_matrix(mut m: Vec<Vec<u64>>, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut inv: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let f = inv_mod(m[col][col], p)?;
        for j in 0..n {
            m[col][j] = mul_mod(m[col][j], f, p);
            inv[col][j] = mul_mod(inv[col][j], f, p);
        }
        for row in 0..n {
            if row == col || m[row][col] == 0 {
                continue;
            }
            let factor = m[row][col];
            for j in 0..n {
                m[row][j] = (m[row][j] + p - mul_mod(factor, m[col][j], p)) % p;
                inv[row][j] = (inv[row][j] + p - mul_mod(factor, inv[col][j], p)) % p;
            }
        }
    }
    Some(inv)
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p).expect("prime modulus");
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul_mod(a[top], lead_inv, p);
        if c != 0 {
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - mul_mod(c, bj, p)) % p;
            }
        }
        a.pop();
        trim_mod(&mut a);
    }
    a
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = rem_mod(a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    let lead_inv = inv_mod(*a.last().expect("nonzero gcd"), p).expect("prime modulus");
    a.iter().map(|&x| mul_mod(x, lead_inv, p)).collect()
}

fn reduce_coords(coords: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let pb = BigInt::from(p);
    coords
        .iter()
        .map(|c| c.iter().map(|x| x.mod_floor(&pb).to_u64().expect("reduced")).collect())
        .collect()
}

/// Smallest-height fraction congruent to `u` modulo `m`, if one exists with
/// numerator and denominator below `sqrt(m / 2)`.
fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Rational::new(r1, t1).ok()
}

fn modular_gcd(a: &PolyQ, b: &PolyQ) -> Option<(PolyQ, PolyQ, PolyQ)> {
    let r = crate::exact::ntheory::lcm(a.order(), b.order());
    let phi = totient(r) as usize;
    let ia = integral_coords(a, r);
    let ib = integral_coords(b, r);

    let mut best_deg = usize::MAX;
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<Vec<Rational>>> = None;

    let mut candidate = (PRIME_CEILING - 2) / r * r + 1;
    let mut used = 0;
    while used < MAX_PRIMES && candidate > r {
        let p = candidate;
        candidate -= r;
        if !is_prime(p) {
            continue;
        }
        used += 1;
        let Some(field) = PrimeField::new(p, r) else { continue };
        let ra = reduce_coords(&ia, p);
        let rb = reduce_coords(&ib, p);

        let mut images = Vec::with_capacity(phi);
        let mut unlucky = false;
        for &root in &field.roots {
            let fa = field.image(&ra, root);
            let fb = field.image(&rb, root);
            if fa.len() != ia.len() || fb.len() != ib.len() {
                unlucky = true;
                break;
            }
            images.push(gcd_mod(fa, fb, p));
        }
        if unlucky {
            continue;
        }
        let deg = images[0].len() - 1;
        if images.iter().any(|g| g.len() - 1 != deg) {
            continue;
        }
        if deg == 0 {
            return Some((PolyQ::one(), a.clone(), b.clone()));
        }
        if deg > best_deg {
            continue;
        }
        if deg < best_deg {
            best_deg = deg;
            residues = vec![vec![BigInt::zero(); phi]; deg + 1];
            modulus = BigInt::one();
            previous = None;
        }

        // interpolate coordinates mod p, then fold into the CRT accumulators
        let pb = BigInt::from(p);
        let m_inv = inv_mod((&modulus % &pb).to_u64().expect("reduced"), p).expect("coprime moduli");
        for (k, acc_row) in residues.iter_mut().enumerate() {
            for (i, acc) in acc_row.iter_mut().enumerate() {
                let mut v = 0u64;
                for (j, img) in images.iter().enumerate() {
                    v = (v + mul_mod(field.vandermonde_inv[i][j], img[k], p)) % p;
                }
                let cur = (&*acc % &pb).to_u64().expect("reduced");
                let delta = mul_mod((v + p - cur) % p, m_inv, p);
                *acc += &modulus * delta;
            }
        }
        modulus *= &pb;

        let lifted: Option<Vec<Vec<Rational>>> = residues
            .iter()
            .map(|row| row.iter().map(|u| rational_reconstruct(u, &modulus)).collect())
            .collect();
        let Some(lifted) = lifted else { continue };
        if previous.as_ref() != Some(&lifted) {
            previous = Some(lifted);
            continue;
        }
        let g = PolyQ::new(
            lifted
                .into_iter()
                .map(|coords| Cyclotomic::new(r, coords).expect("phi(r) coordinates"))
                .collect(),
        );
        if let (Some(ca), Some(cb)) = (a.exact_div(&g), b.exact_div(&g)) {
            return Some((g, ca, cb));
        }
        previous = None;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reconstruct_small_fractions() {
        let m = BigInt::from(1_000_003u64);
        let inv3 = BigInt::from(inv_mod(3, 1_000_003).unwrap());
        let u = (BigInt::from(-2) * inv3).mod_floor(&m);
        assert_eq!(rational_reconstruct(&u, &m), Some(Rational::new(-2, 3).unwrap()));
    }

    #[test]
    fn gcd_of_powers_of_a_cyclotomic_binomial() {
        let base = PolyQ::from_ints(&[1, 0, 0, 0, 0, 1]);
        let a = base.pow(6);
        let b = &base.pow(4) * &PolyQ::from_ints(&[3, 1, 0, 1]);
        let (g, ca, cb) = poly_gcd(&a, &b);
        assert_eq!(g, base.pow(4));
        assert_eq!(ca, base.pow(2));
        assert_eq!(cb, PolyQ::from_ints(&[3, 1, 0, 1]));
    }

    #[test]
    fn gcd_with_rational_and_cyclotomic_coefficients() {
        let i = Cyclotomic::root_of_unity(4, 1);
        let half = Cyclotomic::from_rational(Rational::new(1, 2).unwrap());
        let f = PolyQ::new(vec![half.clone(), i.clone(), Cyclotomic::one()]);
        let u = PolyQ::new(vec![&i * &half, Cyclotomic::from_int(7), Cyclotomic::from_int(-3)]);
        let v = PolyQ::new(vec![Cyclotomic::from_int(2), Cyclotomic::zero(), &i + &half]);
        let (g, _, _) = poly_gcd(&(&f * &u), &(&f * &v));
        assert_eq!(g, f);
    }

    fn small_poly(order: u64) -> impl Strategy<Value = PolyQ> {
        let phi = totient(order) as usize;
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, phi), 1..5).prop_map(move |cs| {
            PolyQ::new(
                cs.into_iter()
                    .map(|c| Cyclotomic::new(order, c.into_iter().map(Rational::from).collect()).unwrap())
                    .collect(),
            )
        })
    }

    fn triple() -> impl Strategy<Value = (PolyQ, PolyQ, PolyQ)> {
        prop::sample::select(vec![1u64, 3, 4, 5, 6])
            .prop_flat_map(|o| (small_poly(o), small_poly(o), small_poly(o)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn modular_gcd_matches_euclid((f, u, v) in triple()) {
            let a = &f * &u;
            let b = &f * &v;
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (g, ca, cb) = poly_gcd(&a, &b);
            let (e, _, _) = euclid_gcd(&a, &b);
            prop_assert_eq!(&g, &e);
            prop_assert_eq!(&(&g * &ca), &a);
            prop_assert_eq!(&(&g * &cb), &b);
        }
    }
}
