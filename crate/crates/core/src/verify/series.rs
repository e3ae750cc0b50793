//! Truncated character-twisted series with a rigorous geometric tail bound.

use num_complex::Complex64;

use crate::dirichlet::DirichletChar;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Largest `|q0|` accepted by default.
pub const DEFAULT_CEILING: f64 = 0.95;

/// Hard cap on summed terms.
pub const MAX_TERMS: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesEstimate {
    pub value: Complex64,
    /// Upper bound on `|true sum - value|`, rounding excluded.
    pub tail_bound: f64,
    pub terms_used: u64,
}

/// Sums `[2]_q0 * sum_k term(k, (-q0)^k)` where `|term(k, w)| <= |w| (shift+k)^alpha`
/// for every `k >= 1`. Stops at the first `K` with `shift + K > 0`,
/// `r = |q0| ((shift+K+1)/(shift+K))^alpha < 1` and
/// `B_K r / (1-r) <= tol`, `B_K = |[2]_q0| |q0|^K (shift+K)^alpha`. The ratio
/// of consecutive envelope terms decreases in `k`, so `B_K r^j` dominates
/// term `K + j`.
pub(crate) fn dominated_sum(
    q0: Complex64,
    tol: f64,
    ceiling: f64,
    shift: f64,
    alpha: f64,
    mut term: impl FnMut(u64, Complex64) -> Complex64,
) -> Result<SeriesEstimate> {
    if !(q0.re.is_finite() && q0.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("q must be finite, got {q0}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let a = q0.norm();
    if a > ceiling {
        return Err(Error::SeriesTooSlow { abs: a, ceiling });
    }
    let two = Complex64::new(1.0, 0.0) + q0;
    let step = -q0;
    let mut w = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..MAX_TERMS {
        sum += term(k, w);
        let base = shift + k as f64;
        if base > 0.0 {
            let r = a * ((base + 1.0) / base).powf(alpha);
            if r < 1.0 {
                let envelope = if a == 0.0 {
                    0.0
                } else {
                    two.norm() * (k as f64 * a.ln() + alpha * base.ln()).exp()
                };
                let bound = envelope * r / (1.0 - r);
                if bound <= tol {
                    return Ok(SeriesEstimate { value: two * sum, tail_bound: bound, terms_used: k + 1 });
                }
            }
        }
        w *= step;
    }
    Err(Error::InvalidArgument(format!("series did not reach tolerance {tol} within {MAX_TERMS} terms")))
}

fn check_shift(x0: &Rational) -> Result<f64> {
    if x0.is_negative() {
        return Err(Error::InvalidArgument(format!("shift must be nonnegative, got {x0}")));
    }
    Ok(x0.to_f64())
}

fn series_term(chi: &DirichletChar, n: u32, x0: f64) -> impl Fn(u64, Complex64) -> Complex64 {
    let d = chi.modulus();
    let values: Vec<Complex64> = chi.values().iter().map(|v| v.to_complex()).collect();
    move |k, w| {
        let c = values[(k % d) as usize];
        if c == Complex64::new(0.0, 0.0) {
            return c;
        }
        // 0^0 = 1 is powi's convention
        c * w * (x0 + k as f64).powi(n as i32)
    }
}

/// `[2]_q0 sum_{k>=0} chi(k) (-q0)^k (x0+k)^n`, with `|q0| <= DEFAULT_CEILING`.
pub fn series_sum(n: u32, chi: &DirichletChar, q0: Complex64, x0: &Rational, tol: f64) -> Result<SeriesEstimate> {
    series_sum_with_ceiling(n, chi, q0, x0, tol, DEFAULT_CEILING)
}

pub fn series_sum_with_ceiling(
    n: u32,
    chi: &DirichletChar,
    q0: Complex64,
    x0: &Rational,
    tol: f64,
    ceiling: f64,
) -> Result<SeriesEstimate> {
    let x = check_shift(x0)?;
    dominated_sum(q0, tol, ceiling, x, n as f64, series_term(chi, n, x))
}

/// The first `terms` terms of the [`series_sum`] series, without a bound.
pub fn series_partial(n: u32, chi: &DirichletChar, q0: Complex64, x0: &Rational, terms: u64) -> Result<Complex64> {
    let x = check_shift(x0)?;
    let term = series_term(chi, n, x);
    let mut w = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..terms {
        sum += term(k, w);
        w *= -q0;
    }
    Ok((Complex64::new(1.0, 0.0) + q0) * sum)
}
