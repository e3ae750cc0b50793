//! The interpolating series
//!
//! ```text
//! L(s, chi | x) = [2]_q sum_{k>=0} chi(k) (-q)^k / (k + x)^s,   x > 0, |q| < 1
//! ```
//!
//! summed directly; it converges absolutely for every complex `s`, and at
//! `s = -k` it equals the twisted polynomial `E_{k,chi,q}(x)`.

use num_complex::Complex64;

use crate::dirichlet::DirichletChar;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::qeuler::{poly_eval, QEulerSession};
use crate::verify::{dominated_sum, SeriesEstimate, DEFAULT_CEILING};

#[derive(Clone, Debug, PartialEq)]
pub struct LQuery {
    pub s: Complex64,
    pub chi: DirichletChar,
    pub x: Rational,
    pub q0: Complex64,
    pub tol: f64,
}

impl LQuery {
    pub fn new(s: Complex64, chi: DirichletChar, x: Rational, q0: Complex64, tol: f64) -> Result<Self> {
        if x.is_zero() || x.is_negative() {
            return Err(Error::InvalidArgument(format!("x must be positive, got {x}")));
        }
        if !(q0.norm() < 1.0) {
            return Err(Error::InvalidArgument(format!("|q| must be below 1, got {}", q0.norm())));
        }
        if !(s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("s must be finite, got {s}")));
        }
        Ok(LQuery { s, chi, x, q0, tol })
    }
}

/// Truncated sum with the tail bounded by the envelope
/// `|[2]_q| |q|^k (k + x)^max(0, -Re s)`, valid for `k >= 1`.
pub fn l_eval(query: &LQuery) -> Result<SeriesEstimate> {
    let LQuery { s, chi, x, q0, tol } = query;
    if x.is_zero() || x.is_negative() {
        return Err(Error::InvalidArgument(format!("x must be positive, got {x}")));
    }
    let x = x.to_f64();
    let d = chi.modulus();
    let values: Vec<Complex64> = chi.values().iter().map(|v| v.to_complex()).collect();
    let alpha = (-s.re).max(0.0);
    dominated_sum(*q0, *tol, DEFAULT_CEILING, x, alpha, |k, w| {
        let c = values[(k % d) as usize];
        if c == Complex64::new(0.0, 0.0) {
            return c;
        }
        // (k + x)^(-s) through the real logarithm of k + x > 0
        c * w * (-s * (k as f64 + x).ln()).exp()
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationReport {
    pub k: usize,
    pub series: SeriesEstimate,
    pub exact: Complex64,
    pub pass: bool,
}

/// `L(-k, chi | x)` against `E_{k,chi,q}(x)` evaluated at `q0`; passes when
/// the gap is at most `tol + tail_bound`.
pub fn verify_interpolation_in(
    session: &mut QEulerSession,
    k: usize,
    x: &Rational,
    q0: Complex64,
    tol: f64,
) -> Result<InterpolationReport> {
    let query = LQuery::new(Complex64::new(-(k as f64), 0.0), session.character().clone(), x.clone(), q0, tol)?;
    let series = l_eval(&query)?;
    let exact = poly_eval(&session.gen_q_euler_poly(k), x).eval_numeric(q0)?;
    let pass = (series.value - exact).norm() <= tol + series.tail_bound;
    Ok(InterpolationReport { k, series, exact, pass })
}

pub fn verify_interpolation(k: usize, chi: &DirichletChar, x: &Rational, q0: Complex64, tol: f64) -> Result<bool> {
    Ok(verify_interpolation_in(&mut QEulerSession::new(chi.clone()), k, x, q0, tol)?.pass)
}
