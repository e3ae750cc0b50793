//! Exact rational functions in the indeterminate `q` over cyclotomic
//! coefficients, kept in a canonical reduced form.

mod gcd;
mod json;
mod poly;
mod ratfun;

pub use json::{RatFunJson, MAX_DECODE_ORDER};
pub use poly::PolyQ;
pub use ratfun::{rf_arith, rf_eval, rf_eval_numeric, rf_subst_power, RatFunQ, DEFAULT_POLE_FLOOR};
