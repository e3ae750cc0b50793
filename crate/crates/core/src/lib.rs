pub mod dirichlet;
pub mod error;
pub mod exact;
pub mod lfunc;
pub mod qeuler;
pub mod record;
pub mod verify;
pub mod ratfunc;

pub use error::{Error, Result};
