//! Exact scalars: rationals, cyclotomic field elements and residues of
//! cyclotomic integers modulo odd integers.

mod cyclotomic;
pub mod ntheory;
mod rational;
mod residue;

pub use cyclotomic::{cyc_arith, ArithOp, Cyclotomic};
pub use rational::{rat_normalize, Rational};
pub use residue::{cyc_to_residue, rat_mod, ResidueElem};
