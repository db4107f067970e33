//! Exact arithmetic in Z\[q\] and its fraction field.

pub(crate) mod modp;
pub(crate) mod poly;
mod rational;

pub use poly::{divides_exactly, poly_gcd, DivisionCheck, IntPoly};
pub use rational::RationalFn;
