//! Exact computer algebra for verifying q-supercongruences.
//!
//! Everything here is exact: polynomials over arbitrary-precision integers,
//! their fraction field, cyclotomic factorizations, and p-adic valuations.
//! No floating point is used anywhere.
//!
//! The crate is organized around the pipeline used by the `qcongruence` CLI:
//!
//! * [`ring`] — arithmetic in Z\[q\] ([`IntPoly`]) and its fraction field
//!   ([`RationalFn`]).
//! * [`qfactor`] — q-integers, q-shifted factorials, Gaussian binomials,
//!   cyclotomic polynomials, and cyclotomic valuations.
//! * [`congruence`] — the congruence relation on rational functions modulo a
//!   polynomial, with auditable reports.
//! * [`wzpairs`] — the three built-in WZ certificate pairs and their
//!   telescoping consequences.
//! * [`suites`] — the catalog of named statements (identities, congruences,
//!   conjectures) and their verifiers.
//! * [`padic`] — the q = 1 side: exact rational sums and p-adic valuation
//!   verdicts for the corresponding integer supercongruences.

pub mod congruence;
mod cyclo;
pub mod error;
pub mod padic;
pub mod qfactor;
pub mod ring;
pub mod suites;
pub mod wzpairs;

pub use error::{Error, Result};
pub use ring::{IntPoly, RationalFn};
