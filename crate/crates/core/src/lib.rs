//! Exact computational kernel for jet ideals of determinantal varieties.
//!
//! Everything here is pure and allocation-only: no IO, no floats, no
//! randomness. Coefficients are arbitrary-precision rationals and all
//! monomial orderings are graded reverse lexicographic over an explicit
//! variable table, so results are exact and reproducible bit for bit.
//!
//! The crate is organised around one pipeline:
//!
//! * [`jets`] builds the generators of a jet ideal by truncated
//!   t-expansion of minors, plus the explicit candidate basis for the
//!   2xn second-order case;
//! * [`groebner`] provides division, S-polynomials, Buchberger's
//!   criterion and completion;
//! * [`complex`] turns a square-free leading ideal into Stanley-Reisner
//!   facet data, by brute-force dualization and by the closed facet
//!   families;
//! * [`shelling`] orders facets, verifies the shelling condition and
//!   extracts h-vectors;
//! * [`hilbert`] holds rational Hilbert series, the closed forms, a
//!   standard-monomial counting oracle and the jet-power conjecture
//!   checker.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod complex;
pub mod groebner;
pub mod hilbert;
pub mod jets;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod shelling;
pub mod vars;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use vars::VariableTable;
