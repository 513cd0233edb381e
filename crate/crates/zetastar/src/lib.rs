//! Exact word algebras and high-precision numerics for multiple zeta and
//! zeta-star values.
//!
//! The crate has two halves that check each other:
//!
//! * an exact computer-algebra layer over the noncommutative polynomial
//!   algebra `Q<x, y>`: words, rational-coefficient polynomials, the
//!   harmonic / tilde / shuffle products, shuffle regularization and the
//!   star-to-plain transfer map `d`, all with arbitrary-precision rational
//!   coefficients ([`words`], [`poly`], [`maps`], [`products`],
//!   [`identities`]);
//! * a numeric layer that evaluates admissible indices to a configurable
//!   number of decimal digits, reconstructs rational multiples of powers of
//!   pi, and runs the conjecture suites ([`numerics`], [`reconstruct`],
//!   [`conjectures`]).
//!
//! Every identity the algebra layer certifies is an exact polynomial
//! equality; the numeric layer never trusts a single evaluation route — the
//! fast evaluator is validated against a slow direct-series oracle.

pub mod conjectures;
pub mod error;
pub mod identities;
pub mod maps;
pub mod numerics;
pub mod poly;
pub mod products;
pub mod reconstruct;
pub mod words;

pub use error::{Error, Result};
pub use poly::NcPoly;
pub use words::{composition_from_word, word_from_composition, Composition, Letter, Word};
