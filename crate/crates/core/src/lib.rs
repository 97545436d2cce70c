//! Exact evaluation of permanents, determinants, symmetrized permanents and
//! space-matrix determinants, both from their definitions and from
//! polarization-derived polynomial identities, with operation counting.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`]: the [`Ring`](ring::Ring) abstraction and concrete rings
//!   (rationals, integers, symbolic polynomials, `d x d` rational matrices).
//! - [`combinatorics`]: permutations, diagonals, submatrix selectors, `Sym`.
//! - [`polarization`]: the generic polarization operator.
//! - [`identities`]: definitional and identity-based evaluators.
//! - [`bench`]: instrumented ring and method comparison.
//! - [`verify`]: seeded randomized oracle suites.

pub mod bench;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod identities;
pub mod polarization;
pub mod ring;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
