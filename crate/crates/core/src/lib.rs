//! Exact decision procedures for smoothness obstructions on 4-manifolds.
//!
//! Given the algebraic-topological data of a hypothetical smooth family of
//! 4-manifolds, or of a finite cyclic group action on one, the checkers in
//! [`engine`] evaluate the constraints that a finite dimensional approximation
//! of the Seiberg-Witten monopole map forces on that data, and report either a
//! certified violation with a witness or that no constraint fired.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: integers
//! and rationals are arbitrary precision, roots of unity live in `Z[ω_p]`.
//!
//! * [`exact`]: cyclotomic integers, Laurent polynomials, divisibility oracles.
//! * [`lattice`]: intersection forms as block sums, Dirac index.
//! * [`classes`]: truncated cohomology rings, Segre, Euler and Stiefel-Whitney
//!   classes.
//! * [`rep`]: representation rings of `Z_p` and `Pin(2)`, λ- and ψ-operations.
//! * [`engine`]: one checker per obstruction theorem.
//! * [`scenarios`]: generators for the worked constructions and a catalog.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classes;
pub mod engine;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod rep;
pub mod scenarios;

pub use error::{Error, Result};
