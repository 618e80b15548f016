//! Exact divisor-class arithmetic on quartic K3 surfaces of Picard rank 2 and
//! on smooth cubic surfaces, together with the numeric criteria that decide
//! whether a maximal family of space curves on such a surface is a generically
//! smooth or a non-reduced component of the Hilbert scheme.
//!
//! Everything is exact: integers are [`Int`] (arbitrary precision) and
//! fractions are [`Rational`]. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod cubic;
pub mod error;
pub mod k3;
pub mod lattice;
pub mod quartic;
pub mod rational;
pub mod verdict;

pub use error::{Error, Result};
pub use lattice::{DivClass2, Gram2};
pub use rational::Rational;
pub use verdict::{Criterion, VerdictKind};

/// Arbitrary-precision integer used for every coordinate and invariant.
pub type Int = num_bigint::BigInt;
