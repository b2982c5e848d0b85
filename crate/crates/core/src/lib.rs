//! Exact arithmetic for weights, characters, and cocharacter gradings of the
//! simply-laced root systems A1, A2, A3, D4, E6, E7.
//!
//! Everything is integral or rational and fully deterministic: weights are
//! Dynkin label vectors, cocharacters live in the coroot lattice,
//! multiplicities come from the Freudenthal recursion run on
//! determinant-scaled integers, and dimensions that can grow (Weyl dimension
//! formula, Eulerian numbers) use big integers. No floats anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, parallel drivers, and output
//! formats live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod character;
pub mod constraints;
pub mod root_system;
pub mod search;

mod error;

pub use error::{Error, Result};

/// Exact rational scalar used for inner products of weights.
pub type Rational = num_rational::Ratio<i64>;
