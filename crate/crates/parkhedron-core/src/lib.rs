//! Exact combinatorics of shift-invariant tuple spaces, balanced binary
//! Lyndon words, and lattice points of permutahedra.
//!
//! Everything here is computed with arbitrary-precision integers and exact
//! rationals; there is no floating point anywhere. The crate is `no_std`
//! (with `alloc`), so the algorithmic core stays free of IO concerns.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod classical;
pub mod parking;
pub mod partition;
pub mod permutahedron;
pub mod symfunc;
pub mod word;

pub use partition::{CycleType, LatticePoint, PaddedPartition, Partition};
pub use symfunc::{Basis, SymFunc};
pub use word::BinaryWord;
