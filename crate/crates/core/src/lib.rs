//! Exact computations for the homology representations of the partition
//! lattice and its subposets.
//!
//! The crate is organized bottom-up:
//!
//! - [`symfunc`]: symmetric functions with exact rational coefficients.
//! - [`poset`]: set partitions, subposet views of the partition lattice and
//!   the symmetric group action on them.
//! - [`topology`]: order complexes, integral homology via Smith normal form,
//!   Möbius numbers and Lefschetz characters.
//! - [`reps`]: Frobenius characteristics of chain and homology modules,
//!   the associated integer sequences and the consistency checks built on them.

pub mod poset;
pub mod reps;
pub mod symfunc;
pub mod topology;

pub use poset::{PosetView, RankSet, SetPartition, ViewSpec};
pub use symfunc::{Basis, IntPartition, SymFunc};
