//! Representation-theoretic quantities attached to the partition lattice.

mod class_function;
mod modules;
mod reports;
mod sequences;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::poset::{PosetError, RankSet};
use crate::topology::TopologyError;

pub use class_function::ClassFunction;
pub use modules::{
    alpha, alpha_character, beta, lie_top_homology, multiplicities, number_mobius,
    schur_multiplicity, whitehouse, AlphaMethod, BetaMethod, Multiplicities,
};
pub use reports::{
    conjecture_checks, stability_report, subposet_homology_report, Assertion, Family, Report,
    Suite,
};
pub use sequences::{
    bi, e_k, euler_number, even_ranks, r_even, r_even_e2_form, r_even_formula, simsun, simsun_row,
};

/// Largest `n` for which `α` is computed by enumerating fixed chains.
pub const MAX_CHAINS_METHOD_N: usize = 8;
/// Largest `n` for which the plethystic recurrences are run.
pub const MAX_RECURRENCE_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepsError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("{what} {value} exceeds the supported maximum {max}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("{what} for n={n}, S={ranks} is not a module: {expansion:?}")]
    NotAModule {
        what: String,
        n: usize,
        ranks: RankSet,
        expansion: Vec<String>,
    },
    #[error("two computations of {what} disagree: {left} vs {right}")]
    MethodMismatch {
        what: String,
        left: String,
        right: String,
    },
    #[error("{0}")]
    BadParameter(String),
}

/// Integers as JSON numbers when they fit in `i64`, as strings otherwise.
pub fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    int_json(v).serialize(s)
}

#[cfg(test)]
mod tests;
