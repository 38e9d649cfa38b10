//! The partition lattice `Π_n`, its subposet families, chains, and the
//! action of the symmetric group.

mod chains;
mod perm;
mod rank_set;
mod set_partition;
mod view;

use num_bigint::BigUint;
use thiserror::Error;

pub use chains::{fixed_chain_count, maximal_chain_count, maximal_chains, Chain};
pub use perm::Permutation;
pub use rank_set::RankSet;
pub use set_partition::SetPartition;
pub use view::{PosetView, ViewSpec};

/// Largest ground set for which elements of a view are materialized.
pub const MAX_VIEW_N: usize = 10;
/// Largest ground set for which comparability and covers are built.
pub const MAX_RELATIONS_N: usize = 9;
/// Refuse to list more maximal chains than this.
pub const MAX_LISTED_CHAINS: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("ground set of size {0} is too large")]
    GroundSetTooLarge(usize),
    #[error("invalid set partition: {0}")]
    BadSetPartition(String),
    #[error("set partitions of different ground sets ({0} and {1})")]
    MismatchedN(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("invalid rank set: {0}")]
    BadRankSet(String),
    #[error("invalid view: {0}")]
    BadView(String),
    #[error("{what} {value} exceeds the supported bound {max}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("{0} maximal chains is more than can be listed")]
    TooManyChains(u64),
}

/// Set partitions of `[n]` with `k` blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    // row-by-row triangle, S(m, j) = j S(m-1, j) + S(m-1, j-1)
    let mut row = vec![BigUint::ZERO; k + 1];
    row[0] = BigUint::from(1u32);
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::ZERO;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests;
