//! Order complexes of views, their reduced integral homology, Möbius
//! numbers and Lefschetz characters.

mod complex;
mod homology;
mod snf;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::poset::{Permutation, PosetError, PosetView};
use crate::reps::ClassFunction;

pub use complex::{count_chains, order_complex, ChainComplexZ};
pub use homology::{homology, rational_betti, rational_rank, HomologyResult};
pub use snf::{smith_diagonal, smith_invariants, SmithInvariants, SparseMatrix};

/// Largest order complex (simplices, empty one included) that is built.
pub const MAX_SIMPLICES: u64 = 3_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("order complex with {0} simplices exceeds the supported size")]
    TooManySimplices(u64),
    #[error("boundary maps fail to compose to zero at dimension {0}")]
    BoundaryNotNilpotent(isize),
    #[error("view {0} is not stable under the symmetric group")]
    NotStable(String),
    #[error("homology of {view} is not concentrated in one degree (support {support:?})")]
    NotConcentrated { view: String, support: Vec<isize> },
    #[error("homology of {view} has torsion in degree {degree}")]
    Torsion { view: String, degree: isize },
    #[error("Lefschetz character of {view} has degree {character} but Betti number {betti}")]
    DimensionMismatch {
        view: String,
        character: BigRational,
        betti: usize,
    },
}

/// `μ(0̂, 1̂)` of the view with both bounds adjoined.
pub fn mobius_number(view: &PosetView) -> Result<BigInt, TopologyError> {
    let rel = view.relations()?;
    let len = view.len();
    let mut below: Vec<Vec<u32>> = vec![Vec::new(); len];
    for (i, ups) in rel.above.iter().enumerate() {
        for &j in ups {
            below[j as usize].push(i as u32);
        }
    }
    // μ(0̂, x) in rank order; μ(0̂, 0̂) = 1
    let mut mu: Vec<BigInt> = Vec::with_capacity(len);
    for b in &below {
        let s: BigInt = b.iter().map(|&i| &mu[i as usize]).sum();
        mu.push(-1 - s);
    }
    Ok(-1 - mu.iter().sum::<BigInt>())
}

/// `Λ(g) = Σ_{d ≥ -1} (-1)^d · #{d-simplices fixed by g}` for each cycle type.
pub fn lefschetz_class_function(view: &PosetView) -> Result<ClassFunction, TopologyError> {
    if !view.is_stable_under_symmetric_group() {
        return Err(TopologyError::NotStable(view.spec().to_string()));
    }
    let rel = view.relations()?;
    let chi = ClassFunction::from_integers(view.n(), |ct| {
        let g = Permutation::from_cycle_type(ct);
        let fixed = view.fixed_mask(&g);
        // w[i] = Σ over fixed chains starting at i of (-1)^(length - 1)
        let mut w = vec![BigInt::from(0); view.len()];
        for i in (0..view.len()).rev() {
            if fixed[i] {
                let s: BigInt = rel.above[i]
                    .iter()
                    .filter(|&&j| fixed[j as usize])
                    .map(|&j| &w[j as usize])
                    .sum();
                w[i] = 1 - s;
            }
        }
        -1 + w.iter().sum::<BigInt>()
    });
    Ok(chi)
}

/// The degree carrying all homology and the character of the homology
/// there, `(-1)^d Λ`. Fails when homology is spread out or has torsion.
pub fn concentrated_character(view: &PosetView) -> Result<(isize, ClassFunction), TopologyError> {
    let cc = order_complex(view)?;
    let h = homology(&cc);
    concentrated_character_with(view, &h)
}

/// As [`concentrated_character`], reusing a computed homology.
pub fn concentrated_character_with(
    view: &PosetView,
    h: &HomologyResult,
) -> Result<(isize, ClassFunction), TopologyError> {
    let label = format!("{},n={}", view.spec(), view.n());
    let Some(d) = h.concentrated_in() else {
        return Err(TopologyError::NotConcentrated {
            view: label,
            support: h.support(),
        });
    };
    if !h.torsion(d).is_empty() {
        return Err(TopologyError::Torsion { view: label, degree: d });
    }
    let lambda = lefschetz_class_function(view)?;
    let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
    let chi = lambda.scale(&BigRational::from_integer(sign.into()));
    if chi.degree() != BigRational::from_integer(h.betti(d).into()) {
        return Err(TopologyError::DimensionMismatch {
            view: label,
            character: chi.degree(),
            betti: h.betti(d),
        });
    }
    Ok((d, chi))
}

#[cfg(test)]
mod tests;
