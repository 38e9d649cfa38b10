use std::fmt;

use crate::symfunc::IntPartition;

use super::{Permutation, PosetError, PosetView, SetPartition, MAX_LISTED_CHAINS};

/// A strictly increasing chain of a view, stored as element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    indices: Vec<u32>,
}

impl Chain {
    pub(crate) fn from_indices(indices: Vec<u32>) -> Self {
        Chain { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn elements<'a>(&self, view: &'a PosetView) -> Vec<&'a SetPartition> {
        self.indices
            .iter()
            .map(|&i| &view.elements()[i as usize])
            .collect()
    }

    pub fn display(&self, view: &PosetView) -> String {
        self.elements(view)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" < ")
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain{:?}", self.indices)
    }
}

/// Counts maximal chains through the elements allowed by `mask`: paths of
/// view covers from a minimal element of the view to a maximal one.
fn count_paths(view: &PosetView, mask: Option<&[bool]>) -> Result<u64, PosetError> {
    if view.is_empty() {
        return Ok(1);
    }
    let rel = view.relations()?;
    let ok = |i: usize| mask.is_none_or(|m| m[i]);
    // elements are sorted by rank, so covers point to larger indices
    let len = view.len();
    let mut up = vec![0u64; len];
    for i in (0..len).rev() {
        if !ok(i) {
            continue;
        }
        up[i] = if rel.covers[i].is_empty() {
            1
        } else {
            rel.covers[i].iter().map(|&j| up[j as usize]).sum()
        };
    }
    Ok((0..len).filter(|&i| rel.minimal[i]).map(|i| up[i]).sum())
}

pub fn maximal_chain_count(view: &PosetView) -> Result<u64, PosetError> {
    count_paths(view, None)
}

/// All maximal chains, in lexicographic order of element indices.
pub fn maximal_chains(view: &PosetView) -> Result<Vec<Chain>, PosetError> {
    let total = maximal_chain_count(view)?;
    if total > MAX_LISTED_CHAINS {
        return Err(PosetError::TooManyChains(total));
    }
    if view.is_empty() {
        return Ok(vec![Chain::from_indices(Vec::new())]);
    }
    let rel = view.relations()?;
    let mut out = Vec::with_capacity(total as usize);
    let mut stack = Vec::new();
    fn descend(covers: &[Vec<u32>], i: u32, stack: &mut Vec<u32>, out: &mut Vec<Chain>) {
        stack.push(i);
        let next = &covers[i as usize];
        if next.is_empty() {
            out.push(Chain::from_indices(stack.clone()));
        }
        for &j in next {
            descend(covers, j, stack, out);
        }
        stack.pop();
    }
    for i in 0..view.len() {
        if rel.minimal[i] {
            descend(&rel.covers, i as u32, &mut stack, &mut out);
        }
    }
    Ok(out)
}

/// Maximal chains fixed elementwise by the canonical permutation of
/// `cycle_type`.
pub fn fixed_chain_count(view: &PosetView, cycle_type: &IntPartition) -> Result<u64, PosetError> {
    if cycle_type.weight() != view.n() {
        return Err(PosetError::MismatchedN(cycle_type.weight(), view.n()));
    }
    let g = Permutation::from_cycle_type(cycle_type);
    count_paths(view, Some(&view.fixed_mask(&g)))
}
