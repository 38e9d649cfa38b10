use std::fmt;

use crate::symfunc::IntPartition;

use super::PosetError;

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From the 1-based one-line notation `g(1) g(2) ... g(n)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self, PosetError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PosetError::NotAPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
            out.push(v - 1);
        }
        Ok(Permutation { images: out })
    }

    /// The canonical representative of a cycle type: cycles filled with
    /// consecutive integers, longest cycle first, e.g. `(3,1)` gives `(1 2 3)(4)`.
    pub fn from_cycle_type(cycle_type: &IntPartition) -> Self {
        let n = cycle_type.weight();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in cycle_type.parts() {
            for i in 0..len {
                images[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    /// The 1-based transposition `(a b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The long cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        Self::from_cycle_type(&IntPartition::row(n))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn cycle_type(&self) -> IntPartition {
        let mut seen = vec![false; self.n()];
        let mut parts = Vec::new();
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            parts.push(len);
        }
        IntPartition::new(parts)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|i| i + 1).collect();
        write!(f, "Permutation{one_based:?}")
    }
}
