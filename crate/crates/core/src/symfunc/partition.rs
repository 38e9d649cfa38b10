use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// An integer partition: weakly decreasing positive parts.
///
/// Ordering is by weight first, then decreasing lexicographic within a
/// weight, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)` and every
/// partition of 3 sorts before every partition of 4.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    /// Accepts only an already weakly decreasing sequence of positive parts.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self, String> {
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(IntPartition { parts })
    }

    pub fn empty() -> Self {
        IntPartition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        IntPartition::new(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        IntPartition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(k < n, "hook (n-k,1^k) needs k < n");
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k));
        IntPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &IntPartition) -> IntPartition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        IntPartition { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> IntPartition {
        IntPartition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// Removes one copy of part `k`, if present.
    pub fn remove_part(&self, k: usize) -> Option<IntPartition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(IntPartition { parts })
    }

    pub fn conjugate(&self) -> IntPartition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        IntPartition { parts }
    }

    /// `z_λ = ∏ k^{m_k} m_k!`, the centralizer order of a permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0usize;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
                z *= BigInt::from(k) * BigInt::from(m);
            }
        }
        z
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when every part is 1 or 2 (the cycle type of an involution).
    pub fn is_involution_type(&self) -> bool {
        self.parts.iter().all(|&p| p <= 2)
    }

    /// Dominance order `self ⊵ other` for partitions of the same weight.
    pub fn dominates(&self, other: &IntPartition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = String;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        IntPartition::from_parts(parts)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<IntPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
    if remaining == 0 {
        out.push(IntPartition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}
