use std::fmt;
use std::str::FromStr;

use crate::symfunc::IntPartition;

use super::{Permutation, PosetError};

/// A partition of `{1..n}` into nonempty blocks.
///
/// Stored as a restricted growth string: `labels[i]` is the index of the
/// block containing element `i + 1`, with blocks numbered by their minimum
/// element. That form is canonical, so derived equality and hashing are
/// equality of set partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

pub(crate) const MAX_GROUND_SET: usize = 64;

impl SetPartition {
    /// Canonicalizes arbitrary block labels (equal label = same block).
    pub fn from_labels<T: Copy + Eq>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let canon = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(*l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { labels: canon }
    }

    /// Builds from 1-based blocks, checking they partition `{1..n}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, PosetError> {
        if n > MAX_GROUND_SET {
            return Err(PosetError::GroundSetTooLarge(n));
        }
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PosetError::BadSetPartition("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(PosetError::BadSetPartition(format!("element {e} outside 1..{n}")));
                }
                if labels[e - 1] != usize::MAX {
                    return Err(PosetError::BadSetPartition(format!("element {e} repeated")));
                }
                labels[e - 1] = b;
            }
        }
        if let Some(missing) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(PosetError::BadSetPartition(format!("element {} missing", missing + 1)));
        }
        Ok(Self::from_labels(&labels))
    }

    /// All singletons.
    pub fn bottom(n: usize) -> Self {
        SetPartition {
            labels: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// One block.
    pub fn top(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub(crate) fn from_rgs_unchecked(labels: Vec<u8>) -> Self {
        SetPartition { labels }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// `n - #blocks`.
    pub fn rank(&self) -> usize {
        self.n() - self.num_blocks()
    }

    /// 1-based blocks ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Block sizes sorted decreasingly.
    pub fn type_of(&self) -> IntPartition {
        IntPartition::new(self.block_sizes())
    }

    /// True for a partition with exactly one non-singleton block.
    pub fn is_modular_atomlike(&self) -> bool {
        self.block_sizes().iter().filter(|&&s| s > 1).count() == 1
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool, PosetError> {
        if self.n() != other.n() {
            return Err(PosetError::MismatchedN(self.n(), other.n()));
        }
        Ok(self.refines(other))
    }

    pub(crate) fn refines(&self, other: &SetPartition) -> bool {
        let mut map = [u8::MAX; MAX_GROUND_SET];
        for (a, b) in self.labels.iter().zip(&other.labels) {
            let slot = &mut map[*a as usize];
            if *slot == u8::MAX {
                *slot = *b;
            } else if *slot != *b {
                return false;
            }
        }
        true
    }

    /// Relabels through `g`: the block `B` becomes `g(B)`.
    pub fn act(&self, g: &Permutation) -> SetPartition {
        assert_eq!(g.n(), self.n(), "permutation and partition sizes differ");
        let mut labels = vec![0u8; self.n()];
        for (i, &l) in self.labels.iter().enumerate() {
            labels[g.image(i)] = l;
        }
        Self::from_labels(&labels)
    }

    pub fn is_fixed_by(&self, g: &Permutation) -> bool {
        // g fixes x iff i ~ j implies g(i) ~ g(j)
        let mut map = [u8::MAX; MAX_GROUND_SET];
        for (i, &l) in self.labels.iter().enumerate() {
            let target = self.labels[g.image(i)];
            let slot = &mut map[l as usize];
            if *slot == u8::MAX {
                *slot = target;
            } else if *slot != target {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SetPartition {
    type Err = PosetError;

    /// Parses `"12|34"` or, for ground sets past 9, `"1,2|3,10"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |split_digits: bool| -> Result<Self, PosetError> {
            let mut blocks = Vec::new();
            for part in s.split('|') {
                let part = part.trim();
                let block: Option<Vec<usize>> = if split_digits {
                    part.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
                } else {
                    part.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
                };
                blocks.push(block.ok_or_else(|| {
                    PosetError::BadSetPartition(format!("{s:?}: not a number"))
                })?);
            }
            let n = blocks.iter().map(Vec::len).sum();
            Self::from_blocks(n, &blocks)
        };
        if s.contains(',') {
            parse(false)
        } else {
            // all-singleton ground sets past 9 carry no commas
            parse(true).or_else(|e| parse(false).map_err(|_| e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x = sp("34|12");
        assert_eq!(x.to_string(), "12|34");
        assert_eq!(x.rank(), 2);
        let big = sp("1,2,10|3,4,5,6,7,8,9");
        assert_eq!(big.to_string(), "1,2,10|3,4,5,6,7,8,9");
        assert!("12|2".parse::<SetPartition>().is_err());
        assert!("13|4".parse::<SetPartition>().is_err());
        assert!("1a|2".parse::<SetPartition>().is_err());
    }

    #[test]
    fn refinement() {
        let bottom = SetPartition::bottom(4);
        for y in ["1234", "12|34", "13|2|4", "1|2|3|4"] {
            assert!(bottom.leq(&sp(y)).unwrap());
        }
        assert!(sp("12|3|4").leq(&sp("12|34")).unwrap());
        assert!(!sp("12|3|4").leq(&sp("13|24")).unwrap());
        assert!(sp("12|3").leq(&sp("12|34")).is_err());
    }

    #[test]
    fn types() {
        assert_eq!(sp("12|34|5").type_of(), IntPartition::new(vec![2, 2, 1]));
        assert_eq!(SetPartition::bottom(5).type_of(), IntPartition::column(5));
        assert!(sp("123|4|5").is_modular_atomlike());
        assert!(!sp("12|34|5").is_modular_atomlike());
    }

    #[test]
    fn action() {
        let g = Permutation::from_one_line(&[2, 1, 3, 4]).unwrap();
        assert_eq!(sp("13|24").act(&g), sp("23|14"));
        assert_eq!(sp("13|24").act(&Permutation::identity(4)), sp("13|24"));
        assert!(sp("12|34").is_fixed_by(&g));
        assert!(!sp("13|24").is_fixed_by(&g));
    }
}
