use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PosetError;

/// A strictly increasing set of positive ranks.
///
/// Whether the set fits inside `[1, n-2]` depends on `n` and is checked
/// where a lattice size is known ([`RankSet::check_fits`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct RankSet(pub(crate) Vec<usize>);

impl RankSet {
    pub fn new(mut ranks: Vec<usize>) -> Result<Self, PosetError> {
        if ranks.contains(&0) {
            return Err(PosetError::BadRankSet("rank 0 is not a proper rank".into()));
        }
        ranks.sort_unstable();
        ranks.dedup();
        Ok(RankSet(ranks))
    }

    pub fn empty() -> Self {
        RankSet(Vec::new())
    }

    /// `[a, b] = {a, a+1, ..., b}`; empty when `b < a`.
    pub fn interval(a: usize, b: usize) -> Self {
        assert!(a >= 1, "ranks start at 1");
        RankSet((a..=b).collect())
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.0.binary_search(&r).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn check_fits(&self, n: usize) -> Result<(), PosetError> {
        match self.max() {
            Some(m) if m + 2 > n => Err(PosetError::BadRankSet(format!(
                "{self} is not inside [1, {}] for n = {n}",
                n as isize - 2
            ))),
            _ => Ok(()),
        }
    }

    /// `S - s_1 = {s_2 - s_1, ..., s_r - s_1}`.
    pub fn peel_first(&self) -> Option<(usize, RankSet)> {
        let (&s1, rest) = self.0.split_first()?;
        Some((s1, RankSet(rest.iter().map(|s| s - s1).collect())))
    }

    /// `S \ {s_1}`.
    pub fn without_first(&self) -> RankSet {
        RankSet(self.0.iter().skip(1).copied().collect())
    }

    /// Every rank shifted up by `k`.
    pub fn shift_up(&self, k: usize) -> RankSet {
        RankSet(self.0.iter().map(|s| s + k).collect())
    }

    /// Every rank shifted down by `k`; `None` if a rank would drop below 1.
    pub fn shift_down(&self, k: usize) -> Option<RankSet> {
        if self.0.iter().any(|&s| s <= k) {
            return None;
        }
        Some(RankSet(self.0.iter().map(|s| s - k).collect()))
    }

    pub fn with(&self, r: usize) -> RankSet {
        let mut v = self.0.clone();
        v.push(r);
        RankSet::new(v).expect("ranks positive")
    }

    pub fn without(&self, r: usize) -> RankSet {
        RankSet(self.0.iter().copied().filter(|&s| s != r).collect())
    }

    /// Is this `[1, r]` for some `r >= 0`?
    pub fn is_initial_interval(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| s == i + 1)
    }

    /// All subsets, in binary counting order over the elements.
    pub fn subsets(&self) -> Vec<RankSet> {
        let k = self.0.len();
        (0u64..(1u64 << k))
            .map(|mask| {
                RankSet(
                    (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// All subsets of `[1, n-2]`.
    pub fn all_for(n: usize) -> Vec<RankSet> {
        RankSet::interval(1, n.saturating_sub(2)).subsets()
    }

    /// Comma list for tables; `-` for the empty set.
    pub fn to_list_string(&self) -> String {
        if self.0.is_empty() {
            "-".to_string()
        } else {
            self.0.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Debug for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RankSet {
    type Err = PosetError;

    /// Comma lists with ranges: `"1-3,5"`; `""` or `"-"` is empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(RankSet::empty());
        }
        let bad = || PosetError::BadRankSet(format!("cannot parse {s:?}"));
        let mut ranks = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            if let Some((a, b)) = item.split_once('-') {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                ranks.extend(a..=b);
            } else {
                ranks.push(item.parse().map_err(|_| bad())?);
            }
        }
        RankSet::new(ranks)
    }
}

impl From<RankSet> for Vec<usize> {
    fn from(r: RankSet) -> Self {
        r.0
    }
}

impl TryFrom<Vec<usize>> for RankSet {
    type Error = PosetError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        RankSet::new(v)
    }
}
