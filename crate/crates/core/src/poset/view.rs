use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::symfunc::IntPartition;

use super::{Permutation, PosetError, RankSet, SetPartition, MAX_RELATIONS_N, MAX_VIEW_N};

/// Which subposet of the partition lattice to take.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ViewSpec {
    /// The whole proper part.
    Full,
    /// Rank selection `Π_n(S)`.
    Ranks(RankSet),
    /// `Q_n^k`: drop the modular elements whose non-singleton block has size `k`.
    Qnk(usize),
    /// `P_n^k`: drop the modular elements whose non-singleton block has size `2..=k`.
    Pnk(usize),
    /// `Π_{n,≤k}`: every block has size at most `k`.
    BlockSizeAtMost(usize),
    /// `Π_{n,≠k}`: no block of size `k`.
    BlockSizeNot(usize),
    /// `Π^e_n`: an even number of blocks (`n` even).
    Even,
    /// `Π^e_n(k̄)`: the top `k` nontrivial ranks of `Π^e_n`.
    EvenTop(usize),
}

impl ViewSpec {
    pub fn validate(&self, n: usize) -> Result<(), PosetError> {
        if !(2..=MAX_VIEW_N).contains(&n) {
            return Err(PosetError::OutOfBounds {
                what: "partition lattice size",
                value: n,
                max: MAX_VIEW_N,
            });
        }
        let bad = |m: String| Err(PosetError::BadView(format!("{self} at n={n}: {m}")));
        match self {
            ViewSpec::Full => Ok(()),
            ViewSpec::Ranks(s) => s.check_fits(n),
            ViewSpec::Qnk(k) | ViewSpec::Pnk(k) | ViewSpec::BlockSizeAtMost(k) => {
                if (2..n).contains(k) {
                    Ok(())
                } else {
                    bad(format!("k must lie in [2, {}]", n - 1))
                }
            }
            ViewSpec::BlockSizeNot(k) => {
                if (1..n).contains(k) {
                    Ok(())
                } else {
                    bad(format!("k must lie in [1, {}]", n - 1))
                }
            }
            ViewSpec::Even => {
                if n % 2 == 0 {
                    Ok(())
                } else {
                    bad("needs an even ground set".into())
                }
            }
            ViewSpec::EvenTop(k) => {
                if n % 2 != 0 {
                    bad("needs an even ground set".into())
                } else if *k == 0 || *k + 1 > n / 2 {
                    bad(format!("k must lie in [1, {}]", n / 2 - 1))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The ranks this view can populate, or `None` if every proper rank may occur.
    pub fn rank_filter(&self, n: usize) -> Option<RankSet> {
        match self {
            ViewSpec::Ranks(s) => Some(s.clone()),
            ViewSpec::Even => Some(RankSet((2..=n.saturating_sub(2)).step_by(2).collect())),
            ViewSpec::EvenTop(k) => Some(RankSet(((n - 2 * k)..=n - 2).step_by(2).collect())),
            _ => None,
        }
    }

    /// Membership of a proper element (bounds are never members).
    pub fn admits(&self, x: &SetPartition) -> bool {
        let n = x.n();
        let r = x.rank();
        if r == 0 || r + 1 >= n {
            return false;
        }
        let sizes = x.block_sizes();
        let modular_size = || {
            let mut big = sizes.iter().filter(|&&s| s > 1);
            match (big.next(), big.next()) {
                (Some(&s), None) => Some(s),
                _ => None,
            }
        };
        match self {
            ViewSpec::Full => true,
            ViewSpec::Ranks(s) => s.contains(r),
            ViewSpec::Qnk(k) => modular_size() != Some(*k),
            ViewSpec::Pnk(k) => !matches!(modular_size(), Some(s) if s <= *k),
            ViewSpec::BlockSizeAtMost(k) => sizes.iter().all(|s| s <= k),
            ViewSpec::BlockSizeNot(k) => sizes.iter().all(|s| s != k),
            ViewSpec::Even | ViewSpec::EvenTop(_) => self.rank_filter(n).is_some_and(|f| f.contains(r)),
        }
    }

    /// Largest block size allowed, used to prune generation.
    fn block_cap(&self, n: usize) -> usize {
        match self {
            ViewSpec::BlockSizeAtMost(k) => *k,
            _ => n,
        }
    }
}

impl fmt::Display for ViewSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViewSpec::Full => write!(f, "full"),
            ViewSpec::Ranks(s) => write!(
                f,
                "ranks:{}",
                s.ranks().iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
            ),
            ViewSpec::Qnk(k) => write!(f, "qnk:k={k}"),
            ViewSpec::Pnk(k) => write!(f, "pnk:k={k}"),
            ViewSpec::BlockSizeAtMost(k) => write!(f, "le:k={k}"),
            ViewSpec::BlockSizeNot(k) => write!(f, "ne:k={k}"),
            ViewSpec::Even => write!(f, "even"),
            ViewSpec::EvenTop(k) => write!(f, "even-top:k={k}"),
        }
    }
}

impl fmt::Debug for ViewSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ViewSpec {
    type Err = PosetError;

    /// `full`, `ranks:1,3,4`, `qnk:k=3`, `pnk:k=3`, `le:k=2`, `ne:k=3`,
    /// `even`, `even-top:k=2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PosetError::BadView(format!("cannot parse view {s:?}"));
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let k = || -> Result<usize, PosetError> {
            arg.and_then(|a| a.trim().strip_prefix("k="))
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(bad)
        };
        match (head, arg) {
            ("full", None) => Ok(ViewSpec::Full),
            ("even", None) => Ok(ViewSpec::Even),
            ("ranks", Some(a)) => Ok(ViewSpec::Ranks(a.parse()?)),
            ("qnk", Some(_)) => Ok(ViewSpec::Qnk(k()?)),
            ("pnk", Some(_)) => Ok(ViewSpec::Pnk(k()?)),
            ("le", Some(_)) => Ok(ViewSpec::BlockSizeAtMost(k()?)),
            ("ne", Some(_)) => Ok(ViewSpec::BlockSizeNot(k()?)),
            ("even-top", Some(_)) => Ok(ViewSpec::EvenTop(k()?)),
            _ => Err(bad()),
        }
    }
}

/// Comparability data inside a view. Indices refer to [`PosetView::elements`].
pub(crate) struct Relations {
    /// Strictly greater elements of the view, ascending index.
    pub above: Vec<Vec<u32>>,
    /// Upper covers within the view.
    pub covers: Vec<Vec<u32>>,
    /// No element of the view lies below.
    pub minimal: Vec<bool>,
}

/// A subposet of the proper part of `Π_n`, with elements materialized
/// rank by rank. The bounds `0̂` and `1̂` are never stored.
pub struct PosetView {
    n: usize,
    spec: ViewSpec,
    elements: Vec<SetPartition>,
    /// `(rank, start, end)` slices of `elements`.
    rank_slices: Vec<(usize, usize, usize)>,
    index: HashMap<SetPartition, usize>,
    relations: OnceLock<Relations>,
}

impl PosetView {
    pub fn new(n: usize, spec: ViewSpec) -> Result<Self, PosetError> {
        spec.validate(n)?;
        let filter = spec.rank_filter(n);
        let (min_blocks, max_blocks) = match &filter {
            Some(f) if f.is_empty() => (1, 0),
            Some(f) => (n - f.max().unwrap(), n - f.min().unwrap()),
            None => (2, n - 1),
        };
        let mut by_blocks: Vec<Vec<SetPartition>> = vec![Vec::new(); n + 1];
        if min_blocks <= max_blocks {
            let mut gen = Generator {
                n,
                cap: spec.block_cap(n),
                min_blocks,
                max_blocks,
                labels: Vec::with_capacity(n),
                sizes: Vec::with_capacity(n),
            };
            gen.run(&mut |x| {
                let x = SetPartition::from_rgs_unchecked(x.to_vec());
                if spec.admits(&x) {
                    let b = x.num_blocks();
                    by_blocks[b].push(x);
                }
            });
        }
        let mut elements = Vec::new();
        let mut rank_slices = Vec::new();
        for rank in 1..n.saturating_sub(1) {
            let bucket = std::mem::take(&mut by_blocks[n - rank]);
            if bucket.is_empty() {
                continue;
            }
            let start = elements.len();
            elements.extend(bucket);
            rank_slices.push((rank, start, elements.len()));
        }
        let index = elements.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        Ok(PosetView {
            n,
            spec,
            elements,
            rank_slices,
            index,
            relations: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &ViewSpec {
        &self.spec
    }

    /// Elements sorted by rank, restricted growth order within a rank.
    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Nonempty ranks with their elements.
    pub fn by_rank(&self) -> Vec<(usize, &[SetPartition])> {
        self.rank_slices
            .iter()
            .map(|&(r, a, b)| (r, &self.elements[a..b]))
            .collect()
    }

    /// `(rank, count)` for each nonempty rank.
    pub fn rank_sizes(&self) -> Vec<(usize, usize)> {
        self.rank_slices.iter().map(|&(r, a, b)| (r, b - a)).collect()
    }

    pub fn index_of(&self, x: &SetPartition) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &SetPartition) -> bool {
        self.index.contains_key(x)
    }

    pub(crate) fn relations(&self) -> Result<&Relations, PosetError> {
        if self.n > MAX_RELATIONS_N {
            return Err(PosetError::OutOfBounds {
                what: "comparability data for partition lattice size",
                value: self.n,
                max: MAX_RELATIONS_N,
            });
        }
        Ok(self.relations.get_or_init(|| self.build_relations()))
    }

    fn build_relations(&self) -> Relations {
        let len = self.elements.len();
        let mut above: Vec<Vec<u32>> = Vec::with_capacity(len);
        for x in &self.elements {
            // everything above x is a coarsening: a set partition of x's blocks
            let blocks = x.labels();
            let b = x.num_blocks();
            let mut ups = Vec::new();
            let mut gen = Generator {
                n: b,
                cap: b,
                min_blocks: 2,
                max_blocks: b - 1,
                labels: Vec::with_capacity(b),
                sizes: Vec::with_capacity(b),
            };
            if b >= 3 {
                gen.run(&mut |merge| {
                    let labels: Vec<u8> = blocks.iter().map(|&l| merge[l as usize]).collect();
                    let y = SetPartition::from_labels(&labels);
                    if let Some(&j) = self.index.get(&y) {
                        ups.push(j as u32);
                    }
                });
            }
            ups.sort_unstable();
            above.push(ups);
        }
        let mut minimal = vec![true; len];
        for ups in &above {
            for &j in ups {
                minimal[j as usize] = false;
            }
        }
        let covers = (0..len)
            .map(|i| {
                let ups = &above[i];
                ups.iter()
                    .copied()
                    .filter(|&y| {
                        let yr = self.elements[y as usize].rank();
                        !ups.iter().any(|&z| {
                            let ze = &self.elements[z as usize];
                            ze.rank() < yr && ze.refines(&self.elements[y as usize])
                        })
                    })
                    .collect()
            })
            .collect();
        Relations { above, covers, minimal }
    }

    /// Strict comparability inside the view, by index.
    pub fn less_than(&self, i: usize, j: usize) -> Result<bool, PosetError> {
        Ok(self.relations()?.above[i].binary_search(&(j as u32)).is_ok())
    }

    pub fn is_stable_under_symmetric_group(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let gens = [Permutation::transposition(self.n, 1, 2), Permutation::long_cycle(self.n)];
        gens.iter()
            .all(|g| self.elements.iter().all(|x| self.contains(&x.act(g))))
    }

    /// Indicator of the elements fixed by `g`.
    pub fn fixed_mask(&self, g: &Permutation) -> Vec<bool> {
        self.elements.iter().map(|x| x.is_fixed_by(g)).collect()
    }

    /// Type census of a rank: how many elements of each block type.
    pub fn type_counts(&self, rank: usize) -> Vec<(IntPartition, usize)> {
        let mut counts: std::collections::BTreeMap<IntPartition, usize> = Default::default();
        for (r, xs) in self.by_rank() {
            if r == rank {
                for x in xs {
                    *counts.entry(x.type_of()).or_default() += 1;
                }
            }
        }
        counts.into_iter().collect()
    }
}

impl fmt::Debug for PosetView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PosetView({}, n={}, {} elements)", self.spec, self.n, self.elements.len())
    }
}

/// Restricted growth strings with a block-size cap and a block-count window.
struct Generator {
    n: usize,
    cap: usize,
    min_blocks: usize,
    max_blocks: usize,
    labels: Vec<u8>,
    sizes: Vec<usize>,
}

impl Generator {
    fn run(&mut self, emit: &mut dyn FnMut(&[u8])) {
        let pos = self.labels.len();
        if pos == self.n {
            if self.sizes.len() >= self.min_blocks {
                emit(&self.labels);
            }
            return;
        }
        let remaining = self.n - pos;
        // not enough elements left to open the required blocks
        if self.sizes.len() + remaining < self.min_blocks {
            return;
        }
        for b in 0..self.sizes.len() {
            if self.sizes[b] < self.cap {
                self.sizes[b] += 1;
                self.labels.push(b as u8);
                self.run(emit);
                self.labels.pop();
                self.sizes[b] -= 1;
            }
        }
        if self.sizes.len() < self.max_blocks {
            self.sizes.push(1);
            self.labels.push((self.sizes.len() - 1) as u8);
            self.run(emit);
            self.labels.pop();
            self.sizes.pop();
        }
    }
}
