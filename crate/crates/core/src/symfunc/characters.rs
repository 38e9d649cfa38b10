//! Per-degree tables: the partition list, `z` weights, the irreducible
//! character table (Murnaghan–Nakayama) and lazily built change-of-basis
//! data. Tables are cached process-wide; a table is built outside the lock
//! and the first finished copy wins.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::partition::{partitions_of, IntPartition};

pub(crate) struct DegreeData {
    pub partitions: Vec<IntPartition>,
    pub index: HashMap<IntPartition, usize>,
    pub z: Vec<BigInt>,
    /// `chars[λ][μ] = χ^λ(μ)`.
    pub chars: Vec<Vec<i64>>,
    /// `h_λ` expanded in the power-sum basis, dense over `partitions`.
    pub h_in_p: OnceLock<Vec<Vec<BigRational>>>,
    /// `kostka[ν][μ] = ⟨h_μ, s_ν⟩`; upper unitriangular in list order.
    pub kostka: OnceLock<Vec<Vec<BigInt>>>,
}

impl DegreeData {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let z = partitions.iter().map(IntPartition::z).collect();
        let mut memo = HashMap::new();
        let chars = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| character(lambda, mu, &mut memo))
                    .collect()
            })
            .collect();
        DegreeData {
            partitions,
            index,
            z,
            chars,
            h_in_p: OnceLock::new(),
            kostka: OnceLock::new(),
        }
    }

    pub fn idx(&self, p: &IntPartition) -> usize {
        self.index[p]
    }
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<DegreeData>>>> = OnceLock::new();

pub(crate) fn degree_data(n: usize) -> Arc<DegreeData> {
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = tables.read().expect("character cache poisoned").get(&n) {
        return Arc::clone(d);
    }
    let built = Arc::new(DegreeData::build(n));
    let mut w = tables.write().expect("character cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

/// `χ^λ(μ)` for partitions of equal weight.
pub fn irreducible_character(lambda: &IntPartition, mu: &IntPartition) -> i64 {
    assert_eq!(lambda.weight(), mu.weight(), "character needs equal weights");
    let d = degree_data(lambda.weight());
    d.chars[d.idx(lambda)][d.idx(mu)]
}

type BetaMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

fn character(lambda: &IntPartition, mu: &IntPartition, memo: &mut BetaMemo) -> i64 {
    let l = lambda.len();
    // beta-set: first-column hook lengths, kept ascending
    let mut beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    beta.sort_unstable();
    mn(beta, mu.parts(), memo)
}

/// Strips rim hooks of lengths `mu[0], mu[1], ...` from the beta-set.
fn mn(beta: Vec<usize>, mu: &[usize], memo: &mut BetaMemo) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta, mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = key.0.clone();
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.binary_search(&(b - k)).is_ok() {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        next.sort_unstable();
        let v = mn(next, rest, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}
