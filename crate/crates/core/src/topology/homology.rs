use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{smith_invariants, ChainComplexZ, SmithInvariants, SparseMatrix};

/// Reduced integral homology, keyed by degree (`-1` included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub view: String,
    pub betti: BTreeMap<isize, usize>,
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
}

impl HomologyResult {
    pub fn betti(&self, d: isize) -> usize {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn torsion(&self, d: isize) -> &[BigInt] {
        self.torsion.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn is_free(&self) -> bool {
        self.torsion.values().all(Vec::is_empty)
    }

    /// Degrees with nonzero homology (free or torsion).
    pub fn support(&self) -> Vec<isize> {
        let mut ds: Vec<isize> = self
            .betti
            .iter()
            .filter(|e| *e.1 > 0)
            .map(|e| *e.0)
            .chain(self.torsion.iter().filter(|e| !e.1.is_empty()).map(|e| *e.0))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The single degree carrying homology, if there is exactly one.
    pub fn concentrated_in(&self) -> Option<isize> {
        match self.support().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl Serialize for HomologyResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Degrees<'a, T>(&'a BTreeMap<isize, T>, fn(&T) -> bool);
        impl<T: Serialize> Serialize for Degrees<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let keep: Vec<_> = self.0.iter().filter(|e| (self.1)(e.1)).collect();
                let mut m = s.serialize_map(Some(keep.len()))?;
                for (d, v) in keep {
                    m.serialize_entry(&d.to_string(), v)?;
                }
                m.end()
            }
        }
        let torsion: BTreeMap<isize, Vec<serde_json::Value>> = self
            .torsion
            .iter()
            .map(|(d, ts)| {
                let vals = ts
                    .iter()
                    .map(|t| match t.to_u64() {
                        Some(v) => serde_json::Value::from(v),
                        None => serde_json::Value::from(t.to_string()),
                    })
                    .collect();
                (*d, vals)
            })
            .collect();
        let betti: BTreeMap<isize, usize> = self
            .betti
            .iter()
            .filter(|e| *e.0 >= 0 || *e.1 > 0)
            .map(|(d, b)| (*d, *b))
            .collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("view", &self.view)?;
        m.serialize_entry("betti", &Degrees(&betti, |_| true))?;
        m.serialize_entry("torsion", &Degrees(&torsion, |v: &Vec<_>| !v.is_empty()))?;
        m.end()
    }
}

/// Reduced integral homology via Smith normal form of every boundary map.
pub fn homology(cc: &ChainComplexZ) -> HomologyResult {
    let top = cc.dimension();
    let invariants: Vec<SmithInvariants> = (0..=top + 1)
        .map(|d| match cc.boundary(d) {
            Some(m) => smith_invariants(m),
            None => SmithInvariants {
                rank: 0,
                torsion: Vec::new(),
            },
        })
        .collect();
    // invariants[k] belongs to ∂_k, k >= 0; ∂_{-1} = 0
    let rank = |d: isize| if d < 0 { 0 } else { invariants[d as usize].rank };
    let mut betti = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for d in -1..=top {
        let dim = cc.simplices(d).len();
        betti.insert(d, dim - rank(d) - rank(d + 1));
        let t = &invariants[(d + 1) as usize].torsion;
        if !t.is_empty() {
            torsion.insert(d, t.clone());
        }
    }
    HomologyResult {
        view: cc.label().to_string(),
        betti,
        torsion,
    }
}

/// Reduced Betti numbers over the rationals, by exact elimination
/// independent of the Smith path.
pub fn rational_betti(cc: &ChainComplexZ) -> BTreeMap<isize, usize> {
    let top = cc.dimension();
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|d| cc.boundary(d).map_or(0, rational_rank))
        .collect();
    let rank = |d: isize| if d < 0 { 0 } else { ranks[d as usize] };
    (-1..=top)
        .map(|d| (d, cc.simplices(d).len() - rank(d) - rank(d + 1)))
        .collect()
}

/// Rank over `Q` by row reduction with rational pivots.
pub fn rational_rank(m: &SparseMatrix) -> usize {
    // pivot row of each reduced column, keyed by pivot position
    let mut basis: BTreeMap<u32, BTreeMap<u32, BigRational>> = BTreeMap::new();
    let mut rank = 0;
    for col in m.columns() {
        let mut v: BTreeMap<u32, BigRational> = col
            .iter()
            .map(|&(r, x)| (r, BigRational::from_integer(x.into())))
            .collect();
        while let Some((&lead, coeff)) = v.iter().next() {
            let Some(b) = basis.get(&lead) else { break };
            let f = coeff.clone() / &b[&lead];
            for (r, x) in b {
                let e = v.entry(*r).or_insert_with(BigRational::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(r);
                }
            }
        }
        if let Some((&lead, _)) = v.iter().next() {
            basis.insert(lead, v);
            rank += 1;
        }
    }
    rank
}
