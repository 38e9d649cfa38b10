//! Smith normal form invariants of sparse integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

/// A sparse integer matrix stored by columns, each sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| (e.0 as usize) < nrows && e.1 != 0)));
        SparseMatrix { nrows, columns }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            columns: vec![Vec::new(); ncols],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.columns
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.ncols()]; self.nrows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] = v;
            }
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| rows[r][c] != 0)
                    .map(|r| (r as u32, rows[r][c]))
                    .collect()
            })
            .collect();
        SparseMatrix { nrows, columns }
    }

    /// `self * other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch");
        let mut columns = Vec::with_capacity(other.ncols());
        let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
        for col in &other.columns {
            acc.clear();
            for &(k, b) in col {
                for &(r, a) in &self.columns[k as usize] {
                    let e = acc.entry(r).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            columns.push(acc.iter().filter(|e| *e.1 != 0).map(|(&r, &v)| (r, v)).collect());
        }
        Some(SparseMatrix {
            nrows: self.nrows,
            columns,
        })
    }
}

/// Rank and torsion coefficients (invariant factors greater than one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Smith invariants of `m`. Unit pivots are eliminated sparsely first; the
/// remainder goes through a dense reduction over arbitrary-precision integers.
pub fn smith_invariants(m: &SparseMatrix) -> SmithInvariants {
    let cols: Vec<Vec<(u32, i64)>> = m.columns.clone();
    match eliminate_units(m.nrows, cols) {
        Some(r) => r,
        None => {
            let cols = m
                .columns
                .iter()
                .map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect())
                .collect();
            eliminate_units(m.nrows, cols).expect("arbitrary precision cannot overflow")
        }
    }
}

trait Entry: Clone + Zero + One + Signed + CheckedMul + CheckedSub + Into<BigInt> {}
impl Entry for i64 {}
impl Entry for BigInt {}

/// `None` when a fixed-width entry overflowed.
fn eliminate_units<T: Entry>(nrows: usize, mut cols: Vec<Vec<(u32, T)>>) -> Option<SmithInvariants> {
    let ncols = cols.len();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col {
            rows[*r as usize].push(c as u32);
        }
    }
    let mut alive = vec![true; ncols];
    let mut rank = 0usize;
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by_key(|&c| cols[c].len());
    loop {
        let mut progressed = false;
        for &c in &order {
            if !alive[c] {
                continue;
            }
            if cols[c].is_empty() {
                alive[c] = false;
                continue;
            }
            // unit entry in the sparsest row
            let pivot = cols[c]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(r, _)| rows[*r as usize].len())
                .map(|(r, v)| (*r, v.clone()));
            let Some((r, u)) = pivot else { continue };
            let mut users = std::mem::take(&mut rows[r as usize]);
            users.sort_unstable();
            users.dedup();
            let pcol = std::mem::take(&mut cols[c]);
            for &o in &users {
                let o = o as usize;
                if o == c || !alive[o] {
                    continue;
                }
                let Ok(pos) = cols[o].binary_search_by_key(&r, |e| e.0) else {
                    continue;
                };
                let f = cols[o][pos].1.checked_mul(&u)?;
                let (merged, fresh) = sub_scaled(&cols[o], &pcol, &f)?;
                cols[o] = merged;
                for row in fresh {
                    rows[row as usize].push(o as u32);
                }
            }
            alive[c] = false;
            rank += 1;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    let rest: Vec<Vec<(u32, T)>> = cols
        .into_iter()
        .zip(alive)
        .filter(|(c, a)| *a && !c.is_empty())
        .map(|(c, _)| c)
        .collect();
    let (r, torsion) = dense_smith(rest);
    Some(SmithInvariants {
        rank: rank + r,
        torsion,
    })
}

/// `a - f * b` on sorted sparse columns, with the rows newly present in the result.
#[allow(clippy::type_complexity)]
fn sub_scaled<T: Entry>(a: &[(u32, T)], b: &[(u32, T)], f: &T) -> Option<(Vec<(u32, T)>, Vec<u32>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut fresh = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i].clone());
            i += 1;
        } else if rb < ra {
            let v = T::zero().checked_sub(&f.checked_mul(&b[j].1)?)?;
            out.push((rb, v));
            fresh.push(rb);
            j += 1;
        } else {
            let v = a[i].1.checked_sub(&f.checked_mul(&b[j].1)?)?;
            if !v.is_zero() {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some((out, fresh))
}

/// Rank and invariant factors > 1 of the matrix given by the columns.
fn dense_smith<T: Entry>(cols: Vec<Vec<(u32, T)>>) -> (usize, Vec<BigInt>) {
    if cols.is_empty() {
        return (0, Vec::new());
    }
    let mut row_ids: Vec<u32> = cols.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; row_ids.len()];
    for (c, col) in cols.into_iter().enumerate() {
        for (r, v) in col {
            let i = row_ids.binary_search(&r).unwrap();
            m[i][c] = v.into();
        }
    }
    let diag = smith_diagonal(&mut m);
    let torsion = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    (diag.len(), torsion)
}

/// Reduces a dense matrix to Smith form in place and returns the nonzero
/// diagonal (positive, each dividing the next).
pub fn smith_diagonal(m: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let nr = m.len();
    let nc = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        break;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                    *x -= &q * y;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                    if m[i][t].abs() < m[t][t].abs() {
                        m.swap(t, i);
                    }
                }
            }
            for j in t + 1..nc {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let p = row[t].clone();
                    row[j] -= &q * p;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                    if m[t][j].abs() < m[t][t].abs() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    let (head, tail) = m.split_at_mut(i);
                    for (x, y) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
