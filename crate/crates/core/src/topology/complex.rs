use std::collections::HashMap;
use std::fmt::Write as _;

use crate::poset::PosetView;

use super::{SparseMatrix, TopologyError, MAX_SIMPLICES};

/// The augmented chain complex of the order complex of a view.
///
/// `simplices(d)` lists the chains with `d + 1` elements as increasing
/// element indices, for `d >= -1`; the single `(-1)`-simplex is the empty
/// chain. `boundary(d)` maps `d`-chains to `(d-1)`-chains for `d >= 0`.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    label: String,
    /// Entry `k` holds the `(k-1)`-simplices.
    simplices: Vec<Vec<Vec<u32>>>,
    /// Entry `k` is the boundary of the `k`-simplices.
    boundaries: Vec<SparseMatrix>,
}

/// Number of chains (including the empty one) of a view.
pub fn count_chains(view: &PosetView) -> Result<u64, TopologyError> {
    let rel = view.relations()?;
    let mut from = vec![0u64; view.len()];
    for i in (0..view.len()).rev() {
        from[i] = 1 + rel.above[i].iter().map(|&j| from[j as usize]).sum::<u64>();
    }
    Ok(1 + from.iter().sum::<u64>())
}

pub fn order_complex(view: &PosetView) -> Result<ChainComplexZ, TopologyError> {
    let total = count_chains(view)?;
    if total > MAX_SIMPLICES {
        return Err(TopologyError::TooManySimplices(total));
    }
    let rel = view.relations()?;
    let mut simplices: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new()]];
    let mut stack = Vec::new();
    fn walk(above: &[Vec<u32>], i: u32, stack: &mut Vec<u32>, out: &mut Vec<Vec<Vec<u32>>>) {
        stack.push(i);
        if out.len() <= stack.len() {
            out.push(Vec::new());
        }
        out[stack.len()].push(stack.clone());
        for &j in &above[i as usize] {
            walk(above, j, stack, out);
        }
        stack.pop();
    }
    for i in 0..view.len() {
        walk(&rel.above, i as u32, &mut stack, &mut simplices);
    }
    for level in simplices.iter_mut() {
        level.sort_unstable();
    }
    let mut boundaries = Vec::with_capacity(simplices.len());
    boundaries.push(SparseMatrix::zero(0, 1));
    for k in 1..simplices.len() {
        let faces: HashMap<&[u32], u32> = simplices[k - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i as u32))
            .collect();
        let columns = simplices[k]
            .iter()
            .map(|s| {
                let mut col: Vec<(u32, i64)> = (0..s.len())
                    .map(|drop| {
                        let face: Vec<u32> = s
                            .iter()
                            .enumerate()
                            .filter(|e| e.0 != drop)
                            .map(|e| *e.1)
                            .collect();
                        let sign = if drop % 2 == 0 { 1 } else { -1 };
                        (faces[face.as_slice()], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        boundaries.push(SparseMatrix::new(simplices[k - 1].len(), columns));
    }
    let cc = ChainComplexZ {
        label: format!("{},n={}", view.spec(), view.n()),
        simplices,
        boundaries,
    };
    cc.check_nilpotent()?;
    Ok(cc)
}

impl ChainComplexZ {
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Largest `d` with a `d`-simplex; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices.len() as isize - 2
    }

    pub fn simplices(&self, d: isize) -> &[Vec<u32>] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.simplices.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// `f`-vector from dimension `-1` upward.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// `∂_d`, for `0 <= d <= dimension()`.
    pub fn boundary(&self, d: isize) -> Option<&SparseMatrix> {
        usize::try_from(d + 1).ok().and_then(|k| self.boundaries.get(k))
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    fn check_nilpotent(&self) -> Result<(), TopologyError> {
        for d in 1..=self.dimension() {
            let (Some(a), Some(b)) = (self.boundary(d - 1), self.boundary(d)) else {
                continue;
            };
            let nil = a.checked_mul(b).is_some_and(|p| p.nnz() == 0);
            if !nil {
                return Err(TopologyError::BoundaryNotNilpotent(d));
            }
        }
        Ok(())
    }

    /// Boundary matrices as sparse triplets: for each `d`, a header line
    /// `# boundary d=<d> rows=<r> cols=<c> nnz=<k>` followed by one
    /// `row col value` line per nonzero entry, 0-based, column-major.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        for d in 0..=self.dimension() {
            let m = self.boundary(d).expect("in range");
            let _ = writeln!(
                out,
                "# boundary d={d} rows={} cols={} nnz={}",
                m.nrows(),
                m.ncols(),
                m.nnz()
            );
            for (c, col) in m.columns().iter().enumerate() {
                for (r, v) in col {
                    let _ = writeln!(out, "{r} {c} {v}");
                }
            }
        }
        out
    }
}
