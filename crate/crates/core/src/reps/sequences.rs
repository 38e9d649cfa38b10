use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poset::RankSet;
use crate::symfunc::{Basis, SymFunc};

use super::modules::{beta, BetaMethod};
use super::{RepsError, MAX_RECURRENCE_N};

/// Euler (zigzag) numbers `E_n` by the boustrophedon transform.
pub fn euler_number(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigInt::zero());
        for j in 1..=i {
            let v = &next[j - 1] + &row[i - j];
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("row is nonempty")
}

/// `a_i(n)` for `i = 0, ..., ⌊n/2⌋`, via
/// `a_i(n+1) = i a_i(n) + (n - 2i + 2) a_{i-1}(n)` from `a_0(1) = 1`.
pub fn simsun_row(n: usize) -> Vec<BigInt> {
    assert!(n >= 1, "simsun rows start at n = 1");
    let mut row = vec![BigInt::one()];
    for m in 1..n {
        // row holds a_i(m); build a_i(m + 1)
        let width = (m + 1) / 2 + 1;
        let mut next = vec![BigInt::zero(); width];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if let Some(a) = row.get(i) {
                v += a * i;
            }
            if i >= 1 && m + 2 >= 2 * i {
                if let Some(a) = row.get(i - 1) {
                    v += a * (m + 2 - 2 * i);
                }
            }
            *slot = v;
        }
        row = next;
    }
    row
}

pub fn simsun(i: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    simsun_row(n).get(i).cloned().unwrap_or_default()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `b_i(n)`, the multiplicity of `h_2^i h_1^{2n-2i}` in the even-block
/// module, for `2 <= i <= n`.
pub fn bi(i: usize, n: usize) -> BigInt {
    if i < 2 || i > n {
        return BigInt::zero();
    }
    if i == 2 {
        return BigInt::one();
    }
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), BigInt>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().expect("cache poisoned").get(&(i, n)) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for k in 0..=i - 2 {
        let outer = binomial(2 * n - 2 * i + k, k);
        let mut inner = BigInt::zero();
        for r in 1..=i / 2 {
            if r > n {
                continue;
            }
            let term = binomial(i - k, i - 2 * r) * bi(i - k, n - r);
            if r % 2 == 1 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += outer * inner;
    }
    memo.write().expect("cache poisoned").insert((i, n), total.clone());
    total
}

/// `E_k(n) = Σ_i b_i(n) C(n-i, k-i)`.
pub fn e_k(k: usize, n: usize) -> BigInt {
    (2..=k.min(n)).map(|i| bi(i, n) * binomial(n - i, k - i)).sum()
}

fn int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// `Σ_{i=2}^{n} b_i(n) h_2^i h_1^{2n-2i}`, without cross-checking.
pub fn r_even_formula(n: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::H);
    for i in 2..=n {
        let mut parts = vec![2; i];
        parts.extend(std::iter::repeat(1).take(2 * n - 2 * i));
        acc = &acc + &SymFunc::h_partition(&parts).scale(&int(&bi(i, n)));
    }
    acc
}

/// `Σ_{i=2}^{n} E_i(n) h_2^i e_2^{n-i}`.
pub fn r_even_e2_form(n: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::P);
    for i in 2..=n {
        let term = SymFunc::h(2).pow(i).multiply(&SymFunc::e(2).pow(n - i));
        acc = &acc + &term.scale(&int(&e_k(i, n)));
    }
    acc.convert(Basis::H)
}

/// The rank set `{2, 4, ..., 2n-2}`.
pub fn even_ranks(n: usize) -> RankSet {
    RankSet::new((1..n).map(|j| 2 * j).collect()).expect("ranks positive")
}

/// The even-block module of `Π_{2n}` in the `h` basis, checked against
/// `β_{2,4,...,2n-2}(2n)` from the recurrence.
pub fn r_even(n: usize) -> Result<SymFunc, RepsError> {
    if n < 2 {
        return Err(RepsError::BadParameter(format!("even-block module needs n >= 2, got {n}")));
    }
    if 2 * n > MAX_RECURRENCE_N {
        return Err(RepsError::OutOfBounds {
            what: "even-block size 2n",
            value: 2 * n,
            max: MAX_RECURRENCE_N,
        });
    }
    let formula = r_even_formula(n);
    let b = beta(2 * n, &even_ranks(n), BetaMethod::Recurrence)?;
    if formula != b {
        return Err(RepsError::MethodMismatch {
            what: format!("even-block module for n={n}"),
            left: formula.convert(Basis::S).to_string(),
            right: b.to_string(),
        });
    }
    Ok(formula)
}
