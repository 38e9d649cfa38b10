use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::poset::{fixed_chain_count, PosetView, RankSet, ViewSpec};
use crate::symfunc::{plethysm_with_h, Basis, IntPartition, SymFunc};

use super::{ClassFunction, RepsError, MAX_CHAINS_METHOD_N, MAX_RECURRENCE_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMethod {
    Chains,
    Recurrence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaMethod {
    InclusionExclusion,
    Recurrence,
}

impl FromStr for AlphaMethod {
    type Err = RepsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chains" => Ok(AlphaMethod::Chains),
            "recurrence" => Ok(AlphaMethod::Recurrence),
            _ => Err(RepsError::BadParameter(format!("unknown alpha method {s:?}"))),
        }
    }
}

impl FromStr for BetaMethod {
    type Err = RepsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inclusion_exclusion" | "inclusion-exclusion" | "ie" => Ok(BetaMethod::InclusionExclusion),
            "recurrence" => Ok(BetaMethod::Recurrence),
            _ => Err(RepsError::BadParameter(format!("unknown beta method {s:?}"))),
        }
    }
}

impl fmt::Display for AlphaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaMethod::Chains => "chains",
            AlphaMethod::Recurrence => "recurrence",
        })
    }
}

impl fmt::Display for BetaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaMethod::InclusionExclusion => "inclusion_exclusion",
            BetaMethod::Recurrence => "recurrence",
        })
    }
}

type Memo = RwLock<HashMap<(usize, RankSet), Arc<SymFunc>>>;

#[derive(Default)]
struct Caches {
    alpha_chains: Memo,
    alpha_rec: Memo,
    beta_ie: Memo,
    beta_rec: Memo,
}

fn caches() -> &'static Caches {
    static CACHES: OnceLock<Caches> = OnceLock::new();
    CACHES.get_or_init(Caches::default)
}

fn memoized<F>(memo: &Memo, n: usize, s: &RankSet, compute: F) -> Result<Arc<SymFunc>, RepsError>
where
    F: FnOnce() -> Result<SymFunc, RepsError>,
{
    let key = (n, s.clone());
    if let Some(v) = memo.read().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(compute()?);
    Ok(memo
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert(v)
        .clone())
}

pub(crate) fn check_rank_set(n: usize, s: &RankSet) -> Result<(), RepsError> {
    if n == 0 {
        return Err(RepsError::BadParameter("n must be positive".into()));
    }
    s.check_fits(n)?;
    Ok(())
}

fn check_bound(what: &'static str, n: usize, max: usize) -> Result<(), RepsError> {
    if n > max {
        return Err(RepsError::OutOfBounds { what, value: n, max });
    }
    Ok(())
}

fn require_module(f: SymFunc, what: &str, n: usize, s: &RankSet) -> Result<SymFunc, RepsError> {
    let cert = f.positivity(Basis::S);
    if !cert.positive {
        return Err(RepsError::NotAModule {
            what: what.to_string(),
            n,
            ranks: s.clone(),
            expansion: cert.coefficients.iter().map(|(l, c)| format!("{c}*s{l}")).collect(),
        });
    }
    Ok(f.convert(Basis::S))
}

/// Character of the permutation action on maximal chains of `Π_n(S)`, by
/// counting fixed chains.
pub fn alpha_character(n: usize, s: &RankSet) -> Result<ClassFunction, RepsError> {
    check_rank_set(n, s)?;
    check_bound("chain enumeration size", n, MAX_CHAINS_METHOD_N)?;
    if s.is_empty() {
        return Ok(ClassFunction::from_integers(n, |_| BigInt::one()));
    }
    let view = PosetView::new(n, ViewSpec::Ranks(s.clone()))?;
    let mut err = None;
    let chi = ClassFunction::from_integers(n, |ct| match fixed_chain_count(&view, ct) {
        Ok(c) => BigInt::from(c),
        Err(e) => {
            err = Some(e);
            BigInt::zero()
        }
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(chi),
    }
}

/// `α_S(n)` in the Schur basis.
pub fn alpha(n: usize, s: &RankSet, method: AlphaMethod) -> Result<SymFunc, RepsError> {
    alpha_shared(n, s, method).map(|a| (*a).clone())
}

fn alpha_shared(n: usize, s: &RankSet, method: AlphaMethod) -> Result<Arc<SymFunc>, RepsError> {
    check_rank_set(n, s)?;
    match method {
        AlphaMethod::Chains => memoized(&caches().alpha_chains, n, s, || {
            let f = alpha_character(n, s)?.frobenius();
            require_module(f, "alpha", n, s)
        }),
        AlphaMethod::Recurrence => {
            check_bound("recurrence size", n, MAX_RECURRENCE_N)?;
            memoized(&caches().alpha_rec, n, s, || {
                let Some((s1, rest)) = s.peel_first() else {
                    return Ok(SymFunc::h(n).convert(Basis::S));
                };
                let inner = alpha_shared(n - s1, &rest, AlphaMethod::Recurrence)?;
                require_module(plethysm_with_h(&inner, n), "alpha", n, s)
            })
        }
    }
}

/// `β_S(n)` in the Schur basis.
pub fn beta(n: usize, s: &RankSet, method: BetaMethod) -> Result<SymFunc, RepsError> {
    beta_shared(n, s, method).map(|b| (*b).clone())
}

fn beta_shared(n: usize, s: &RankSet, method: BetaMethod) -> Result<Arc<SymFunc>, RepsError> {
    check_rank_set(n, s)?;
    match method {
        BetaMethod::InclusionExclusion => memoized(&caches().beta_ie, n, s, || {
            let mut acc = SymFunc::zero(Basis::S);
            for t in s.subsets() {
                let a = alpha_shared(n, &t, AlphaMethod::Chains)?;
                acc = if (s.len() - t.len()) % 2 == 0 { &acc + &*a } else { &acc - &*a };
            }
            require_module(acc, "beta", n, s)
        }),
        BetaMethod::Recurrence => {
            check_bound("recurrence size", n, MAX_RECURRENCE_N)?;
            memoized(&caches().beta_rec, n, s, || {
                let Some((s1, rest)) = s.peel_first() else {
                    return Ok(SymFunc::h(n).convert(Basis::S));
                };
                let inner = beta_shared(n - s1, &rest, BetaMethod::Recurrence)?;
                let lower = beta_shared(n, &s.without_first(), BetaMethod::Recurrence)?;
                let f = &plethysm_with_h(&inner, n) - &*lower;
                require_module(f, "beta", n, s)
            })
        }
    }
}

/// Number-theoretic Möbius function.
pub fn number_mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `π_n`: the top homology of `Π_n`, `sgn ⊗ (1/n) Σ_{d|n} μ(d) p_d^{n/d}`.
pub fn lie_top_homology(n: usize) -> SymFunc {
    assert!(n >= 1, "lie_top_homology needs n >= 1");
    let mut lie = SymFunc::zero(Basis::P);
    for d in (1..=n).filter(|d| n % d == 0) {
        let mu = number_mobius(d);
        if mu != 0 {
            let term = SymFunc::basis_element(Basis::P, IntPartition::new(vec![d; n / d]));
            lie = &lie + &term.scale(&BigRational::from_integer(mu.into()));
        }
    }
    lie.scale(&BigRational::new(1.into(), n.into()))
        .sign_twist()
        .convert(Basis::S)
}

/// `π_{n,k} = π_k h_1^{n-k} - π_n`.
pub fn whitehouse(n: usize, k: usize) -> Result<SymFunc, RepsError> {
    if k < 2 || k + 1 > n {
        return Err(RepsError::BadParameter(format!(
            "whitehouse module needs 2 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let f = &lie_top_homology(k).multiply(&SymFunc::h(1).pow(n - k)) - &lie_top_homology(n);
    Ok(f.convert(Basis::S))
}

/// Trivial-representation multiplicities of `α_S(n)` and `β_S(n)` for `S_n`
/// and for `S_{n-1} × S_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicities {
    #[serde(serialize_with = "super::ser_bigint")]
    pub a: BigInt,
    #[serde(rename = "a_prime", serialize_with = "super::ser_bigint")]
    pub a_prime: BigInt,
    #[serde(serialize_with = "super::ser_bigint")]
    pub b: BigInt,
    #[serde(rename = "b_prime", serialize_with = "super::ser_bigint")]
    pub b_prime: BigInt,
}

pub(crate) fn pairing(f: &SymFunc, g: &SymFunc) -> BigInt {
    let v = f.inner_product(g);
    assert!(v.is_integer(), "multiplicity {v} is not an integer");
    v.to_integer()
}

/// `⟨f, h_n⟩` and `⟨f, h_{n-1} h_1⟩`.
pub(crate) fn trivial_multiplicities(f: &SymFunc, n: usize) -> (BigInt, BigInt) {
    let hn = SymFunc::h(n);
    let hn1 = if n >= 1 {
        SymFunc::h_partition(&[n - 1, 1])
    } else {
        SymFunc::zero(Basis::H)
    };
    (pairing(f, &hn), pairing(f, &hn1))
}

/// Multiplicities through the recurrence path.
pub fn multiplicities(n: usize, s: &RankSet) -> Result<Multiplicities, RepsError> {
    let a = alpha_shared(n, s, AlphaMethod::Recurrence)?;
    let b = beta_shared(n, s, BetaMethod::Recurrence)?;
    let (a, a_prime) = trivial_multiplicities(&a, n);
    let (b, b_prime) = trivial_multiplicities(&b, n);
    Ok(Multiplicities { a, a_prime, b, b_prime })
}

/// `⟨f, s_λ⟩`.
pub fn schur_multiplicity(f: &SymFunc, lambda: &IntPartition) -> BigInt {
    pairing(f, &SymFunc::basis_element(Basis::S, lambda.clone()))
}
