//! Exact symmetric functions over the rationals.
//!
//! A [`SymFunc`] is a finite linear combination of basis elements from one
//! of the five classical bases. Arithmetic happens in the power-sum basis,
//! where products are concatenation of partitions and plethysm is a
//! substitution; the other bases are used for input and for reading off
//! coefficients.

mod characters;
mod convert;
mod json;
mod partition;
mod plethysm;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use characters::irreducible_character;
pub use convert::kostka_number;
pub use partition::{partitions_of, IntPartition};
pub use plethysm::{plethysm, plethysm_with_h};
pub(crate) use json::parse_coeff;

use convert::{add_term, Terms};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("plethysm f[g] needs g without constant term, found {0}")]
    ConstantTerm(BigRational),
    #[error("unknown basis {0:?}; expected one of p, h, e, m, s")]
    UnknownBasis(String),
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("hook (n-k,1^k) needs 0 <= k < n, got n={n}, k={k}")]
    BadHook { n: usize, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Power sums.
    P,
    /// Complete homogeneous.
    H,
    /// Elementary.
    E,
    /// Monomial.
    M,
    /// Schur.
    S,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = SymFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            _ => Err(SymFuncError::UnknownBasis(s.to_string())),
        }
    }
}

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A symmetric function in a chosen basis. Zero coefficients are never stored.
///
/// Equality is mathematical: two values in different bases compare equal
/// when they describe the same symmetric function.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: Terms,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 unit.
    pub fn one() -> Self {
        Self::basis_element(Basis::P, IntPartition::empty())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_terms(Basis::P, [(IntPartition::empty(), c)])
    }

    pub fn basis_element(basis: Basis, lambda: IntPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        SymFunc { basis, terms }
    }

    /// `h_n`; `h_0 = 1`.
    pub fn h(n: usize) -> Self {
        Self::basis_element(Basis::H, IntPartition::row(n))
    }

    pub fn e(n: usize) -> Self {
        Self::basis_element(Basis::E, IntPartition::row(n))
    }

    pub fn p(n: usize) -> Self {
        Self::basis_element(Basis::P, IntPartition::row(n))
    }

    /// `s_λ` from a weakly decreasing part list.
    pub fn s(parts: &[usize]) -> Self {
        Self::basis_element(Basis::S, IntPartition::new(parts.to_vec()))
    }

    /// `h_λ = h_{λ_1} h_{λ_2} ⋯`.
    pub fn h_partition(parts: &[usize]) -> Self {
        Self::basis_element(Basis::H, IntPartition::new(parts.to_vec()))
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (IntPartition, BigRational)>,
    {
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            add_term(&mut out, k, c);
        }
        SymFunc { basis, terms: out }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &IntPartition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(IntPartition::weight).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(IntPartition::weight).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// The degree-`d` homogeneous part, in the same basis.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() <= d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let p = convert::to_p(self.basis, &self.terms);
        SymFunc {
            basis: target,
            terms: convert::from_p(&p, target),
        }
    }

    pub fn to_p(&self) -> SymFunc {
        self.convert(Basis::P)
    }

    fn p_terms(&self) -> std::borrow::Cow<'_, Terms> {
        if self.basis == Basis::P {
            std::borrow::Cow::Borrowed(&self.terms)
        } else {
            std::borrow::Cow::Owned(convert::to_p(self.basis, &self.terms))
        }
    }

    /// Product, returned in the power-sum basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.p_terms();
        let b = other.p_terms();
        let mut out = BTreeMap::new();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                add_term(&mut out, ka.union(kb), ca * cb);
            }
        }
        SymFunc {
            basis: Basis::P,
            terms: out,
        }
    }

    pub fn pow(&self, k: usize) -> SymFunc {
        let mut acc = SymFunc::one();
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Hall inner product; terms of different degree pair to zero.
    pub fn inner_product(&self, other: &SymFunc) -> BigRational {
        let a = self.p_terms();
        let b = other.p_terms();
        let mut acc = BigRational::zero();
        for (k, ca) in a.iter() {
            if let Some(cb) = b.get(k) {
                acc += ca * cb * BigRational::from(k.z());
            }
        }
        acc
    }

    /// The involution `p_k ↦ (-1)^{k-1} p_k`, i.e. tensoring with the sign
    /// representation. Returned in the power-sum basis.
    pub fn sign_twist(&self) -> SymFunc {
        SymFunc {
            basis: Basis::P,
            terms: convert::sign_twist_p(&self.p_terms()),
        }
    }

    /// Formal partial derivative `∂/∂p_1`, in the power-sum basis.
    pub fn d_dp1(&self) -> SymFunc {
        self.p_derivative(1, false)
    }

    /// `∂/∂p_k`, optionally scaled by `k` (the adjoint of multiplication by `p_k`).
    fn p_derivative(&self, k: usize, adjoint: bool) -> SymFunc {
        let mut out = BTreeMap::new();
        for (mu, c) in self.p_terms().iter() {
            let m = mu.multiplicity(k);
            if m == 0 {
                continue;
            }
            let factor = if adjoint { m * k } else { m };
            let rest = mu.remove_part(k).expect("part present");
            add_term(&mut out, rest, c * rat(factor as i64));
        }
        SymFunc {
            basis: Basis::P,
            terms: out,
        }
    }

    /// Skewing `D_μ`: the adjoint of multiplication by `s_μ`.
    pub fn skew(&self, mu: &IntPartition) -> SymFunc {
        // s_μ = Σ_ρ χ^μ(ρ) p_ρ / z_ρ and p_ρ^⊥ = ∏ (k ∂/∂p_k)^{m_k(ρ)}
        let s_mu = SymFunc::basis_element(Basis::S, mu.clone()).to_p();
        let mut acc = SymFunc::zero(Basis::P);
        for (rho, c) in s_mu.terms() {
            let mut g = self.to_p();
            for &k in rho.parts() {
                g = g.p_derivative(k, true);
                if g.is_zero() {
                    break;
                }
            }
            acc = &acc + &g.scale(c);
        }
        acc
    }

    /// `⟨f_n, p_1^n⟩` summed over degrees: the dimension of the module.
    pub fn dimension(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.p_terms().iter() {
            if k.parts().iter().all(|&p| p == 1) {
                acc += c * BigRational::from(k.z());
            }
        }
        acc
    }

    /// Coefficients in `basis`, with a verdict on nonnegative integrality.
    pub fn positivity(&self, basis: Basis) -> PositivityCertificate {
        let expanded = self.convert(basis);
        let positive = expanded
            .terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative());
        PositivityCertificate {
            basis,
            positive,
            coefficients: expanded
                .terms
                .into_iter()
                .map(|(k, c)| (k, c))
                .collect(),
        }
    }

    pub fn is_schur_positive(&self) -> bool {
        self.positivity(Basis::S).positive
    }

    pub fn is_h_positive(&self) -> bool {
        self.positivity(Basis::H).positive
    }
}

/// Evidence for or against positivity in a basis.
#[derive(Clone, Debug, Serialize)]
pub struct PositivityCertificate {
    pub basis: Basis,
    pub positive: bool,
    #[serde(serialize_with = "json::serialize_coeff_list")]
    pub coefficients: Vec<(IntPartition, BigRational)>,
}

/// `s_{(n-k,1^k)}` as the alternating sum `Σ_{i=0}^{k} (-1)^{k-i} h_{n-i} e_i`,
/// returned in the Schur basis.
pub fn hook_schur(n: usize, k: usize) -> Result<SymFunc, SymFuncError> {
    if k >= n {
        return Err(SymFuncError::BadHook { n, k });
    }
    let mut acc = SymFunc::zero(Basis::P);
    for i in 0..=k {
        let term = SymFunc::h(n - i).multiply(&SymFunc::e(i));
        acc = if (k - i) % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc.convert(Basis::S))
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            *self.p_terms() == *other.p_terms()
        }
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            if k.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{}{}", self.basis.letter(), k)?;
        }
        Ok(())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut terms = self.terms.clone();
        let other = if rhs.basis == self.basis {
            std::borrow::Cow::Borrowed(rhs)
        } else {
            std::borrow::Cow::Owned(rhs.convert(self.basis))
        };
        for (k, c) in other.terms.iter() {
            add_term(&mut terms, k.clone(), c.clone());
        }
        SymFunc {
            basis: self.basis,
            terms,
        }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.multiply(rhs)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: SymFunc) -> SymFunc {
        self.multiply(&rhs)
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        -&self
    }
}
