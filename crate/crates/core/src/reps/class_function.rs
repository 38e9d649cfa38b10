use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::symfunc::{partitions_of, Basis, IntPartition, SymFunc};

/// A class function on `S_n`: one exact value per cycle type.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    n: usize,
    #[serde(with = "values_serde")]
    values: BTreeMap<IntPartition, BigRational>,
}

impl ClassFunction {
    /// Evaluates `f` on every cycle type of `S_n`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(&IntPartition) -> BigRational,
    {
        let values = partitions_of(n).into_iter().map(|l| {
            let v = f(&l);
            (l, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn from_integers<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(&IntPartition) -> BigInt,
    {
        Self::from_fn(n, |l| BigRational::from_integer(f(l)))
    }

    /// The character whose Frobenius characteristic is `f` (homogeneous of degree `n`).
    pub fn from_characteristic(f: &SymFunc, n: usize) -> Self {
        let p = f.to_p().component(n);
        Self::from_fn(n, |l| p.coeff(l) * BigRational::from_integer(l.z()))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| BigRational::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &IntPartition) -> BigRational {
        self.values.get(cycle_type).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&IntPartition, &BigRational)> {
        self.values.iter()
    }

    /// `ch(χ) = Σ_λ χ(λ) p_λ / z_λ`.
    pub fn frobenius(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::P,
            self.values
                .iter()
                .map(|(l, v)| (l.clone(), v / BigRational::from_integer(l.z()))),
        )
    }

    pub fn degree(&self) -> BigRational {
        self.value(&IntPartition::column(self.n))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Self {
        assert_eq!(self.n, other.n, "class functions of different degrees");
        Self::from_fn(self.n, |l| self.value(l) + other.value(l))
    }

    /// `⟨χ, ψ⟩ = Σ_λ χ(λ) ψ(λ) / z_λ` (values are real).
    pub fn inner_product(&self, other: &ClassFunction) -> BigRational {
        self.values
            .iter()
            .map(|(l, v)| v * other.value(l) / BigRational::from_integer(l.z()))
            .sum()
    }

    /// Cycle types where the value is nonzero.
    pub fn support(&self) -> Vec<&IntPartition> {
        self.values.iter().filter(|e| !e.1.is_zero()).map(|e| e.0).collect()
    }

    /// Vanishes at every cycle type with a part larger than 2.
    pub fn is_supported_on_involutions(&self) -> bool {
        self.support().iter().all(|l| l.is_involution_type())
    }

    /// Every value a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.values
            .values()
            .all(|v| v.is_integer() && !v.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.denom().is_one())
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.values.iter().map(|(l, v)| format!("{l}: {v}")).collect();
        write!(f, "ClassFunction[{}]{{{}}}", self.n, body.join(", "))
    }
}

mod values_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        cycle_type: IntPartition,
        value: String,
    }

    pub fn serialize<S: Serializer>(
        values: &BTreeMap<IntPartition, BigRational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = values
            .iter()
            .map(|(l, v)| Entry {
                cycle_type: l.clone(),
                value: v.to_string(),
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<IntPartition, BigRational>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        entries
            .into_iter()
            .map(|e| {
                let v = crate::symfunc::parse_coeff(&e.value).map_err(serde::de::Error::custom)?;
                Ok((e.cycle_type, v))
            })
            .collect()
    }
}
