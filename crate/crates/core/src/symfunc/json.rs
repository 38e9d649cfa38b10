//! JSON form: `{"basis":"h","terms":[{"partition":[2,1],"coeff":"3"}]}`.
//! Coefficients are decimal strings `"a"` or `"a/b"` in lowest terms and
//! terms follow the canonical partition order.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::IntPartition;
use super::{Basis, SymFunc, SymFuncError};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: IntPartition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

pub(crate) fn parse_coeff(s: &str) -> Result<BigRational, SymFuncError> {
    let bad = || SymFuncError::BadCoefficient(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let r = BigRational::from_str(t).map_err(|_| bad())?;
    Ok(r)
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = SymFuncRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermRepr {
                    partition: k.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c = parse_coeff(&t.coeff).map_err(serde::de::Error::custom)?;
            if !c.is_zero() {
                terms.push((t.partition, c));
            }
        }
        Ok(SymFunc::from_terms(repr.basis, terms))
    }
}

pub(crate) fn serialize_coeff_list<S: Serializer>(
    list: &[(IntPartition, BigRational)],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(list.len()))?;
    for (k, c) in list {
        seq.serialize_element(&TermRepr {
            partition: k.clone(),
            coeff: c.to_string(),
        })?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    #[test]
    fn serializes_in_documented_shape() {
        let f = SymFunc::from_terms(
            Basis::H,
            [
                (IntPartition::new(vec![1, 1]), rat(-1)),
                (IntPartition::new(vec![2, 1]), rat(3)),
                (IntPartition::new(vec![2]), BigRational::new(1.into(), 2.into())),
            ],
        );
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"h","terms":[{"partition":[2],"coeff":"1/2"},{"partition":[1,1],"coeff":"-1"},{"partition":[2,1],"coeff":"3"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.basis(), Basis::H);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn rejects_garbage_coefficients() {
        let bad = r#"{"basis":"s","terms":[{"partition":[1],"coeff":"x/2"}]}"#;
        assert!(serde_json::from_str::<SymFunc>(bad).is_err());
        let bad_basis = r#"{"basis":"q","terms":[]}"#;
        assert!(serde_json::from_str::<SymFunc>(bad_basis).is_err());
    }
}
