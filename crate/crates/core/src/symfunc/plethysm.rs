use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::convert::{add_term, Terms};
use super::partition::IntPartition;
use super::{Basis, SymFunc, SymFuncError};

/// Product of two power-sum expansions, dropping terms above `max_degree`.
fn truncated_product(a: &Terms, b: &Terms, max_degree: usize) -> Terms {
    let mut out = BTreeMap::new();
    for (ka, ca) in a {
        let wa = ka.weight();
        if wa > max_degree {
            continue;
        }
        for (kb, cb) in b {
            if wa + kb.weight() > max_degree {
                continue;
            }
            add_term(&mut out, ka.union(kb), ca * cb);
        }
    }
    out
}

/// `p_k[g]`: every `p_i` in `g` becomes `p_{ik}`.
fn adams(g: &Terms, k: usize, max_degree: usize) -> Terms {
    g.iter()
        .filter(|(mu, _)| mu.weight() * k <= max_degree)
        .map(|(mu, c)| (mu.scale(k), c.clone()))
        .collect()
}

/// The plethysm `f[g]` truncated to total degree `max_degree`, in the
/// power-sum basis. `g` must have no constant term.
pub fn plethysm(f: &SymFunc, g: &SymFunc, max_degree: usize) -> Result<SymFunc, SymFuncError> {
    let g = g.to_p();
    let constant = g.coeff(&IntPartition::empty());
    if !constant.is_zero() {
        return Err(SymFuncError::ConstantTerm(constant));
    }
    let f = f.to_p();
    let mut engine = Engine {
        g: &g.terms,
        max_degree,
        adams: HashMap::new(),
        prefix: HashMap::new(),
    };
    let mut out = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let series = engine.power_product(lambda.parts(), max_degree);
        for (mu, v) in series.iter() {
            add_term(&mut out, mu.clone(), v * c);
        }
    }
    Ok(SymFunc {
        basis: Basis::P,
        terms: out,
    })
}

struct Engine<'a> {
    g: &'a Terms,
    max_degree: usize,
    adams: HashMap<usize, Terms>,
    prefix: HashMap<(Vec<usize>, usize), std::rc::Rc<Terms>>,
}

impl Engine<'_> {
    /// `∏ p_{parts[i]}[g]` truncated at `limit`.
    fn power_product(&mut self, parts: &[usize], limit: usize) -> std::rc::Rc<Terms> {
        let key = (parts.to_vec(), limit);
        if let Some(t) = self.prefix.get(&key) {
            return t.clone();
        }
        let result = match parts.split_last() {
            None => {
                let mut one = BTreeMap::new();
                one.insert(IntPartition::empty(), BigRational::one());
                one
            }
            Some((&last, rest)) => {
                // each p_k[g] starts in degree >= k, so the rest may stop at limit - last
                if last > limit {
                    BTreeMap::new()
                } else {
                    let head = self.power_product(rest, limit - last);
                    let max_degree = self.max_degree;
                    let g = self.g;
                    let tail = self
                        .adams
                        .entry(last)
                        .or_insert_with(|| adams(g, last, max_degree));
                    truncated_product(&head, tail, limit)
                }
            }
        };
        let rc = std::rc::Rc::new(result);
        self.prefix.insert(key, rc.clone());
        rc
    }
}

/// `f[h_1 + h_2 + ⋯ + h_n]` restricted to its degree-`n` component.
pub fn plethysm_with_h(f: &SymFunc, n: usize) -> SymFunc {
    let mut big_h = SymFunc::zero(Basis::P);
    for i in 1..=n {
        big_h = &big_h + &SymFunc::h(i);
    }
    plethysm(f, &big_h, n)
        .expect("h_1 + ... + h_n has no constant term")
        .component(n)
}
