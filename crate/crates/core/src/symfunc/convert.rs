//! Change of basis. Everything routes through the power-sum basis; the
//! Schur coordinates come from pairing against the character table and
//! the `h`/`m` coordinates from the Kostka matrix, which is unitriangular
//! in decreasing lexicographic order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::characters::{degree_data, DegreeData};
use super::partition::IntPartition;
use super::Basis;

pub(crate) type Terms = BTreeMap<IntPartition, BigRational>;

pub(crate) fn add_term(terms: &mut Terms, key: IntPartition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn h_rows(d: &DegreeData) -> &Vec<Vec<BigRational>> {
    d.h_in_p.get_or_init(|| {
        let n = d.partitions.len();
        d.partitions
            .iter()
            .map(|lambda| {
                // h_λ = ∏ h_{λ_i}, each h_k = Σ_{μ ⊢ k} p_μ / z_μ
                let mut acc: Terms = BTreeMap::new();
                acc.insert(IntPartition::empty(), BigRational::one());
                for &k in lambda.parts() {
                    let dk = degree_data(k);
                    let mut next = BTreeMap::new();
                    for (a, ca) in &acc {
                        for (mu, z) in dk.partitions.iter().zip(&dk.z) {
                            add_term(&mut next, a.union(mu), ca / BigRational::from(z.clone()));
                        }
                    }
                    acc = next;
                }
                let mut row = vec![BigRational::zero(); n];
                for (mu, c) in acc {
                    row[d.idx(&mu)] = c;
                }
                row
            })
            .collect()
    })
}

fn kostka(d: &DegreeData) -> &Vec<Vec<BigInt>> {
    d.kostka.get_or_init(|| {
        let h = h_rows(d);
        let k = d.partitions.len();
        (0..k)
            .map(|nu| {
                (0..k)
                    .map(|mu| {
                        let mut acc = BigRational::zero();
                        for rho in 0..k {
                            if !h[mu][rho].is_zero() {
                                acc += &h[mu][rho] * BigRational::from(BigInt::from(d.chars[nu][rho]));
                            }
                        }
                        debug_assert!(acc.is_integer());
                        acc.to_integer()
                    })
                    .collect()
            })
            .collect()
    })
}

/// `⟨h_μ, s_ν⟩`, the number of semistandard tableaux of shape ν and content μ.
pub fn kostka_number(nu: &IntPartition, mu: &IntPartition) -> BigInt {
    assert_eq!(nu.weight(), mu.weight());
    let d = degree_data(nu.weight());
    kostka(&d)[d.idx(nu)][d.idx(mu)].clone()
}

/// A single basis element written in the power-sum basis.
pub(crate) fn basis_element_in_p(basis: Basis, lambda: &IntPartition) -> Vec<(IntPartition, BigRational)> {
    let d = degree_data(lambda.weight());
    let li = d.idx(lambda);
    match basis {
        Basis::P => vec![(lambda.clone(), BigRational::one())],
        Basis::H => dense_to_sparse(&d, &h_rows(&d)[li]),
        Basis::E => {
            let row = &h_rows(&d)[li];
            d.partitions
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(mu, c)| (mu.clone(), if mu.sign() < 0 { -c } else { c.clone() }))
                .collect()
        }
        Basis::S => d
            .partitions
            .iter()
            .enumerate()
            .filter(|&(mi, _)| d.chars[li][mi] != 0)
            .map(|(mi, mu)| {
                (
                    mu.clone(),
                    BigRational::new(BigInt::from(d.chars[li][mi]), d.z[mi].clone()),
                )
            })
            .collect(),
        Basis::M => {
            // m_λ in Schur coordinates solves Σ_ν x_ν K[ν][μ] = δ_{λμ}
            let k = kostka(&d);
            let size = d.partitions.len();
            let mut x = vec![BigInt::zero(); size];
            for mu in 0..size {
                let mut v = if mu == li { BigInt::one() } else { BigInt::zero() };
                for nu in 0..mu {
                    if !x[nu].is_zero() && !k[nu][mu].is_zero() {
                        v -= &x[nu] * &k[nu][mu];
                    }
                }
                x[mu] = v;
            }
            let mut terms = BTreeMap::new();
            for (nu, xv) in x.iter().enumerate() {
                if xv.is_zero() {
                    continue;
                }
                for (mu, c) in basis_element_in_p(Basis::S, &d.partitions[nu]) {
                    add_term(&mut terms, mu, c * BigRational::from(xv.clone()));
                }
            }
            terms.into_iter().collect()
        }
    }
}

fn dense_to_sparse(d: &DegreeData, row: &[BigRational]) -> Vec<(IntPartition, BigRational)> {
    d.partitions
        .iter()
        .zip(row)
        .filter(|(_, c)| !c.is_zero())
        .map(|(mu, c)| (mu.clone(), c.clone()))
        .collect()
}

pub(crate) fn to_p(basis: Basis, terms: &Terms) -> Terms {
    if basis == Basis::P {
        return terms.clone();
    }
    let mut out = BTreeMap::new();
    for (lambda, c) in terms {
        for (mu, e) in basis_element_in_p(basis, lambda) {
            add_term(&mut out, mu, e * c);
        }
    }
    out
}

/// Splits power-sum terms by degree into dense coordinate vectors.
fn graded_dense(p_terms: &Terms) -> BTreeMap<usize, Vec<BigRational>> {
    let mut out: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for (mu, c) in p_terms {
        let n = mu.weight();
        let d = degree_data(n);
        let v = out
            .entry(n)
            .or_insert_with(|| vec![BigRational::zero(); d.partitions.len()]);
        v[d.idx(mu)] = c.clone();
    }
    out
}

fn schur_coords(d: &DegreeData, c: &[BigRational]) -> Vec<BigRational> {
    let k = d.partitions.len();
    (0..k)
        .map(|lambda| {
            let mut acc = BigRational::zero();
            for (mu, cm) in c.iter().enumerate() {
                let chi = d.chars[lambda][mu];
                if chi != 0 && !cm.is_zero() {
                    acc += cm * BigRational::from(BigInt::from(chi));
                }
            }
            acc
        })
        .collect()
}

fn h_coords(d: &DegreeData, c: &[BigRational]) -> Vec<BigRational> {
    let s = schur_coords(d, c);
    let k = kostka(d);
    let size = s.len();
    let mut out = vec![BigRational::zero(); size];
    for nu in (0..size).rev() {
        let mut v = s[nu].clone();
        for mu in nu + 1..size {
            if !k[nu][mu].is_zero() && !out[mu].is_zero() {
                v -= BigRational::from(k[nu][mu].clone()) * &out[mu];
            }
        }
        out[nu] = v;
    }
    out
}

fn m_coords(d: &DegreeData, c: &[BigRational]) -> Vec<BigRational> {
    let h = h_rows(d);
    (0..d.partitions.len())
        .map(|lambda| {
            let mut acc = BigRational::zero();
            for (mu, cm) in c.iter().enumerate() {
                if !cm.is_zero() && !h[lambda][mu].is_zero() {
                    acc += cm * &h[lambda][mu] * BigRational::from(d.z[mu].clone());
                }
            }
            acc
        })
        .collect()
}

pub(crate) fn sign_twist_p(terms: &Terms) -> Terms {
    terms
        .iter()
        .map(|(mu, c)| (mu.clone(), if mu.sign() < 0 { -c } else { c.clone() }))
        .collect()
}

pub(crate) fn from_p(p_terms: &Terms, target: Basis) -> Terms {
    if target == Basis::P {
        return p_terms.clone();
    }
    let twisted;
    let source = if target == Basis::E {
        twisted = sign_twist_p(p_terms);
        &twisted
    } else {
        p_terms
    };
    let mut out = BTreeMap::new();
    for (n, c) in graded_dense(source) {
        let d = degree_data(n);
        let coords = match target {
            Basis::S => schur_coords(&d, &c),
            Basis::H | Basis::E => h_coords(&d, &c),
            Basis::M => m_coords(&d, &c),
            Basis::P => unreachable!(),
        };
        for (lambda, v) in d.partitions.iter().zip(coords) {
            add_term(&mut out, lambda.clone(), v);
        }
    }
    out
}
