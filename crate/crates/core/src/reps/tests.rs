use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::poset::{stirling2, PosetView, RankSet, ViewSpec};
use crate::symfunc::{partitions_of, Basis, IntPartition, SymFunc};
use crate::topology::{homology, order_complex};

fn rs(s: &str) -> RankSet {
    s.parse().unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn is_permutation_character(f: &SymFunc, n: usize) -> bool {
    f.is_schur_positive() && ClassFunction::from_characteristic(f, n).is_nonnegative_integral()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

fn is_alternating(p: &[usize]) -> bool {
    p.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// No double descent in the subword of values `1..=k`, for every `k`.
fn is_simsun(p: &[usize]) -> bool {
    (1..=p.len()).all(|k| {
        let w: Vec<usize> = p.iter().copied().filter(|&v| v <= k).collect();
        !w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
    })
}

fn descents(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

#[test]
fn euler_numbers_count_alternating_permutations() {
    let first: Vec<BigInt> = (0..=6).map(euler_number).collect();
    assert_eq!(first, [1, 1, 1, 2, 5, 16, 61].map(int));
    for n in 0..=8 {
        let count = permutations(n).iter().filter(|p| is_alternating(p)).count();
        assert_eq!(euler_number(n), int(count as i64), "n={n}");
    }
}

#[test]
fn simsun_numbers_count_simsun_permutations() {
    assert_eq!(simsun(1, 4), int(1));
    assert_eq!(simsun(2, 4), int(1));
    assert_eq!(simsun(0, 4), int(0));
    assert_eq!(simsun(3, 4), int(0));
    for n in 3..=9 {
        let mut by_descents = vec![0i64; n];
        for p in permutations(n - 2).iter().filter(|p| is_simsun(p)) {
            by_descents[descents(p)] += 1;
        }
        for i in 1..=n / 2 {
            assert_eq!(simsun(i, n), int(by_descents[i - 1]), "a_{i}({n})");
        }
        let total: BigInt = simsun_row(n).iter().sum();
        assert_eq!(total, euler_number(n - 1), "n={n}");
    }
}

#[test]
fn even_block_numbers() {
    for n in 2..=10 {
        assert_eq!(bi(2, n), int(1));
    }
    assert_eq!(bi(3, 3), int(2));
    assert_eq!(bi(1, 4), int(0));
    assert_eq!(bi(5, 4), int(0));
    for n in 2..=12 {
        for i in 2..=n {
            assert!(bi(i, n) > int(0), "b_{i}({n}) = {}", bi(i, n));
        }
    }
    assert_eq!((2..=4).map(|i| bi(i, 4)).collect::<Vec<_>>(), [1, 12, 6].map(int));
    // the even-block module of Π_6 has dimension equal to the top Betti number
    let h = homology(&order_complex(&PosetView::new(6, ViewSpec::Even).unwrap()).unwrap());
    let dim = r_even_formula(3).dimension();
    assert_eq!(h.support(), vec![1]);
    assert_eq!(dim, BigRational::from_integer(h.betti(1).into()));
}

#[test]
fn even_block_module() {
    let r4 = r_even(2).unwrap();
    assert_eq!(r4, SymFunc::h(2).pow(2));
    assert_eq!(r4.convert(Basis::S), SymFunc::s(&[4]) + SymFunc::s(&[3, 1]) + SymFunc::s(&[2, 2]));
    for n in 2..=5 {
        let r = r_even(n).unwrap();
        let chi = ClassFunction::from_characteristic(&r, 2 * n);
        assert!(chi.is_supported_on_involutions(), "n={n}");
    }
    for n in 2..=6 {
        for k in 2..=n {
            assert!(e_k(k, n) >= int(0));
        }
        assert_eq!(r_even_e2_form(n), r_even_formula(n), "n={n}");
        // E_n(n) is the trivial multiplicity
        let triv = r_even_formula(n).inner_product(&SymFunc::h(2 * n));
        assert_eq!(triv, BigRational::from_integer(e_k(n, n)));
    }
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha(5, &RankSet::empty(), AlphaMethod::Chains).unwrap(), SymFunc::h(5));
    assert_eq!(alpha(5, &RankSet::empty(), AlphaMethod::Recurrence).unwrap(), SymFunc::h(5));
    let want = SymFunc::h_partition(&[2, 1, 1]) + SymFunc::h_partition(&[2, 2]);
    for method in [AlphaMethod::Chains, AlphaMethod::Recurrence] {
        let a = alpha(4, &rs("1,2"), method).unwrap();
        assert_eq!(a, want);
        assert_eq!(a.dimension(), BigRational::from_integer(18.into()));
    }
    let a = alpha(5, &rs("1-3"), AlphaMethod::Recurrence).unwrap();
    assert_eq!(a.inner_product(&SymFunc::h(5)), BigRational::from_integer(5.into()));
}

#[test]
fn methods_agree() {
    for n in 2..=6 {
        for s in RankSet::all_for(n) {
            let a1 = alpha(n, &s, AlphaMethod::Chains).unwrap();
            let a2 = alpha(n, &s, AlphaMethod::Recurrence).unwrap();
            assert_eq!(a1, a2, "alpha n={n} S={s}");
            assert!(is_permutation_character(&a1, n));
            let b1 = beta(n, &s, BetaMethod::InclusionExclusion).unwrap();
            let b2 = beta(n, &s, BetaMethod::Recurrence).unwrap();
            assert_eq!(b1, b2, "beta n={n} S={s}");
            assert!(b1.is_schur_positive());
        }
    }
}

#[test]
fn alpha_character_counts_chains() {
    for n in 3..=6 {
        for s in RankSet::all_for(n) {
            let chi = alpha_character(n, &s).unwrap();
            assert!(chi.is_nonnegative_integral());
            let view = PosetView::new(n, ViewSpec::Ranks(s.clone())).unwrap();
            let chains = crate::poset::maximal_chain_count(&view).unwrap();
            assert_eq!(chi.value(&IntPartition::column(n)), BigRational::from_integer(chains.into()));
        }
    }
}

#[test]
fn sum_rule() {
    for n in 2..=6 {
        for s in RankSet::all_for(n) {
            let mut acc = SymFunc::zero(Basis::S);
            for t in s.subsets() {
                acc = acc + beta(n, &t, BetaMethod::Recurrence).unwrap();
            }
            assert_eq!(acc, alpha(n, &s, AlphaMethod::Recurrence).unwrap(), "n={n} S={s}");
        }
    }
}

#[test]
fn betti_recurrence_through_dimensions() {
    let n = 6;
    let dim = |m: usize, t: &RankSet| beta(m, t, BetaMethod::Recurrence).unwrap().dimension();
    for s in RankSet::interval(1, 4).subsets().into_iter().filter(|s| !s.is_empty()) {
        let (s1, rest) = s.peel_first().unwrap();
        let lhs = dim(n, &s) + dim(n, &s.without_first());
        let rhs = dim(n - s1, &rest) * BigRational::from_integer(stirling2(n, n - s1).into());
        assert_eq!(lhs, rhs, "S={s}");
    }
}

#[test]
fn antichain_beta() {
    for n in 3..=7 {
        for s in 1..=n - 2 {
            let one = RankSet::new(vec![s]).unwrap();
            let a = alpha(n, &one, AlphaMethod::Recurrence).unwrap();
            let b = beta(n, &one, BetaMethod::Recurrence).unwrap();
            assert_eq!(b, a - SymFunc::h(n));
        }
    }
}

#[test]
fn topology_agrees_with_beta_dimension() {
    for n in 3..=5 {
        for s in RankSet::all_for(n) {
            let view = PosetView::new(n, ViewSpec::Ranks(s.clone())).unwrap();
            let h = homology(&order_complex(&view).unwrap());
            let d = s.len() as isize - 1;
            let dim = beta(n, &s, BetaMethod::Recurrence).unwrap().dimension();
            assert_eq!(BigRational::from_integer(h.betti(d).into()), dim, "n={n} S={s}");
        }
    }
}

#[test]
fn lie_modules() {
    assert_eq!(number_mobius(1), 1);
    assert_eq!(number_mobius(6), 1);
    assert_eq!(number_mobius(12), 0);
    assert_eq!(number_mobius(7), -1);
    assert_eq!(lie_top_homology(2), SymFunc::h(2));
    for n in 2..=7 {
        let pi = lie_top_homology(n);
        assert!(pi.is_schur_positive());
        assert_eq!(pi.dimension(), BigRational::from_integer(factorial(n - 1)));
        // restriction to S_{n-1} is the regular representation
        assert_eq!(pi.d_dp1(), SymFunc::h(1).pow(n - 1), "n={n}");
    }
    for n in 3..=6 {
        let b = beta(n, &RankSet::interval(1, n - 2), BetaMethod::Recurrence).unwrap();
        assert_eq!(b, lie_top_homology(n));
    }
}

#[test]
fn whitehouse_modules() {
    assert!(whitehouse(5, 1).is_err());
    assert!(whitehouse(5, 5).is_err());
    for n in 3..=7 {
        for k in 2..n {
            let w = whitehouse(n, k).unwrap();
            assert!(w.is_schur_positive(), "n={n} k={k}");
            // dim π_k h_1^{n-k} = (k-1)! n! / k!
            let want = factorial(k - 1) * factorial(n) / factorial(k) - factorial(n - 1);
            assert_eq!(w.dimension(), BigRational::from_integer(want));
            let restricted = lie_top_homology(k)
                .multiply(&SymFunc::h(1).pow(n - k - 1))
                .scale(&BigRational::from_integer((n - k).into()));
            assert_eq!(w.d_dp1(), restricted, "n={n} k={k}");
        }
        assert_eq!(whitehouse(n, n - 1).unwrap().d_dp1(), lie_top_homology(n - 1));
    }
}

#[test]
fn multiplicity_examples() {
    let m = multiplicities(7, &rs("2,4,5")).unwrap();
    assert_eq!((m.b.clone(), m.b_prime.clone()), (int(5), int(23)));
    let e = multiplicities(6, &RankSet::empty()).unwrap();
    assert_eq!((e.a, e.b), (int(1), int(1)));
    for i in 1..=4 {
        let m = multiplicities(6, &RankSet::interval(1, i)).unwrap();
        assert_eq!(m.b, int(0));
    }
    let json = serde_json::to_value(&m).unwrap();
    assert_eq!(json["b_prime"], serde_json::json!(23));
}

#[test]
fn euler_refinements() {
    for n in 3..=7 {
        let (mut sb, mut sb1) = (int(0), int(0));
        for s in RankSet::all_for(n) {
            let m = multiplicities(n, &s).unwrap();
            sb += m.b;
            sb1 += m.b_prime;
        }
        assert_eq!(sb, euler_number(n - 1), "n={n}");
        assert_eq!(sb1, euler_number(n), "n={n}");
    }
}

#[test]
fn orbit_decomposition() {
    for n in 4..=7 {
        let mut want = SymFunc::zero(Basis::H);
        for i in 1..=n / 2 {
            let mut parts = vec![2; i];
            parts.extend(std::iter::repeat(1).take(n - 2 * i));
            want = want + SymFunc::h_partition(&parts).scale(&BigRational::from_integer(simsun(i, n)));
        }
        let full = RankSet::interval(1, n - 2);
        assert_eq!(alpha(n, &full, AlphaMethod::Recurrence).unwrap(), want, "n={n}");
        if n <= 6 {
            assert!(alpha_character(n, &full).unwrap().is_supported_on_involutions());
        }
    }
}

#[test]
fn bounds_and_errors() {
    assert!(matches!(
        alpha(9, &rs("1"), AlphaMethod::Chains),
        Err(RepsError::OutOfBounds { .. })
    ));
    assert!(matches!(
        beta(15, &rs("1"), BetaMethod::Recurrence),
        Err(RepsError::OutOfBounds { .. })
    ));
    assert!(alpha(4, &rs("3"), AlphaMethod::Recurrence).is_err());
    assert!(alpha(0, &RankSet::empty(), AlphaMethod::Recurrence).is_err());
    assert!(r_even(1).is_err());
    assert!(r_even(8).is_err());
    assert_eq!("ie".parse::<BetaMethod>().unwrap(), BetaMethod::InclusionExclusion);
    assert!("x".parse::<AlphaMethod>().is_err());
}

#[test]
fn stability_examples() {
    let r = stability_report(&rs("1"), 0, 10).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let a = &r.results["a"]["values"];
    assert!(a.as_array().unwrap().iter().all(|v| v[1] == 1));

    let r = stability_report(&rs("2"), 0, 10).unwrap();
    assert!(r.passed());
    assert_eq!(r.results["b"]["onset"].as_u64().unwrap() <= 4, true);

    let r = stability_report(&rs("1,2"), 2, 11).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(stability_report(&RankSet::empty(), 0, 8).is_err());
    assert!(stability_report(&rs("3"), 0, 4).is_err());
}

#[test]
fn check_suites() {
    for suite in [Suite::EvenBound, Suite::HhNonvanishing, Suite::HhBPrime] {
        let r = conjecture_checks(suite, 6).unwrap();
        assert!(r.passed(), "{suite}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(!r.assertions.is_empty());
    }
    // [1, r] \ {k} with r odd and k = (r+1)/2 keeps b != 0; everything else vanishes
    let r = conjecture_checks(Suite::HhVanishing, 7).unwrap();
    for f in r.failures() {
        assert_eq!(f.name, "vanishing:interval-minus-point");
        assert!(f.witness["S"] == serde_json::json!([1, 3]) || f.witness["S"] == serde_json::json!([1, 2, 4, 5]));
    }
    assert!(r.failures().count() > 0);
    assert!(r.observations.iter().all(|o| o.passed));
    let r = conjecture_checks(Suite::EvenTopHPositive, 3).unwrap();
    assert!(r.assertions.is_empty());
    assert_eq!(r.observations.len(), 3);
    assert_eq!("conj-3.9".parse::<Suite>().unwrap(), Suite::EvenBound);
}

#[test]
fn subposet_reports() {
    let r = subposet_homology_report(Family::Qnk, 6, 3).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.assertions.len(), 3);
    let r = subposet_homology_report(Family::Le, 6, 3).unwrap();
    assert!(r.passed());
    let r = subposet_homology_report(Family::Ne, 5, 3).unwrap();
    assert!(r.passed());
    let r = subposet_homology_report(Family::Le, 7, 2).unwrap();
    assert!(r.assertions.is_empty());
    assert_eq!(r.results["homology"]["torsion"]["1"], serde_json::json!([3]));
    assert!(r.results["character"].is_null());
}

#[test]
fn class_function_roundtrip() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let s = SymFunc::basis_element(Basis::S, lambda.clone());
            let chi = ClassFunction::from_characteristic(&s, n);
            assert_eq!(chi.frobenius(), s);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn prop_methods_agree_at_seven(mask in 0u32..32) {
        let s = RankSet::new((1..=5).filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap();
        let a1 = alpha(7, &s, AlphaMethod::Chains).unwrap();
        let a2 = alpha(7, &s, AlphaMethod::Recurrence).unwrap();
        prop_assert_eq!(a1, a2);
        let b1 = beta(7, &s, BetaMethod::InclusionExclusion).unwrap();
        let b2 = beta(7, &s, BetaMethod::Recurrence).unwrap();
        prop_assert_eq!(b1, b2);
    }

    #[test]
    fn prop_beta_positive(n in 3usize..=10, mask in 0u32..256) {
        let s = RankSet::new((1..=n - 2).filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap();
        let b = beta(n, &s, BetaMethod::Recurrence).unwrap();
        prop_assert!(b.is_schur_positive());
        let a = alpha(n, &s, AlphaMethod::Recurrence).unwrap();
        prop_assert!(a.is_schur_positive());
    }
}
