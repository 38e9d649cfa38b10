use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::poset::{RankSet, ViewSpec};
use crate::symfunc::{partitions_of, IntPartition, SymFunc};

fn view(n: usize, s: &str) -> PosetView {
    PosetView::new(n, s.parse().unwrap()).unwrap()
}

fn hom(n: usize, s: &str) -> HomologyResult {
    homology(&order_complex(&view(n, s)).unwrap())
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Views small enough for exhaustive checks, with a few from each family.
fn sample_specs(n: usize) -> Vec<ViewSpec> {
    let mut specs = vec![ViewSpec::Full];
    specs.extend(RankSet::all_for(n).into_iter().map(ViewSpec::Ranks));
    for k in 2..n {
        specs.push(ViewSpec::Qnk(k));
        specs.push(ViewSpec::Pnk(k));
        specs.push(ViewSpec::BlockSizeAtMost(k));
    }
    for k in 1..n {
        specs.push(ViewSpec::BlockSizeNot(k));
    }
    if n % 2 == 0 {
        specs.push(ViewSpec::Even);
        specs.extend((1..n / 2).map(ViewSpec::EvenTop));
    }
    specs
}

#[test]
fn small_complexes() {
    let cc = order_complex(&view(3, "full")).unwrap();
    assert_eq!(cc.f_vector(), vec![1, 3]);
    assert_eq!(homology(&cc).betti(0), 2);

    let cc = order_complex(&view(4, "full")).unwrap();
    assert_eq!(cc.f_vector(), vec![1, 13, 18]);
    let h = homology(&cc);
    assert_eq!(h.support(), vec![1]);
    assert_eq!(h.betti(1), 6);

    let cc = order_complex(&view(5, "ranks:")).unwrap();
    assert_eq!(cc.f_vector(), vec![1]);
    assert_eq!(cc.dimension(), -1);
    let h = homology(&cc);
    assert_eq!(h.support(), vec![-1]);
    assert_eq!(mobius_number(&view(5, "ranks:")).unwrap(), BigInt::from(-1));
}

#[test]
fn matching_complex_has_three_torsion() {
    let h = hom(7, "le:k=2");
    assert_eq!(h.torsion(1), &[BigInt::from(3)]);
    assert_eq!(h.betti(1), 0);
    assert_eq!(h.betti(2), 20);
    assert!(!h.is_free());
    // torsion is invisible over the rationals
    let cc = order_complex(&view(7, "le:k=2")).unwrap();
    assert_eq!(rational_betti(&cc), h.betti);
}

#[test]
fn mobius_of_full_lattice() {
    for n in 2..=7 {
        let want = if n % 2 == 1 { factorial(n - 1) } else { -factorial(n - 1) };
        assert_eq!(mobius_number(&view(n as usize, "full")).unwrap(), BigInt::from(want));
    }
}

#[test]
fn euler_characteristic_matches_mobius() {
    for n in 3..=6 {
        for spec in sample_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            let cc = order_complex(&v).unwrap();
            let h = homology(&cc);
            let mu = mobius_number(&v).unwrap();
            assert_eq!(mu, BigInt::from(h.euler_characteristic()), "{spec} n={n}");
            assert_eq!(mu, BigInt::from(cc.reduced_euler_characteristic()));
            assert_eq!(count_chains(&v).unwrap() as usize, cc.f_vector().iter().sum::<usize>());
        }
    }
}

#[test]
fn rational_ranks_agree_with_smith() {
    for n in 3..=6 {
        for spec in sample_specs(n) {
            let cc = order_complex(&PosetView::new(n, spec.clone()).unwrap()).unwrap();
            assert_eq!(rational_betti(&cc), homology(&cc).betti, "{spec} n={n}");
        }
    }
    for s in ["ranks:2,4", "le:k=3", "le:k=2"] {
        let cc = order_complex(&view(7, s)).unwrap();
        assert_eq!(rational_betti(&cc), homology(&cc).betti, "{s}");
    }
}

#[test]
fn rank_selections_are_cohen_macaulay() {
    for n in 3..=6 {
        for s in RankSet::all_for(n) {
            let h = homology(&order_complex(&PosetView::new(n, ViewSpec::Ranks(s.clone())).unwrap()).unwrap());
            assert!(h.is_free());
            assert_eq!(h.support(), vec![s.len() as isize - 1], "{s} n={n}");
        }
    }
    for s in ["ranks:1,3,5", "ranks:2,3"] {
        let h = hom(7, s);
        assert_eq!(h.support().len(), 1);
    }
}

#[test]
fn full_lattice_top_homology() {
    for n in 3..=7 {
        let h = hom(n, "full");
        assert_eq!(h.support(), vec![n as isize - 3]);
        assert_eq!(h.betti(n as isize - 3) as i64, factorial(n as i64 - 1));
    }
}

#[test]
fn lefschetz_by_fixed_simplices() {
    for n in 3..=5 {
        for spec in sample_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            let cc = order_complex(&v).unwrap();
            let lambda = lefschetz_class_function(&v).unwrap();
            for ct in partitions_of(n) {
                let g = Permutation::from_cycle_type(&ct);
                let fixed = v.fixed_mask(&g);
                let mut want = 0i64;
                for d in -1..=cc.dimension() {
                    let count = cc
                        .simplices(d)
                        .iter()
                        .filter(|s| s.iter().all(|&i| fixed[i as usize]))
                        .count() as i64;
                    want += if d.rem_euclid(2) == 0 { count } else { -count };
                }
                assert_eq!(lambda.value(&ct), rat(want), "{spec} {ct}");
            }
            assert_eq!(lambda.degree(), rat(cc.reduced_euler_characteristic()));
        }
    }
}

/// `sgn ⊗ (1/n) Σ_{d|n} μ(d) p_d^{n/d}`, written out for n = 4.
fn sign_twisted_lie_4() -> SymFunc {
    let p1 = SymFunc::p(1).pow(4);
    let p2 = SymFunc::p(2).pow(2);
    let lie = (p1 - p2).scale(&BigRational::new(1.into(), 4.into()));
    lie.sign_twist()
}

#[test]
fn pi4_lefschetz_is_twisted_lie() {
    let lambda = lefschetz_class_function(&view(4, "full")).unwrap();
    let neg = lambda.scale(&rat(-1)).frobenius();
    assert_eq!(neg, sign_twisted_lie_4());
}

#[test]
fn antichain_lefschetz() {
    let v = view(5, "ranks:2");
    let lambda = lefschetz_class_function(&v).unwrap();
    for ct in partitions_of(5) {
        let g = Permutation::from_cycle_type(&ct);
        let fixed = v.fixed_mask(&g).iter().filter(|&&b| b).count() as i64;
        assert_eq!(lambda.value(&ct), rat(fixed - 1));
    }
}

#[test]
fn concentrated_characters() {
    let (d, chi) = concentrated_character(&view(6, "qnk:k=3")).unwrap();
    assert_eq!(d, 2);
    assert_eq!(chi.degree(), rat(hom(6, "qnk:k=3").betti(2) as i64));
    assert!(chi.frobenius().is_schur_positive());

    let (d, chi) = concentrated_character(&view(5, "full")).unwrap();
    assert_eq!((d, chi.degree()), (2, rat(24)));

    let (d, chi) = concentrated_character(&view(5, "ranks:1")).unwrap();
    assert_eq!((d, chi.degree()), (0, rat(9)));

    let (d, chi) = concentrated_character(&view(4, "ranks:")).unwrap();
    assert_eq!(d, -1);
    assert_eq!(chi.frobenius(), SymFunc::h(4));
}

#[test]
fn concentration_failures_are_loud() {
    assert!(matches!(
        concentrated_character(&view(7, "le:k=2")),
        Err(TopologyError::NotConcentrated { .. } | TopologyError::Torsion { .. })
    ));
    // Π_{2k+1,≠k} carries homology only in degrees 2k-4 and 2k-3
    let h = hom(7, "ne:k=3");
    assert!(h.support().iter().all(|&d| d == 2 || d == 3));
}

#[test]
fn json_shape() {
    let h = hom(4, "full");
    let text = serde_json::to_string(&h).unwrap();
    assert_eq!(text, r#"{"view":"full,n=4","betti":{"0":0,"1":6},"torsion":{}}"#);
    let t = serde_json::to_value(hom(7, "le:k=2")).unwrap();
    assert_eq!(t["torsion"]["1"], serde_json::json!([3]));
    let e = serde_json::to_value(hom(4, "ranks:")).unwrap();
    assert_eq!(e["betti"]["-1"], serde_json::json!(1));
}

#[test]
fn triplet_export() {
    let cc = order_complex(&view(3, "full")).unwrap();
    let text = cc.to_triplets();
    assert_eq!(text, "# boundary d=0 rows=1 cols=3 nnz=3\n0 0 1\n0 1 1\n0 2 1\n");
    let cc = order_complex(&view(4, "full")).unwrap();
    let text = cc.to_triplets();
    assert!(text.contains("# boundary d=1 rows=13 cols=18 nnz=36"));
}

#[test]
fn lefschetz_requires_stability_and_bounds() {
    let big = view(10, "ranks:1");
    assert!(order_complex(&big).is_err());
    assert!(mobius_number(&big).is_err());
}

#[test]
fn budget_is_enforced() {
    let v = view(9, "full");
    assert!(matches!(order_complex(&v), Err(TopologyError::TooManySimplices(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn prop_boundary_squares_to_zero(n in 3usize..=6, pick in 0usize..1000) {
        let specs = sample_specs(n);
        let spec = specs[pick % specs.len()].clone();
        let cc = order_complex(&PosetView::new(n, spec).unwrap()).unwrap();
        for d in 1..=cc.dimension() {
            let p = cc.boundary(d - 1).unwrap().checked_mul(cc.boundary(d).unwrap()).unwrap();
            prop_assert_eq!(p.nnz(), 0);
        }
    }

    #[test]
    fn prop_lefschetz_identity_is_euler(n in 3usize..=6, pick in 0usize..1000) {
        let specs = sample_specs(n);
        let spec = specs[pick % specs.len()].clone();
        let v = PosetView::new(n, spec).unwrap();
        let lambda = lefschetz_class_function(&v).unwrap();
        let mu = mobius_number(&v).unwrap();
        prop_assert_eq!(lambda.value(&IntPartition::column(n)), BigRational::from_integer(mu));
    }
}
