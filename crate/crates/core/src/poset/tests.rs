use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::symfunc::{partitions_of, IntPartition};

fn view(n: usize, s: &str) -> PosetView {
    PosetView::new(n, s.parse().unwrap()).unwrap()
}

/// Every set partition of `[n]`, built by inserting elements into block lists.
fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for e in 1..=n {
        let mut next = Vec::new();
        for blocks in acc {
            for b in 0..blocks.len() {
                let mut c = blocks.clone();
                c[b].push(e);
                next.push(c);
            }
            let mut c = blocks;
            c.push(vec![e]);
            next.push(c);
        }
        acc = next;
    }
    acc.into_iter()
        .map(|b| SetPartition::from_blocks(n, &b).unwrap())
        .collect()
}

fn naive_leq(x: &SetPartition, y: &SetPartition) -> bool {
    let yb = y.blocks();
    x.blocks().iter().all(|b| yb.iter().any(|c| b.iter().all(|e| c.contains(e))))
}

/// Maximal chains by brute force over a naive comparability relation.
fn naive_maximal_chains(elems: &[SetPartition]) -> usize {
    let lt = |a: &SetPartition, b: &SetPartition| a != b && naive_leq(a, b);
    let m = elems.len();
    let mut count = 0;
    let mut stack: Vec<Vec<usize>> = (0..m)
        .filter(|&i| !elems.iter().any(|y| lt(y, &elems[i])))
        .map(|i| vec![i])
        .collect();
    while let Some(c) = stack.pop() {
        let last = &elems[*c.last().unwrap()];
        let ups: Vec<usize> = (0..m).filter(|&j| lt(last, &elems[j])).collect();
        let covers: Vec<usize> = ups
            .iter()
            .copied()
            .filter(|&j| !ups.iter().any(|&k| lt(&elems[k], &elems[j])))
            .collect();
        if covers.is_empty() {
            count += 1;
        }
        for j in covers {
            let mut d = c.clone();
            d.push(j);
            stack.push(d);
        }
    }
    if m == 0 {
        1
    } else {
        count
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn all_specs(n: usize) -> Vec<ViewSpec> {
    let mut specs = vec![ViewSpec::Full];
    for s in RankSet::all_for(n) {
        specs.push(ViewSpec::Ranks(s));
    }
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
        for k in 1..n / 2 {
            specs.push(ViewSpec::EvenTop(k));
        }
    }
    specs
}

#[test]
fn stirling_numbers() {
    assert_eq!(stirling2(4, 2), BigUint::from(7u32));
    for n in 0..10 {
        assert_eq!(stirling2(n, n), BigUint::from(1u32));
        if n > 0 {
            assert_eq!(stirling2(n, 1), BigUint::from(1u32));
        }
    }
    for n in 1..=7 {
        let all = all_set_partitions(n);
        for k in 1..=n {
            let c = all.iter().filter(|x| x.num_blocks() == k).count();
            assert_eq!(stirling2(n, k), BigUint::from(c));
        }
    }
}

#[test]
fn full_lattice_rank_sizes() {
    assert_eq!(view(4, "full").rank_sizes(), vec![(1, 6), (2, 7)]);
    let v = view(5, "ranks:1,3");
    assert_eq!(v.rank_sizes(), vec![(1, 10), (3, 15)]);
}

#[test]
fn q43_keeps_only_the_two_two_blocks() {
    let v = view(4, "qnk:k=3");
    assert_eq!(v.rank_sizes(), vec![(1, 6), (2, 3)]);
    assert_eq!(v.type_counts(2), vec![(IntPartition::new(vec![2, 2]), 3)]);
}

#[test]
fn views_match_filtered_enumeration() {
    for n in 2..=6 {
        let all = all_set_partitions(n);
        for spec in all_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            let got: HashSet<_> = v.elements().iter().cloned().collect();
            let want: HashSet<_> = all
                .iter()
                .filter(|x| x.rank() >= 1 && x.rank() + 2 <= n && spec.admits(x))
                .cloned()
                .collect();
            assert_eq!(got, want, "{spec} n={n}");
            assert_eq!(got.len(), v.len());
            for (r, xs) in v.by_rank() {
                assert!(xs.iter().all(|x| x.rank() == r));
            }
        }
    }
}

#[test]
fn family_definitions() {
    let n = 6;
    let all = all_set_partitions(n);
    let proper: Vec<_> = all.iter().filter(|x| x.rank() >= 1 && x.rank() + 2 <= n).collect();
    let modular = |x: &SetPartition| {
        let big: Vec<_> = x.block_sizes().into_iter().filter(|&s| s > 1).collect();
        if big.len() == 1 {
            Some(big[0])
        } else {
            None
        }
    };
    for k in 2..n {
        let q = view(n, &format!("qnk:k={k}"));
        let want = proper.iter().filter(|x| modular(x) != Some(k)).count();
        assert_eq!(q.len(), want);
        // P_n^k is the intersection of Q_n^2 .. Q_n^k
        let p = view(n, &format!("pnk:k={k}"));
        let want: HashSet<_> = proper
            .iter()
            .filter(|x| (2..=k).all(|i| modular(x) != Some(i)))
            .map(|x| (*x).clone())
            .collect();
        assert_eq!(p.elements().iter().cloned().collect::<HashSet<_>>(), want);
    }
    let e = view(6, "even");
    assert_eq!(e.rank_sizes().iter().map(|r| r.0).collect::<Vec<_>>(), vec![2, 4]);
    let top = view(8, "even-top:k=2");
    assert_eq!(top.rank_sizes().iter().map(|r| r.0).collect::<Vec<_>>(), vec![4, 6]);
    let top1 = view(8, "even-top:k=1");
    assert_eq!(top1.rank_sizes(), vec![(6, 127)]);
}

#[test]
fn q_n_minus_one_is_block_size_bound() {
    for n in 4..=7 {
        let q = view(n, &format!("qnk:k={}", n - 1));
        let le = view(n, &format!("le:k={}", n - 2));
        assert_eq!(q.elements(), le.elements(), "n={n}");
    }
}

#[test]
fn rank_selected_sizes_are_stirling() {
    for n in 3..=8 {
        for s in RankSet::all_for(n) {
            let v = PosetView::new(n, ViewSpec::Ranks(s.clone())).unwrap();
            let sizes = v.rank_sizes();
            assert_eq!(sizes.len(), s.len());
            for (r, c) in sizes {
                assert!(s.contains(r));
                assert_eq!(stirling2(n, n - r), BigUint::from(c));
            }
        }
    }
}

#[test]
fn invalid_views() {
    for (n, s) in [
        (5, "ranks:4"),
        (5, "qnk:k=5"),
        (5, "qnk:k=1"),
        (5, "ne:k=5"),
        (5, "even"),
        (6, "even-top:k=3"),
        (6, "even-top:k=0"),
        (1, "full"),
        (11, "full"),
    ] {
        assert!(PosetView::new(n, s.parse().unwrap()).is_err(), "{s} n={n}");
    }
    for s in ["", "qnk", "qnk:3", "ranks:a", "lol:k=2"] {
        assert!(s.parse::<ViewSpec>().is_err(), "{s:?}");
    }
}

#[test]
fn view_strings_round_trip() {
    for n in [5, 6] {
        for spec in all_specs(n) {
            assert_eq!(spec.to_string().parse::<ViewSpec>().unwrap(), spec);
        }
    }
    assert_eq!(ViewSpec::Ranks(RankSet::empty()).to_string(), "ranks:");
}

#[test]
fn leq_is_a_partial_order_on_pi4() {
    let all = all_set_partitions(4);
    assert_eq!(all.len(), 15);
    for x in &all {
        assert!(SetPartition::bottom(4).leq(x).unwrap());
        assert!(x.leq(&SetPartition::top(4)).unwrap());
        assert!(x.leq(x).unwrap());
        for y in &all {
            assert_eq!(x.leq(y).unwrap(), naive_leq(x, y));
            if x != y && x.leq(y).unwrap() {
                assert!(!y.leq(x).unwrap());
            }
            for z in &all {
                if x.leq(y).unwrap() && y.leq(z).unwrap() {
                    assert!(x.leq(z).unwrap());
                }
            }
        }
    }
}

#[test]
fn orbits_are_types() {
    let all = all_set_partitions(5);
    let perms: Vec<Permutation> = permutations(5);
    for x in &all {
        let orbit: HashSet<_> = perms.iter().map(|g| x.act(g)).collect();
        let same_type: HashSet<_> = all.iter().filter(|y| y.type_of() == x.type_of()).cloned().collect();
        assert_eq!(orbit, same_type);
        let t = x.type_of();
        let mut denom: u64 = t.parts().iter().map(|&s| factorial(s as u64)).product();
        for s in 1..=5 {
            denom *= factorial(t.multiplicity(s) as u64);
        }
        assert_eq!(orbit.len() as u64, factorial(5) / denom);
    }
}

fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation::from_one_line(cur).unwrap());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[test]
fn action_is_an_order_isomorphism() {
    let all = all_set_partitions(5);
    let gs = [
        Permutation::from_one_line(&[2, 3, 1, 5, 4]).unwrap(),
        Permutation::transposition(5, 1, 4),
        Permutation::long_cycle(5),
    ];
    for g in &gs {
        for x in &all {
            assert_eq!(x.act(g).type_of(), x.type_of());
            for y in &all {
                assert_eq!(x.leq(y).unwrap(), x.act(g).leq(&y.act(g)).unwrap());
            }
        }
    }
}

#[test]
fn views_are_stable() {
    for n in 3..=6 {
        for spec in all_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            assert!(v.is_stable_under_symmetric_group(), "{spec}");
        }
    }
}

#[test]
fn maximal_chain_examples() {
    let v = view(4, "full");
    let chains = maximal_chains(&v).unwrap();
    assert_eq!(chains.len(), 18);
    for c in &chains {
        let xs = c.elements(&v);
        assert_eq!(xs.len(), 2);
        assert!(xs[0].leq(xs[1]).unwrap());
    }
    let empty = view(5, "ranks:");
    let chains = maximal_chains(&empty).unwrap();
    assert_eq!(chains.len(), 1);
    assert!(chains[0].is_empty());
    assert_eq!(maximal_chains(&view(5, "ranks:2")).unwrap().len(), 25);
}

#[test]
fn full_chain_count_formula() {
    for n in 2..=7u64 {
        let v = view(n as usize, "full");
        let want = factorial(n) * factorial(n - 1) >> (n - 1);
        assert_eq!(maximal_chain_count(&v).unwrap(), want);
        if n <= 6 {
            assert_eq!(maximal_chains(&v).unwrap().len() as u64, want);
        }
    }
}

#[test]
fn chains_agree_with_brute_force() {
    for n in 3..=5 {
        for spec in all_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            let naive = naive_maximal_chains(v.elements());
            assert_eq!(maximal_chains(&v).unwrap().len(), naive, "{spec} n={n}");
        }
    }
}

#[test]
fn rank_selected_chains_hit_every_rank() {
    let v = view(6, "ranks:1,3,4");
    for c in maximal_chains(&v).unwrap() {
        let ranks: Vec<usize> = c.elements(&v).iter().map(|x| x.rank()).collect();
        assert_eq!(ranks, vec![1, 3, 4]);
    }
}

#[test]
fn fixed_chain_examples() {
    let v = view(4, "full");
    assert_eq!(fixed_chain_count(&v, &IntPartition::column(4)).unwrap(), 18);
    // the 4-cycle fixes no atom of Π_4
    assert_eq!(fixed_chain_count(&v, &IntPartition::row(4)).unwrap(), 0);
    // (12) fixes the atoms 12|3|4 and 1|2|34
    let atoms = view(4, "ranks:1");
    assert_eq!(fixed_chain_count(&atoms, &IntPartition::new(vec![2, 1, 1])).unwrap(), 2);
    assert!(fixed_chain_count(&v, &IntPartition::row(5)).is_err());
}

#[test]
fn fixed_chains_by_enumeration() {
    for n in 3..=6 {
        for spec in all_specs(n) {
            let v = PosetView::new(n, spec.clone()).unwrap();
            let chains = maximal_chains(&v).unwrap();
            for ct in partitions_of(n) {
                let g = Permutation::from_cycle_type(&ct);
                let want = chains
                    .iter()
                    .filter(|c| c.elements(&v).iter().all(|x| x.is_fixed_by(&g)))
                    .count() as u64;
                assert_eq!(fixed_chain_count(&v, &ct).unwrap(), want, "{spec} {ct:?}");
            }
            assert_eq!(
                fixed_chain_count(&v, &IntPartition::column(n)).unwrap(),
                chains.len() as u64
            );
        }
    }
}

#[test]
fn fixed_chain_count_is_conjugation_invariant() {
    let v = view(5, "full");
    let chains = maximal_chains(&v).unwrap();
    let count = |g: &Permutation| {
        chains
            .iter()
            .filter(|c| c.elements(&v).iter().all(|x| x.is_fixed_by(g)))
            .count() as u64
    };
    for g in permutations(5) {
        assert_eq!(count(&g), fixed_chain_count(&v, &g.cycle_type()).unwrap());
    }
}

#[test]
fn relation_bounds() {
    let v = view(10, "ranks:1");
    assert_eq!(v.len(), 45);
    assert!(maximal_chain_count(&v).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_action_preserves_order(
        n in 3usize..=7,
        seed_x in proptest::collection::vec(0usize..7, 7),
        seed_y in proptest::collection::vec(0usize..7, 7),
        shuffle in Just(()).prop_perturb(|_, mut rng| {
            let mut v: Vec<usize> = (1..=7).collect();
            for i in (1..v.len()).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                v.swap(i, j);
            }
            v
        }),
    ) {
        let x = SetPartition::from_labels(&seed_x[..n]);
        let y = SetPartition::from_labels(&seed_y[..n]);
        let images: Vec<usize> = shuffle.into_iter().filter(|&v| v <= n).collect();
        let g = Permutation::from_one_line(&images).unwrap();
        prop_assert_eq!(x.leq(&y).unwrap(), x.act(&g).leq(&y.act(&g)).unwrap());
        prop_assert_eq!(x.act(&g).type_of(), x.type_of());
        let meet_like = SetPartition::from_labels(
            &seed_x[..n].iter().zip(&seed_y[..n]).map(|(a, b)| (*a, *b)).collect::<Vec<_>>(),
        );
        prop_assert!(meet_like.leq(&x).unwrap() && meet_like.leq(&y).unwrap());
    }

    #[test]
    fn prop_text_round_trip(n in 1usize..=12, seed in proptest::collection::vec(0usize..12, 12)) {
        let x = SetPartition::from_labels(&seed[..n]);
        prop_assert_eq!(x.to_string().parse::<SetPartition>().unwrap(), x);
    }
}
