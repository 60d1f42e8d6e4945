use proptest::prelude::*;

use hecke_centraliser::partitions::{
    capital_n, coarsening_closure, dominance_leq, dominance_upward_closure, partitions_of,
    spec_dimension, standard_tableaux, Partition, PartitionSet,
};
use hecke_centraliser::perm::factorial;

fn single(p: &Partition) -> PartitionSet {
    PartitionSet::new(p.degree(), [p.clone()]).unwrap()
}

#[test]
fn coarsening_implies_dominance() {
    for n in 1..=6 {
        for lambda in partitions_of(n).iter() {
            for mu in coarsening_closure(&single(lambda)).iter() {
                assert!(dominance_leq(lambda, mu).unwrap(), "{lambda} vs {mu}");
            }
        }
    }
}

#[test]
fn hook_closures() {
    for n in 1..=7 {
        for a in 1..=n {
            let hook = Partition::hook(a, n - a);
            let expected = PartitionSet::new(
                n,
                partitions_of(n).iter().filter(|l| l.first() >= a).cloned(),
            )
            .unwrap();
            assert_eq!(coarsening_closure(&single(&hook)), expected, "hook {hook}");
        }
    }
}

#[test]
fn transpose_reverses_dominance() {
    for n in 1..=6 {
        let all = partitions_of(n).to_vec();
        for l in &all {
            for m in &all {
                assert_eq!(
                    dominance_leq(l, m).unwrap(),
                    dominance_leq(&m.transpose(), &l.transpose()).unwrap()
                );
            }
        }
    }
}

#[test]
fn specht_dimensions_square_sum() {
    for n in 1..=6 {
        let total: usize = partitions_of(n)
            .iter()
            .map(|l| spec_dimension(l).pow(2))
            .sum();
        assert_eq!(total, factorial(n));
        for l in partitions_of(n).iter() {
            assert_eq!(standard_tableaux(l).len(), spec_dimension(l));
        }
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(partitions_of(4).len(), 5);
    assert_eq!(partitions_of(6).len(), 11);
    assert_eq!(spec_dimension(&Partition::new(vec![3, 2]).unwrap()), 5);
    assert_eq!(capital_n(4, 3).unwrap(), 10);
    assert_eq!(capital_n(4, 2).unwrap(), 23);
    assert_eq!(capital_n(3, 2).unwrap(), 5);
    assert_eq!(capital_n(3, 1).unwrap(), 6);
    let m22 = single(&Partition::new(vec![2, 2]).unwrap());
    assert_eq!(coarsening_closure(&m22).to_vec().len(), 2);
    assert!(!coarsening_closure(&m22).is_cosaturated());
}

fn subset_of(n: usize) -> impl Strategy<Value = PartitionSet> {
    let all = partitions_of(n).to_vec();
    prop::collection::vec(any::<bool>(), all.len()).prop_map(move |mask| {
        PartitionSet::new(
            n,
            all.iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(p, _)| p.clone()),
        )
        .unwrap()
    })
}

fn pair_of_subsets() -> impl Strategy<Value = (PartitionSet, PartitionSet)> {
    (2usize..=6).prop_flat_map(|n| (subset_of(n), subset_of(n)))
}

proptest! {
    #[test]
    fn closures_are_idempotent_and_monotone((a, b) in pair_of_subsets()) {
        for close in [coarsening_closure as fn(&PartitionSet) -> PartitionSet, dominance_upward_closure] {
            let ca = close(&a);
            prop_assert_eq!(close(&ca), ca.clone());
            prop_assert!(a.is_subset(&ca));
            let ab = a.union(&b).unwrap();
            prop_assert!(ca.is_subset(&close(&ab)));
        }
        prop_assert!(coarsening_closure(&a).is_subset(&dominance_upward_closure(&a)));
    }

    #[test]
    fn complements_swap_saturation((a, _b) in pair_of_subsets()) {
        prop_assert_eq!(a.is_cosaturated(), a.complement().is_saturated());
        prop_assert_eq!(a.is_cosaturated(), a.transpose().is_saturated());
    }
}
