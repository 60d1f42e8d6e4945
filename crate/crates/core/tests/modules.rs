use std::collections::VecDeque;

use hecke_centraliser::algebra::{Matrix, PrimeField, RationalFunctions, Rationals, Ring};
use hecke_centraliser::modules::{
    build_signed_module, build_young_module, coset_space_module, direct_sum,
    tensor_index_closed_form, tensor_orbit_profile, tensor_space_module, tensor_zeta_closed_form,
    young_sum, ModuleRep, Summand,
};
use hecke_centraliser::partitions::{partitions_of, Partition};
use hecke_centraliser::perm::{factorial, Perm};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn relations_and_dimensions_for_every_builder() {
    let k = RationalFunctions::new(Rationals);
    let f = PrimeField::new(101).unwrap();
    for n in 1..=5 {
        for lambda in partitions_of(n).iter() {
            let expected = factorial(n)
                / lambda
                    .parts()
                    .iter()
                    .map(|&a| factorial(a))
                    .product::<usize>();
            if n <= 4 {
                let y = build_young_module(k.clone(), lambda, k.t()).unwrap();
                let s = build_signed_module(k.clone(), lambda, k.t()).unwrap();
                assert!(y.verify_relations() && s.verify_relations(), "{lambda}");
                assert_eq!((y.dim(), s.dim()), (expected, expected));
            }
            let y = build_young_module(f, lambda, 7).unwrap();
            let s = build_signed_module(f, lambda, 7).unwrap();
            assert!(
                y.verify_relations() && s.verify_relations(),
                "{lambda} over F_101"
            );
            assert_eq!((y.dim(), s.dim()), (expected, expected));
        }
    }
    let sum = young_sum(
        f,
        4,
        7,
        &[
            Summand::young(p(&[3, 1])),
            Summand::signed(p(&[2, 2])),
            Summand::young(p(&[4])),
        ],
    )
    .unwrap();
    assert!(sum.verify_relations());
    assert_eq!(sum.dim(), 4 + 6 + 1);
    assert!(sum.sharp_twist().verify_relations());
    let x = tensor_space_module(3, 2, 3)
        .unwrap()
        .to_module(Rationals)
        .unwrap();
    assert!(x.verify_relations());
}

#[test]
fn direct_sum_rejects_mixed_parameters() {
    let f = PrimeField::new(5).unwrap();
    let a = build_young_module(f, &p(&[2, 1]), 2).unwrap();
    let b = build_young_module(f, &p(&[2, 1]), 3).unwrap();
    assert!(direct_sum(&[a, b]).is_err());
}

/// Matches basis vectors of two permutation modules by following the
/// generators out from a base point, then compares every generator.
fn isomorphic_by_relabelling<R: Ring>(a: &ModuleRep<R>, b: &ModuleRep<R>) -> bool {
    let ring = a.ring();
    let image = |m: &Matrix<R::Elem>, j: usize| (0..m.nrows()).find(|&i| ring.is_one(&m.row(i)[j]));
    let n = a.rank();
    let (ga, gb): (Vec<_>, Vec<_>) = (1..n)
        .map(|i| (a.generator_matrix(i), b.generator_matrix(i)))
        .unzip();
    let mut map = vec![None; a.dim()];
    map[0] = Some(0);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let y = map[x].unwrap();
        for (ma, mb) in ga.iter().zip(&gb) {
            let (Some(x2), Some(y2)) = (image(ma, x), image(mb, y)) else {
                return false;
            };
            match map[x2] {
                None => {
                    map[x2] = Some(y2);
                    queue.push_back(x2);
                }
                Some(prev) if prev != y2 => return false,
                _ => {}
            }
        }
    }
    let map: Vec<usize> = match map.into_iter().collect::<Option<Vec<_>>>() {
        Some(m) => m,
        None => return false,
    };
    ga.iter().zip(&gb).all(|(ma, mb)| {
        (0..a.dim()).all(|i| (0..a.dim()).all(|j| ma.row(i)[j] == mb.row(map[i])[map[j]]))
    })
}

#[test]
fn young_modules_at_q_one_are_coset_spaces() {
    let q = Rationals;
    for n in 2..=5 {
        for lambda in partitions_of(n).iter() {
            let gens: Vec<Perm> = hecke_centraliser::partitions::Composition::from(lambda)
                .generator_indices()
                .into_iter()
                .map(|i| Perm::simple(n, i))
                .collect();
            let cosets = coset_space_module(n, &gens).unwrap().to_module(q).unwrap();
            let young = build_young_module(q, lambda, q.one()).unwrap();
            assert_eq!(cosets.dim(), young.dim());
            assert!(isomorphic_by_relabelling(&young, &cosets), "{lambda}");
        }
    }
}

#[test]
fn tensor_profiles_match_closed_forms() {
    for n in 1..=5 {
        for r in 1..=3 {
            for m in 1..=n {
                let (zeta, idx) = tensor_orbit_profile(n, r, m).unwrap();
                assert_eq!(
                    zeta,
                    tensor_zeta_closed_form(n, r, m).unwrap(),
                    "(n,r,m)=({n},{r},{m})"
                );
                assert_eq!(
                    idx,
                    tensor_index_closed_form(n, r, m).unwrap(),
                    "(n,r,m)=({n},{r},{m})"
                );
            }
        }
    }
    assert_eq!(tensor_space_module(4, 2, 3).unwrap().size(), 16);
    assert!(tensor_orbit_profile(3, 1, 4).is_err());
}
