mod common;

use common::{ideal_in, raw_ideal};
use multiplier_core::{ExponentVector, MonomialIdeal};
use proptest::prelude::*;

fn box_points(d: usize, max: u32) -> Vec<ExponentVector> {
    let mut points = vec![vec![]];
    for _ in 0..d {
        points = points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=max).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    points.into_iter().map(ExponentVector::new).collect()
}

fn pair(max_exponent: u32) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(move |d| (ideal_in(d, 4, max_exponent), ideal_in(d, 4, max_exponent)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimalize_is_idempotent(d in 1usize..=3, seed in raw_ideal(3, 6, 4)) {
        let raw: Vec<ExponentVector> = seed.into_iter().map(|g| ExponentVector::new(g[..d].to_vec())).collect();
        let once = MonomialIdeal::minimalize(d, raw).unwrap();
        let twice = MonomialIdeal::minimalize(d, once.generators().to_vec()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn product_contains_generator_sums((i, j) in pair(4)) {
        let product = i.product(&j).unwrap();
        for g in i.generators() {
            for h in j.generators() {
                prop_assert!(product.contains_monomial(&g.checked_add(h).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn intersection_matches_membership((i, j) in pair(4)) {
        let meet = i.intersect(&j).unwrap();
        for w in box_points(i.dimension(), 8) {
            prop_assert_eq!(
                meet.contains_monomial(&w).unwrap(),
                i.contains_monomial(&w).unwrap() && j.contains_monomial(&w).unwrap()
            );
        }
    }

    #[test]
    fn product_is_commutative_and_associative((i, j) in pair(3), k in 0u32..3) {
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        let left = i.product(&j).unwrap().product(&i).unwrap();
        let right = i.product(&j.product(&i).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(i.power(k + 1).unwrap(), i.power(k).unwrap().product(&i).unwrap());
    }

    #[test]
    fn restriction_membership(i in (2usize..=3).prop_flat_map(|d| ideal_in(d, 5, 4)), k in 0usize..3) {
        let k = k % i.dimension();
        match i.restrict_to_hyperplane(k) {
            Ok(restricted) => {
                for w in box_points(i.dimension() - 1, 6) {
                    let lifted = w.with_inserted(k, 0);
                    let expected = i.generators().iter().any(|g| g.coords()[k] == 0 && g.divides(&lifted));
                    prop_assert_eq!(restricted.contains_monomial(&w).unwrap(), expected);
                }
            }
            Err(_) => prop_assert!(i.generators().iter().all(|g| g.coords()[k] > 0)),
        }
    }

    #[test]
    fn radical_and_sum(i in (1usize..=3).prop_flat_map(|d| ideal_in(d, 4, 4))) {
        let radical = i.radical();
        prop_assert!(radical.is_squarefree());
        prop_assert!(radical.contains_ideal(&i).unwrap());
        prop_assert_eq!(i.sum(&i).unwrap(), i.clone());
        let top = i.max_exponent();
        prop_assert!(i.contains_ideal(&radical.power(top * i.dimension() as u32).unwrap()).unwrap());
    }
}
