mod common;

use common::ideal_in;
use multiplier_core::symbolic::{analyze, check_graded_chain, check_symbolic_containment, symbolic_power};
use multiplier_core::{MonomialIdeal, SquarefreeIdeal};
use proptest::prelude::*;

fn squarefree() -> impl Strategy<Value = SquarefreeIdeal> {
    (1usize..=4).prop_flat_map(|d| ideal_in(d, 4, 1)).prop_map(|i: MonomialIdeal| analyze(&i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ordinary_inside_symbolic(q in squarefree()) {
        for m in 1..=5 {
            let ordinary = q.base().power(m).unwrap();
            prop_assert!(symbolic_power(&q, m).unwrap().contains_ideal(&ordinary).unwrap());
        }
        prop_assert_eq!(&symbolic_power(&q, 1).unwrap(), q.base());
    }

    #[test]
    fn graded_family_law(q in squarefree(), l in 1u32..=3, m in 1u32..=3) {
        let product = symbolic_power(&q, l).unwrap().product(&symbolic_power(&q, m).unwrap()).unwrap();
        prop_assert!(symbolic_power(&q, l + m).unwrap().contains_ideal(&product).unwrap());
    }

    #[test]
    fn smooth_collapse(q in squarefree()) {
        if q.minimal_primes().len() == 1 {
            for m in 1..=5 {
                prop_assert_eq!(symbolic_power(&q, m).unwrap(), q.base().power(m).unwrap());
            }
        }
    }

    #[test]
    fn containment_theorems(q in squarefree(), m in 1u32..=2) {
        prop_assert!(check_symbolic_containment(&q, m).unwrap().passed());
        prop_assert!(check_graded_chain(&q, m, 2).unwrap().passed());
    }

    #[test]
    fn primes_are_minimal_covers(q in squarefree()) {
        for prime in q.minimal_primes() {
            for g in q.base().generators() {
                prop_assert!(prime.iter().any(|&i| g.coords()[i] == 1));
            }
        }
    }
}
