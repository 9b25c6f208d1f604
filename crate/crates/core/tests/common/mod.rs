#![allow(dead_code)]

use multiplier_core::{ExponentVector, MonomialIdeal, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn raw_ideal(d: usize, max_generators: usize, max_exponent: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exponent, d), 1..=max_generators)
}

/// Proper ideals (no unit generator) of dimension 1..=3.
pub fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|d| ideal_in(d, 5, 5))
}

pub fn ideal_in(d: usize, max_generators: usize, max_exponent: u32) -> impl Strategy<Value = MonomialIdeal> {
    raw_ideal(d, max_generators, max_exponent)
        .prop_filter("proper", |gens| gens.iter().all(|g| g.iter().any(|&e| e > 0)))
        .prop_map(move |gens| MonomialIdeal::minimalize(d, gens.into_iter().map(ExponentVector::new)).unwrap())
}

/// Positive rationals with small denominators.
pub fn coefficient() -> impl Strategy<Value = Rational> {
    (1i64..=16, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn generators(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.generators().iter().map(|g| g.coords().to_vec()).collect()
}

pub fn shifted(w: &ExponentVector) -> Vec<Rational> {
    w.coords().iter().map(|&e| Rational::from_integer(BigInt::from(e + 1))).collect()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
