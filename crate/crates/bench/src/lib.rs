//! Benchmark inputs shared by the criterion suites.

use multiplier_core::random::{self, IdealShape};
use multiplier_core::MonomialIdeal;

pub fn staircase() -> MonomialIdeal {
    MonomialIdeal::from_exponents(2, &[&[4, 0], &[2, 1], &[1, 2], &[0, 5]]).expect("valid ideal")
}

/// A fixed batch of random ideals of the given dimension.
pub fn random_batch(seed: u64, dimension: usize, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = random::rng(seed);
    let shape = IdealShape { min_dimension: dimension, max_dimension: dimension, ..IdealShape::default() };
    (0..count).map(|_| random::random_ideal(&mut rng, dimension, &shape)).collect()
}
