//! Seeded random monomial ideals for verification campaigns.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{ExponentVector, MonomialIdeal};

/// Shape of the random ideals drawn by [`random_ideal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealShape {
    pub min_dimension: usize,
    pub max_dimension: usize,
    pub max_generators: usize,
    pub max_exponent: u32,
}

impl Default for IdealShape {
    fn default() -> Self {
        IdealShape { min_dimension: 1, max_dimension: 3, max_generators: 5, max_exponent: 5 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` per-instance seeds derived from a campaign seed.
pub fn derive_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = rng(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// A proper ideal with 1..=max_generators generators, none of them `1`.
pub fn random_ideal<R: Rng>(rng: &mut R, dimension: usize, shape: &IdealShape) -> MonomialIdeal {
    let count = rng.random_range(1..=shape.max_generators);
    let mut raw = Vec::with_capacity(count);
    while raw.len() < count {
        let coords: Vec<u32> = (0..dimension).map(|_| rng.random_range(0..=shape.max_exponent)).collect();
        if coords.iter().any(|&e| e > 0) {
            raw.push(ExponentVector::new(coords));
        }
    }
    MonomialIdeal::minimalize(dimension, raw).expect("nonempty generators of matching dimension")
}

/// Dimension drawn from the shape, then an ideal in that dimension.
pub fn random_ideal_any_dimension<R: Rng>(rng: &mut R, shape: &IdealShape) -> MonomialIdeal {
    let dimension = rng.random_range(shape.min_dimension..=shape.max_dimension);
    random_ideal(rng, dimension, shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let shape = IdealShape::default();
        let a = random_ideal_any_dimension(&mut rng(7), &shape);
        let b = random_ideal_any_dimension(&mut rng(7), &shape);
        assert_eq!(a, b);
        assert_eq!(derive_seeds(3, 4), derive_seeds(3, 4));
    }

    #[test]
    fn respects_shape() {
        let shape = IdealShape::default();
        let mut r = rng(11);
        for _ in 0..100 {
            let i = random_ideal_any_dimension(&mut r, &shape);
            assert!((1..=3).contains(&i.dimension()));
            assert!(i.generators().len() <= 5);
            assert!(i.max_exponent() <= 5);
            assert!(!i.is_unit());
        }
    }
}
