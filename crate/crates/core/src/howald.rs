//! Multiplier ideals of monomial ideals.
//!
//! `x^w ∈ J(a^c)` exactly when `w + 𝟏` lies in the interior of `c·P(a)`. With
//! integer facet normals that is `⟨v, w + 𝟏⟩ ≥ ⌊c·q⌋ + 1` for every facet
//! `⟨v, ξ⟩ ≥ q` of positive offset, which makes the whole computation a
//! lattice scan with integer comparisons.
//!
//! Minimal generators are found column by column: for each prefix
//! `(w₁, …, w_{d-1})` inside the box `wᵢ ≤ max ⌊c·q / vᵢ⌋` the least admissible
//! last coordinate is solved for directly. A minimal generator `w` with
//! `wᵢ > 0` has `w − eᵢ` outside the interior, which forces `vᵢ·wᵢ ≤ c·q` on
//! some facet, so the box contains every minimal generator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::limits::Limits;
use crate::newton::{newton_polyhedron_with, scale_combination, NewtonPolyhedron};
use crate::rational::Rational;

fn check_coefficient(c: &Rational) -> Result<()> {
    if c.is_negative() {
        return Err(Error::Coefficient { requirement: "non-negative", value: c.to_string() });
    }
    Ok(())
}

/// `J(a^c)`.
pub fn multiplier_ideal(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    multiplier_ideal_with(ideal, c, &Limits::default())
}

pub fn multiplier_ideal_with(ideal: &MonomialIdeal, c: &Rational, limits: &Limits) -> Result<MonomialIdeal> {
    check_coefficient(c)?;
    if c.is_zero() {
        return MonomialIdeal::unit(ideal.dimension());
    }
    let polyhedron = newton_polyhedron_with(ideal, limits)?;
    polyhedron_multiplier_ideal(&polyhedron, c)
}

/// Monomials `x^w` with `w + 𝟏` in the interior of `c·P`.
pub fn polyhedron_multiplier_ideal(polyhedron: &NewtonPolyhedron, c: &Rational) -> Result<MonomialIdeal> {
    check_coefficient(c)?;
    let d = polyhedron.dimension();
    if c.is_zero() {
        return MonomialIdeal::unit(d);
    }
    let mut normals = Vec::new();
    let mut needs = Vec::new();
    let mut bounds = vec![0u32; d];
    for facet in polyhedron.positive_facets() {
        let threshold = facet.offset() * c;
        needs.push(threshold.floor().to_integer() + BigInt::one());
        for (i, v) in facet.normal().iter().enumerate() {
            if v.is_positive() {
                let cap = (&threshold / Rational::from_integer(v.clone()))
                    .floor()
                    .to_integer()
                    .to_u32()
                    .ok_or(Error::Overflow("multiplier ideal enumeration box"))?;
                bounds[i] = bounds[i].max(cap);
            }
        }
        normals.push(facet.normal().to_vec());
    }

    let small = normals.iter().flatten().chain(&needs).all(|x| x.to_i64().is_some());
    let generators = if small {
        let normals: Vec<Vec<i128>> =
            normals.iter().map(|n| n.iter().map(|x| i128::from(x.to_i64().unwrap())).collect()).collect();
        let needs: Vec<i128> = needs.iter().map(|x| i128::from(x.to_i64().unwrap())).collect();
        staircase(d, &normals, &needs, &bounds)
    } else {
        staircase(d, &normals, &needs, &bounds)
    };
    MonomialIdeal::minimalize(d, generators)
}

trait Scalar: Clone + Ord + Integer + From<u32> + ToPrimitive {}
impl<T: Clone + Ord + Integer + From<u32> + ToPrimitive> Scalar for T {}

/// Minimal lattice points `w` with `⟨normalₖ, w + 𝟏⟩ ≥ needₖ` for all `k`.
fn staircase<T: Scalar>(d: usize, normals: &[Vec<T>], needs: &[T], bounds: &[u32]) -> Vec<ExponentVector> {
    let last = d - 1;
    let prefix_bounds = &bounds[..last];
    let columns: usize = prefix_bounds.iter().map(|&b| b as usize + 1).product();
    let mut strides = vec![1usize; last];
    for i in (0..last.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (prefix_bounds[i + 1] as usize + 1);
    }

    let mut heights: Vec<Option<u32>> = Vec::with_capacity(columns);
    let mut prefix = vec![0u32; last];
    for index in 0..columns {
        if index > 0 {
            for i in (0..last).rev() {
                if prefix[i] < prefix_bounds[i] {
                    prefix[i] += 1;
                    break;
                }
                prefix[i] = 0;
            }
        }
        heights.push(column_height(normals, needs, &prefix));
    }

    let mut generators = Vec::new();
    let mut prefix = vec![0u32; last];
    for index in 0..columns {
        if index > 0 {
            for i in (0..last).rev() {
                if prefix[i] < prefix_bounds[i] {
                    prefix[i] += 1;
                    break;
                }
                prefix[i] = 0;
            }
        }
        let Some(height) = heights[index] else {
            continue;
        };
        let minimal =
            (0..last).all(|i| prefix[i] == 0 || heights[index - strides[i]].is_none_or(|below| below > height));
        if minimal {
            let mut coords = prefix.clone();
            coords.push(height);
            generators.push(ExponentVector::new(coords));
        }
    }
    generators
}

/// Least last coordinate completing `prefix` to an admissible point.
fn column_height<T: Scalar>(normals: &[Vec<T>], needs: &[T], prefix: &[u32]) -> Option<u32> {
    let last = prefix.len();
    let mut height = T::zero();
    for (normal, need) in normals.iter().zip(needs) {
        let mut partial = T::zero();
        for (v, &w) in normal.iter().zip(prefix) {
            partial = partial + v.clone() * T::from(w + 1);
        }
        let v_last = &normal[last];
        if v_last.is_zero() {
            if partial < *need {
                return None;
            }
            continue;
        }
        if partial >= *need {
            continue;
        }
        // v_last·(h + 1) ≥ need − partial
        let required = (need.clone() - partial).div_ceil(v_last) - T::one();
        if required > height {
            height = required;
        }
    }
    height.to_u32()
}

/// `J(a^c · b^e)`, computed on `c·P(a) + e·P(b)`.
pub fn mixed_multiplier_ideal(
    a: &MonomialIdeal,
    c: &Rational,
    b: &MonomialIdeal,
    e: &Rational,
) -> Result<MonomialIdeal> {
    mixed_multiplier_ideal_with(a, c, b, e, &Limits::default())
}

pub fn mixed_multiplier_ideal_with(
    a: &MonomialIdeal,
    c: &Rational,
    b: &MonomialIdeal,
    e: &Rational,
    limits: &Limits,
) -> Result<MonomialIdeal> {
    check_coefficient(c)?;
    check_coefficient(e)?;
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch { expected: a.dimension(), found: b.dimension() });
    }
    if c.is_zero() && e.is_zero() {
        return MonomialIdeal::unit(a.dimension());
    }
    let combined = scale_combination(a, c, b, e, limits)?;
    polyhedron_multiplier_ideal(&combined, &Rational::one())
}

/// `min ⟨v, w + 𝟏⟩ / q` over facets of positive offset; `None` for the orthant.
pub fn polyhedron_entry_threshold(polyhedron: &NewtonPolyhedron, w: &ExponentVector) -> Option<Rational> {
    polyhedron.positive_facets().map(|f| Rational::from_integer(f.evaluate_shifted(w)) / f.offset()).min()
}

/// The coefficient at which `x^w` leaves `J(a^c)`: `x^w ∈ J(a^c) ⇔ c < c*(w)`.
pub fn entry_threshold(ideal: &MonomialIdeal, w: &ExponentVector) -> Result<Rational> {
    if w.dimension() != ideal.dimension() {
        return Err(Error::DimensionMismatch { expected: ideal.dimension(), found: w.dimension() });
    }
    let polyhedron = newton_polyhedron_with(ideal, &Limits::default())?;
    polyhedron_entry_threshold(&polyhedron, w).ok_or(Error::UnitIdeal)
}

/// Log-canonical threshold: the least `c` with `J(a^c)` non-trivial.
pub fn lct(ideal: &MonomialIdeal) -> Result<Rational> {
    entry_threshold(ideal, &ExponentVector::zero(ideal.dimension()))
}

/// A jumping number and the multiplier ideal on `[ξ, next jump)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jump {
    pub coefficient: Rational,
    pub ideal_after: MonomialIdeal,
}

/// Jumping numbers of a polyhedron in increasing order, without bound.
///
/// Each step takes the least entry threshold over the minimal generators of
/// the current ideal; thresholds are non-decreasing in `w`, so that is the
/// least threshold over the whole ideal.
#[derive(Debug, Clone)]
pub struct Jumps {
    polyhedron: NewtonPolyhedron,
    current: MonomialIdeal,
}

impl Jumps {
    pub fn new(polyhedron: NewtonPolyhedron) -> Result<Self> {
        if polyhedron.positive_facets().next().is_none() {
            return Err(Error::UnitIdeal);
        }
        let current = MonomialIdeal::unit(polyhedron.dimension())?;
        Ok(Jumps { polyhedron, current })
    }
}

impl Iterator for Jumps {
    type Item = Result<Jump>;

    fn next(&mut self) -> Option<Self::Item> {
        let coefficient =
            self.current.generators().iter().filter_map(|g| polyhedron_entry_threshold(&self.polyhedron, g)).min()?;
        let ideal_after = match polyhedron_multiplier_ideal(&self.polyhedron, &coefficient) {
            Ok(ideal) => ideal,
            Err(err) => return Some(Err(err)),
        };
        debug_assert!(ideal_after != self.current);
        self.current = ideal_after.clone();
        Some(Ok(Jump { coefficient, ideal_after }))
    }
}

/// Jumping numbers `ξ ≤ bound` with the ideal following each jump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingSequence {
    pub ideal: MonomialIdeal,
    pub bound: Rational,
    pub jumps: Vec<Jump>,
}

impl JumpingSequence {
    pub fn coefficients(&self) -> Vec<Rational> {
        self.jumps.iter().map(|j| j.coefficient.clone()).collect()
    }

    /// `J(a^c)` for `0 ≤ c ≤ bound`, read off the sequence.
    pub fn ideal_at(&self, c: &Rational) -> Option<MonomialIdeal> {
        if c.is_negative() || *c > self.bound {
            return None;
        }
        match self.jumps.iter().rev().find(|j| j.coefficient <= *c) {
            Some(jump) => Some(jump.ideal_after.clone()),
            None => MonomialIdeal::unit(self.ideal.dimension()).ok(),
        }
    }
}

pub fn jumping_numbers(ideal: &MonomialIdeal, bound: &Rational) -> Result<JumpingSequence> {
    jumping_numbers_with(ideal, bound, &Limits::default())
}

pub fn jumping_numbers_with(ideal: &MonomialIdeal, bound: &Rational, limits: &Limits) -> Result<JumpingSequence> {
    let polyhedron = newton_polyhedron_with(ideal, limits)?;
    let mut jumps = Vec::new();
    for jump in Jumps::new(polyhedron)? {
        let jump = jump?;
        if jump.coefficient > *bound {
            break;
        }
        jumps.push(jump);
    }
    Ok(JumpingSequence { ideal: ideal.clone(), bound: bound.clone(), jumps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ideal(d: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(d, gens).unwrap()
    }

    fn staircase() -> MonomialIdeal {
        ideal(2, &[&[4, 0], &[2, 1], &[1, 2], &[0, 5]])
    }

    #[test]
    fn staircase_multiplier_ideal() {
        let j = multiplier_ideal(&staircase(), &int(1)).unwrap();
        assert_eq!(j, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let below = multiplier_ideal(&staircase(), &ratio(9, 10)).unwrap();
        assert!(below.contains_ideal(&MonomialIdeal::maximal(2).unwrap()).unwrap());
    }

    #[test]
    fn zero_coefficient_gives_unit() {
        assert!(multiplier_ideal(&staircase(), &int(0)).unwrap().is_unit());
        assert!(multiplier_ideal(&staircase(), &int(-1)).is_err());
    }

    #[test]
    fn powers_of_the_maximal_ideal() {
        for d in 1..=4usize {
            let m = MonomialIdeal::maximal(d).unwrap();
            for l in 1..=4u32 {
                let c = int(i64::from(l) + d as i64 - 1);
                assert_eq!(multiplier_ideal(&m, &c).unwrap(), m.power(l).unwrap());
            }
        }
    }

    #[test]
    fn diagonal_threshold() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(lct(&a).unwrap(), ratio(5, 6));
        assert!(multiplier_ideal(&a, &ratio(4, 5)).unwrap().is_unit());
        assert!(!multiplier_ideal(&a, &ratio(5, 6)).unwrap().is_unit());
        let cusp = ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(lct(&cusp).unwrap(), ratio(5, 6));
    }

    #[test]
    fn entry_thresholds() {
        let diag = MonomialIdeal::diagonal(&[2, 3, 5]).unwrap();
        let w = ExponentVector::from([1, 0, 2]);
        assert_eq!(entry_threshold(&diag, &w).unwrap(), ratio(2, 2) + ratio(1, 3) + ratio(3, 5));
        let m = MonomialIdeal::maximal(3).unwrap();
        assert_eq!(entry_threshold(&m, &ExponentVector::from([2, 0, 1])).unwrap(), int(6));
        assert_eq!(lct(&staircase()).unwrap(), ratio(2, 3));
        assert_eq!(lct(&MonomialIdeal::unit(2).unwrap()), Err(Error::UnitIdeal));
    }

    #[test]
    fn maximal_ideal_jumps() {
        for d in 1..=3usize {
            let m = MonomialIdeal::maximal(d).unwrap();
            let seq = jumping_numbers(&m, &int(d as i64 + 2)).unwrap();
            let expected: Vec<Rational> = (0..3).map(|k| int(d as i64 + k)).collect();
            assert_eq!(seq.coefficients(), expected);
            for (k, jump) in seq.jumps.iter().enumerate() {
                assert_eq!(jump.ideal_after, m.power(k as u32 + 1).unwrap());
            }
        }
    }

    #[test]
    fn diagonal_jumps_up_to_two() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let seq = jumping_numbers(&a, &int(2)).unwrap();
        assert_eq!(
            seq.coefficients(),
            vec![ratio(5, 6), ratio(7, 6), ratio(4, 3), ratio(3, 2), ratio(5, 3), ratio(11, 6), int(2)]
        );
        assert_eq!(seq.ideal_at(&ratio(1, 2)).unwrap(), MonomialIdeal::unit(2).unwrap());
        assert_eq!(seq.ideal_at(&int(1)).unwrap(), seq.jumps[0].ideal_after);
        assert!(seq.ideal_at(&int(3)).is_none());
    }

    #[test]
    fn mixed_reductions() {
        let a = staircase();
        let unit = MonomialIdeal::unit(2).unwrap();
        assert_eq!(
            mixed_multiplier_ideal(&a, &ratio(3, 2), &unit, &int(0)).unwrap(),
            multiplier_ideal(&a, &ratio(3, 2)).unwrap()
        );
        assert_eq!(
            mixed_multiplier_ideal(&a, &ratio(1, 3), &a, &ratio(5, 6)).unwrap(),
            multiplier_ideal(&a, &ratio(7, 6)).unwrap()
        );
        let m = MonomialIdeal::maximal(2).unwrap();
        let mixed = mixed_multiplier_ideal(&m, &int(1), &a, &int(1)).unwrap();
        let bound = multiplier_ideal(&m, &int(1)).unwrap().product(&multiplier_ideal(&a, &int(1)).unwrap()).unwrap();
        assert!(bound.contains_ideal(&mixed).unwrap());
    }
}
